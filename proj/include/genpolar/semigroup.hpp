#pragma once

// Numerical semigroups of plane branches and characteristic-exponent
// conversions.  Two-generator membership uses the unique representation
// z = s0*n + s1*m with 0 <= s1 < n (z is in <n,m> iff s0 >= 0); general
// membership is dynamic programming.

#include <vector>

#include "genpolar/ints.hpp"

namespace genpolar {

// (beta_0, ..., beta_g) strictly increasing with the gcd chain
// e_0 = beta_0, e_{k+1} = gcd(e_k, beta_{k+1}) strictly decreasing to 1.
struct CharSequence {
    std::vector<Int> beta;
    std::vector<Int> e;

    int genus() const { return static_cast<int>(beta.size()) - 1; }

    // Validates and fills the e chain; throws std::invalid_argument.
    static CharSequence from_exponents(std::vector<Int> beta);

    bool operator==(const CharSequence&) const = default;
};

// Minimal generator system v_0 < ... < v_g with gcd 1.
struct NumericalSemigroup {
    std::vector<Int> gens;

    // Sorts, deduplicates, removes redundant generators, checks gcd 1.
    static NumericalSemigroup from_generators(std::vector<Int> gens);

    bool contains(const Int& z) const;
    bool smooth() const { return gens.size() == 1 && gens[0] == 1; }
    std::string str() const;

    bool operator==(const NumericalSemigroup&) const = default;
};

// v_0 = beta_0, v_1 = beta_1, v_j = n_{j-1} v_{j-1} + beta_j - beta_{j-1}.
NumericalSemigroup gens_from_char_exponents(const CharSequence& c);

// Inverse of the recursion; throws std::invalid_argument when the
// generators are not the value semigroup of a plane branch.
CharSequence char_exponents_from_gens(const NumericalSemigroup& s);

// z in <n,m> for coprime 1 < n < m.  Throws std::invalid_argument on
// gcd(n,m) != 1.
bool semigroup_contains(const Int& n, const Int& m, const Int& z);

// Least c with c + N contained in <n,m>; (n-1)(m-1), or 0 when n == 1.
Int conductor(const Int& n, const Int& m);

}  // namespace genpolar
