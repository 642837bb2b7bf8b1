#pragma once

// Exact arithmetic carriers.  Semigroup and polynomial arithmetic is
// arbitrary precision (GMP); lattice coordinates are machine integers
// bounded by polynomial supports.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace genpolar {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long ll_gcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical rendering: reduced "p/q" with q > 0, plain "p" when q == 1.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Accepts "p" or "p/q" with integer p, q.  Anything else (floats included)
// is rejected.
Rat parse_rational(const std::string& text);

}  // namespace genpolar
