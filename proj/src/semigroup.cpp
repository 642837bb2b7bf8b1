#include "genpolar/semigroup.hpp"

#include <algorithm>
#include <sstream>

namespace genpolar {

CharSequence CharSequence::from_exponents(std::vector<Int> beta) {
    if (beta.empty()) throw std::invalid_argument("characteristic exponents: empty sequence");
    for (const Int& b : beta)
        if (b < 1) throw std::invalid_argument("characteristic exponents must be positive");
    for (std::size_t k = 1; k < beta.size(); ++k)
        if (beta[k] <= beta[k - 1])
            throw std::invalid_argument("characteristic exponents must strictly increase");

    CharSequence c;
    c.e.push_back(beta[0]);
    for (std::size_t k = 1; k < beta.size(); ++k) {
        const Int g = int_gcd(c.e.back(), beta[k]);
        if (g >= c.e.back())
            throw std::invalid_argument("gcd chain must strictly drop at each exponent");
        c.e.push_back(g);
    }
    if (c.e.back() != 1) throw std::invalid_argument("gcd chain must end at 1");
    c.beta = std::move(beta);
    return c;
}

namespace {

// Membership in the monoid generated by gens (gcd may exceed 1).
bool monoid_contains(const std::vector<Int>& gens, const Int& z) {
    if (z < 0) return false;
    if (z == 0) return true;
    if (gens.empty()) return false;
    if (!z.fits_slong_p()) throw std::invalid_argument("membership target too large");
    const long zl = z.get_si();
    std::vector<char> reach(static_cast<std::size_t>(zl) + 1, 0);
    reach[0] = 1;
    for (long v = 1; v <= zl; ++v) {
        for (const Int& g : gens) {
            if (g > v) break;  // gens sorted
            if (reach[static_cast<std::size_t>(v - g.get_si())]) {
                reach[static_cast<std::size_t>(v)] = 1;
                break;
            }
        }
    }
    return reach[static_cast<std::size_t>(zl)] != 0;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Int> gens) {
    if (gens.empty()) throw std::invalid_argument("semigroup needs at least one generator");
    for (const Int& g : gens)
        if (g < 1) throw std::invalid_argument("generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Int g = gens[0];
    for (const Int& v : gens) g = int_gcd(g, v);
    if (g != 1) throw std::invalid_argument("generators must have gcd 1");

    // Strip redundant generators, largest first.
    for (std::size_t k = gens.size(); k-- > 0;) {
        if (gens.size() == 1) break;
        std::vector<Int> rest;
        rest.reserve(gens.size() - 1);
        for (std::size_t l = 0; l < gens.size(); ++l)
            if (l != k) rest.push_back(gens[l]);
        if (monoid_contains(rest, gens[k])) gens.erase(gens.begin() + static_cast<long>(k));
    }

    NumericalSemigroup s;
    s.gens = std::move(gens);
    return s;
}

bool NumericalSemigroup::contains(const Int& z) const {
    if (gens.size() == 2 && gens[0] > 1) return semigroup_contains(gens[0], gens[1], z);
    return monoid_contains(gens, z);
}

std::string NumericalSemigroup::str() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) os << ',';
        os << gens[k].get_str();
    }
    os << '>';
    return os.str();
}

NumericalSemigroup gens_from_char_exponents(const CharSequence& c) {
    std::vector<Int> v;
    v.push_back(c.beta[0]);
    if (c.genus() >= 1) v.push_back(c.beta[1]);
    for (int j = 2; j <= c.genus(); ++j) {
        const Int nj = c.e[j - 2] / c.e[j - 1];
        v.push_back(nj * v[j - 1] + c.beta[j] - c.beta[j - 1]);
    }
    NumericalSemigroup s = NumericalSemigroup::from_generators(v);
    if (s.gens != v)
        throw std::invalid_argument("characteristic exponents gave a non-minimal system");
    return s;
}

CharSequence char_exponents_from_gens(const NumericalSemigroup& s) {
    const std::vector<Int>& v = s.gens;
    auto bad = [&](const char* why) {
        return std::invalid_argument(std::string("not a plane-branch semigroup: ") + why);
    };
    std::vector<Int> beta;
    beta.push_back(v[0]);
    if (v.size() == 1) {
        if (v[0] != 1) throw bad("single generator must be 1");
        return CharSequence::from_exponents(beta);
    }
    beta.push_back(v[1]);
    std::vector<Int> e{v[0], int_gcd(v[0], v[1])};
    if (e[1] >= e[0]) throw bad("v1 must not be a multiple of v0");
    for (std::size_t j = 2; j < v.size(); ++j) {
        const Int nj = e[j - 2] / e[j - 1];
        if (v[j] <= nj * v[j - 1]) throw bad("v_j <= n_{j-1} v_{j-1}");
        const Int b = v[j] - nj * v[j - 1] + beta[j - 1];
        if (b <= beta[j - 1]) throw bad("characteristic exponents must increase");
        const Int g = int_gcd(e[j - 1], b);
        if (g >= e[j - 1]) throw bad("gcd chain must strictly drop");
        beta.push_back(b);
        e.push_back(g);
    }
    if (e.back() != 1) throw bad("gcd chain must end at 1");
    CharSequence c = CharSequence::from_exponents(std::move(beta));
    if (gens_from_char_exponents(c) != s) throw bad("round trip failed");
    return c;
}

bool semigroup_contains(const Int& n, const Int& m, const Int& z) {
    if (n <= 1 || m <= n) throw std::invalid_argument("need 1 < n < m");
    if (int_gcd(n, m) != 1) throw std::invalid_argument("n, m must be coprime");
    if (z < 0) return false;
    // z = s0*n + s1*m with 0 <= s1 < n; member iff s0 >= 0.
    Int minv;
    if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t()) == 0)
        throw std::invalid_argument("n, m must be coprime");
    Int s1 = (z % n) * minv % n;
    if (s1 < 0) s1 += n;
    const Int s0 = (z - s1 * m) / n;
    return s0 >= 0;
}

Int conductor(const Int& n, const Int& m) {
    if (n < 1 || m < n) throw std::invalid_argument("need 1 <= n <= m");
    if (int_gcd(n, m) != 1) throw std::invalid_argument("n, m must be coprime");
    if (n == 1) return 0;
    return (n - 1) * (m - 1);
}

}  // namespace genpolar
