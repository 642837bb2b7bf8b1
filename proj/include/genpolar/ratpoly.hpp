#pragma once

// Dense univariate polynomials over Q: division, Euclidean gcd with monic
// normalization, square-freeness of the nonzero roots, resultants.

#include <vector>

#include "genpolar/ints.hpp"

namespace genpolar {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rat& a) { return RatPoly(std::vector<Rat>{a}); }
    // t^k
    static RatPoly monomial(std::size_t k, const Rat& a);

    bool is_zero() const { return c_.empty(); }
    // Degree, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat lead() const;

    // Largest k with t^k dividing the polynomial (0 for the zero poly).
    std::size_t valuation() const;
    RatPoly strip_valuation() const;

    RatPoly derivative() const;
    RatPoly monic() const;
    Rat eval(const Rat& x) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly&) const = default;

    // Quotient/remainder; throws on zero divisor.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;  // c_[k] multiplies t^k; no trailing zeros
};

// Monic gcd (Euclid over Q).
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

// True when every nonzero root is simple: gcd(g, g') is constant for
// g the input stripped of its t-power factor.
bool nonzero_roots_simple(const RatPoly& f);

// Sylvester-determinant resultant (Gaussian elimination over Q).
Rat resultant(const RatPoly& f, const RatPoly& g);

}  // namespace genpolar
