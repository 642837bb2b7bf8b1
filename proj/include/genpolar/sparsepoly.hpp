#pragma once

// Sparse bivariate polynomials over Q, keyed by lattice exponents.
// The stored support is exactly the set of nonzero terms.

#include <map>
#include <string>
#include <vector>

#include "genpolar/lattice.hpp"
#include "genpolar/ratpoly.hpp"

namespace genpolar {

class SparsePoly {
public:
    SparsePoly() = default;

    static SparsePoly monomial(long i, long j, const Rat& a);

    // Adds a*x^i*y^j, erasing the term if the sum cancels.
    void add_term(long i, long j, const Rat& a);

    Rat coeff(long i, long j) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<LatticePoint, Rat>& terms() const { return terms_; }

    std::vector<LatticePoint> support() const;
    long deg_x() const;
    long deg_y() const;

    SparsePoly derivative_x() const;
    SparsePoly derivative_y() const;
    SparsePoly scaled(const Rat& s) const;
    SparsePoly operator+(const SparsePoly& o) const;

    // f(x0, y) as a dense polynomial in y.
    RatPoly eval_x(const Rat& x0) const;
    // Coefficient of y^j as a dense polynomial in x.
    RatPoly y_coefficient(long j) const;

    std::string str() const;

    bool operator==(const SparsePoly&) const = default;

private:
    std::map<LatticePoint, Rat> terms_;
};

}  // namespace genpolar
