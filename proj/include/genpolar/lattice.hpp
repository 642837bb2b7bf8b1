#pragma once

// Lattice points, integer lines and exact side-of-line tests.  Everything
// here is exact: lines carry integer coefficients, rational points are
// handled by clearing denominators.

#include <compare>
#include <vector>

#include "genpolar/ints.hpp"

namespace genpolar {

struct LatticePoint {
    long i = 0;
    long j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

struct RatPoint {
    Rat x;
    Rat y;
    RatPoint() = default;
    RatPoint(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
    RatPoint(const LatticePoint& p) : x(p.i), y(p.j) {}
};

enum class Side { BELOW, ON, ABOVE };

// Line a*x + b*y = c with gcd(a,b,c) = 1 and a > 0, or a == 0 and b > 0.
// A point is ABOVE when a*x + b*y > c.  The canonical sign matches the way
// the lines l_{N,M}, l_{N,B}, l_{sigma,A}, l_{A,Q} are written (positive
// leading coefficient), so ABOVE/BELOW keep their geometric meaning.
struct Line {
    Int a, b, c;

    static Line from_coeffs(Int a, Int b, Int c);
    // Throws when p == q.
    static Line through(const RatPoint& p, const RatPoint& q);
    // Slope -n/m through h:  n*x + m*y = n*h.x + m*h.y.
    static Line with_slope_nm(long n, long m, const RatPoint& h);

    bool operator==(const Line&) const = default;
};

Side point_vs_line(const RatPoint& p, const Line& l);
inline Side point_vs_line(const LatticePoint& p, const Line& l) {
    return point_vs_line(RatPoint(p), l);
}

}  // namespace genpolar
