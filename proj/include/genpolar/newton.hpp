#pragma once

// Newton polygons of lattice point sets and sparse polynomials: the
// lower-left staircase hull of S + (R>=0)^2, compact-edge data, edge
// polynomials and the exact non-degeneracy test.

#include <vector>

#include "genpolar/lattice.hpp"
#include "genpolar/ratpoly.hpp"
#include "genpolar/sparsepoly.hpp"

namespace genpolar {

struct CompactEdge {
    LatticePoint from;  // smaller abscissa, larger ordinate
    LatticePoint to;
    long len1 = 0;  // horizontal projection |L|_1
    long len2 = 0;  // vertical projection |L|_2
    long d = 0;     // gcd(len1, len2)

    Rat inclination() const { return make_rat(Int(len1), Int(len2)); }
    Line line() const { return Line::through(RatPoint(from), RatPoint(to)); }

    bool operator==(const CompactEdge&) const = default;
};

struct NewtonPolygon {
    // Extreme points only, by increasing abscissa / decreasing ordinate.
    std::vector<LatticePoint> vertices;
    std::vector<CompactEdge> edges;

    bool operator==(const NewtonPolygon& o) const { return vertices == o.vertices; }
};

// Throws std::invalid_argument on an empty point set.
NewtonPolygon polygon_of_points(std::vector<LatticePoint> points);
NewtonPolygon polygon_of_poly(const SparsePoly& f);

// Point of the Newton diagram (the hull including its unbounded part).
bool diagram_contains(const NewtonPolygon& np, const LatticePoint& p);

// f_L(1, t) for a compact edge L of the polygon of f.
// Throws std::domain_error when L is not an edge of that polygon.
RatPoly edge_poly(const SparsePoly& f, const CompactEdge& L);

struct EdgeVerdict {
    CompactEdge edge;
    bool nondegenerate = false;
};

struct NondegeneracyReport {
    bool nondegenerate = true;
    std::vector<EdgeVerdict> per_edge;
};

// Newton non-degeneracy: every compact-edge polynomial has simple nonzero
// roots, decided by the exact square-free test.
NondegeneracyReport is_nondegenerate(const SparsePoly& f);

}  // namespace genpolar
