#include "genpolar/newton.hpp"

#include <algorithm>

namespace genpolar {

namespace {

CompactEdge make_edge(const LatticePoint& a, const LatticePoint& b) {
    CompactEdge e;
    e.from = a;
    e.to = b;
    e.len1 = b.i - a.i;
    e.len2 = a.j - b.j;
    e.d = ll_gcd(e.len1, e.len2);
    return e;
}

}  // namespace

NewtonPolygon polygon_of_points(std::vector<LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("Newton polygon of an empty set");
    for (const LatticePoint& p : points)
        if (p.i < 0 || p.j < 0) throw std::invalid_argument("lattice points must be non-negative");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Dominance-minimal staircase: per abscissa the lowest point, then
    // strictly decreasing ordinates left to right.
    std::vector<LatticePoint> stair;
    for (const LatticePoint& p : points) {
        if (!stair.empty() && stair.back().i == p.i) continue;  // sorted: first j is minimal
        if (!stair.empty() && p.j >= stair.back().j) continue;
        stair.push_back(p);
    }

    // Monotone chain; collinear interior points are not vertices.
    std::vector<LatticePoint> hull;
    for (const LatticePoint& p : stair) {
        while (hull.size() >= 2) {
            const LatticePoint& a = hull[hull.size() - 2];
            const LatticePoint& b = hull.back();
            const long cr = (p.i - a.i) * (b.j - a.j) - (p.j - a.j) * (b.i - a.i);
            if (cr >= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }

    NewtonPolygon np;
    np.vertices = std::move(hull);
    for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k)
        np.edges.push_back(make_edge(np.vertices[k], np.vertices[k + 1]));
    return np;
}

NewtonPolygon polygon_of_poly(const SparsePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
    return polygon_of_points(f.support());
}

bool diagram_contains(const NewtonPolygon& np, const LatticePoint& p) {
    const LatticePoint& first = np.vertices.front();
    const LatticePoint& last = np.vertices.back();
    if (p.i < first.i || p.j < last.j) return false;
    if (p.i >= last.i) return true;   // right of the last vertex, above its level
    if (p.j >= first.j) return true;  // above the first vertex, right of its column
    for (const CompactEdge& e : np.edges) {
        if (p.i < e.from.i || p.i > e.to.i) continue;
        // On or above the edge chord.
        const long cr =
            (e.to.i - e.from.i) * (p.j - e.from.j) - (e.to.j - e.from.j) * (p.i - e.from.i);
        return cr >= 0;
    }
    return false;
}

RatPoly edge_poly(const SparsePoly& f, const CompactEdge& L) {
    const NewtonPolygon np = polygon_of_poly(f);
    const bool found = std::any_of(np.edges.begin(), np.edges.end(),
                                   [&](const CompactEdge& e) { return e == L; });
    if (!found) throw std::domain_error("not a compact edge of the polygon of f");

    std::vector<Rat> c(static_cast<std::size_t>(L.from.j) + 1, Rat(0));
    for (const auto& [p, a] : f.terms()) {
        if (p.i < L.from.i || p.i > L.to.i) continue;
        const long cr =
            (L.to.i - L.from.i) * (p.j - L.from.j) - (L.to.j - L.from.j) * (p.i - L.from.i);
        if (cr == 0) c[static_cast<std::size_t>(p.j)] = a;
    }
    return RatPoly(std::move(c));
}

NondegeneracyReport is_nondegenerate(const SparsePoly& f) {
    const NewtonPolygon np = polygon_of_poly(f);
    NondegeneracyReport rep;
    for (const CompactEdge& e : np.edges) {
        const bool ok = nonzero_roots_simple(edge_poly(f, e));
        rep.per_edge.push_back(EdgeVerdict{e, ok});
        if (!ok) rep.nondegenerate = false;
    }
    return rep;
}

}  // namespace genpolar
