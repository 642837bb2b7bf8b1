#include "genpolar/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace genpolar {

BranchInput BranchInput::make(long n, long m, std::optional<long> lambda,
                              std::map<LatticePoint, Rat> coeffs) {
    BranchInput b;
    b.n = n;
    b.m = m;
    b.lambda = lambda;
    for (auto& [p, a] : coeffs)
        if (a != 0) b.coeffs.emplace(p, a);
    if (!lambda) {
        validate_pair(n, m);
        if (!b.coeffs.empty())
            throw std::invalid_argument("lambda = infinity admits no extra coefficients");
        return b;
    }
    const ZariskiDatum d = make_datum(n, m, lambda);  // validates lambda in Z(n,m)
    const long w = d.p * n + d.q * m;
    for (const auto& [pt, a] : b.coeffs) {
        const bool in_box = pt.i >= 0 && pt.i <= m - 2 && pt.j >= 0 && pt.j <= n - 2;
        if (!in_box || pt.i * n + pt.j * m <= w)
            throw std::invalid_argument("coefficient support must lie in I_lambda");
    }
    return b;
}

void EquisingularityType::canonicalize() {
    const std::size_t k = classes.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (classes[a].gens.gens != classes[b].gens.gens)
            return classes[a].gens.gens < classes[b].gens.gens;
        if (classes[a].count != classes[b].count) return classes[a].count < classes[b].count;
        return pairwise[a][a] < pairwise[b][b];
    });
    std::vector<BranchClass> cs;
    std::vector<std::vector<Int>> pw(k, std::vector<Int>(k, Int(0)));
    for (std::size_t a = 0; a < k; ++a) {
        cs.push_back(classes[order[a]]);
        for (std::size_t b = 0; b < k; ++b) pw[a][b] = pairwise[order[a]][order[b]];
    }
    classes = std::move(cs);
    pairwise = std::move(pw);
}

Int EquisingularityType::total_branches() const {
    Int t(0);
    for (const BranchClass& c : classes) t += c.count;
    return t;
}

std::string EquisingularityType::str() const {
    std::ostringstream os;
    for (std::size_t a = 0; a < classes.size(); ++a) {
        if (a) os << "; ";
        os << classes[a].count.get_str() << " x "
           << (classes[a].gens.smooth() ? "smooth" : classes[a].gens.str());
        if (classes[a].count > 1) os << " [I=" << pairwise[a][a].get_str() << "]";
    }
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            os << "; I(" << a + 1 << "," << b + 1 << ")=" << pairwise[a][b].get_str();
    return os.str();
}

const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::INFINITE_LAMBDA: return "INFINITE_LAMBDA";
        case CaseTag::Q_EQUALS_ONE: return "Q_EQUALS_ONE";
        case CaseTag::LAMBDA_LARGE: return "LAMBDA_LARGE";
        case CaseTag::SPECIAL_CURVE_TWO_EDGES: return "SPECIAL_CURVE_TWO_EDGES";
        case CaseTag::SPECIAL_CURVE_ONE_EDGE: return "SPECIAL_CURVE_ONE_EDGE";
        case CaseTag::GENERAL_T_NONEMPTY: return "GENERAL_T_NONEMPTY";
    }
    return "?";
}

NewtonPolygon predicted_polygon(const BranchInput& b) {
    if (!b.lambda)
        return polygon_of_points({LatticePoint{0, b.n - 1}, LatticePoint{b.m - 1, 0}});
    const auto e = e_lambda(b.n, b.m, *b.lambda);
    std::vector<LatticePoint> pts(e.begin(), e.end());
    for (const LatticePoint& t : t_lambda(b.n, b.m, *b.lambda)) {
        if (!b.coeffs.contains(t)) continue;
        pts.push_back(LatticePoint{t.i, t.j - 1});
        pts.push_back(LatticePoint{t.i - 1, t.j});
    }
    return polygon_of_points(std::move(pts));
}

NewtonPolygon generic_polygon(long n, long m, long lambda) {
    const ZariskiDatum d = make_datum(n, m, lambda);
    const auto e = e_lambda(n, m, lambda);
    std::vector<LatticePoint> pts(e.begin(), e.end());
    if (d.q > 1) {
        for (long j = 0; j <= d.q - 2; ++j) {
            // The point at height j is the f_y-shift of the minimal support
            // point in row j+1 of T_lambda; it exists exactly when that row
            // meets the wedge:  ceil(k m/n) <= k (m-p-1)/(q-1) for k = q-j-1.
            const long k = d.q - j - 1;
            const long shift = (k * m + n - 1) / n;  // ceil(k m / n)
            if (shift * (d.q - 1) > k * (m - d.p - 1)) continue;
            pts.push_back(LatticePoint{d.p + shift, j});
        }
    }
    return polygon_of_points(std::move(pts));
}

namespace {

BranchClass make_class(long count, long g0, long g1) {
    BranchClass c;
    c.count = count;
    c.gens = g0 == 1 || g1 == 1 ? NumericalSemigroup::from_generators({Int(1)})
                                : NumericalSemigroup::from_generators({Int(g0), Int(g1)});
    return c;
}

// d = gcd(u, v) branches <u/d, v/d> with pairwise intersection u*v/d^2;
// the type of the monomial curve y^u - x^v.
EquisingularityType monomial_type(long u, long v) {
    const long d = ll_gcd(u, v);
    EquisingularityType t;
    t.classes.push_back(make_class(d, u / d, v / d));
    t.pairwise = {{d > 1 ? Int(u) * Int(v) / (Int(d) * Int(d)) : Int(0)}};
    t.canonicalize();
    return t;
}

}  // namespace

EquisingularityType oka_type(const NewtonPolygon& polygon) {
    EquisingularityType t;
    const std::size_t k = polygon.edges.size();
    for (const CompactEdge& e : polygon.edges) {
        if (e.len1 == 0 || e.len2 == 0)
            throw std::invalid_argument("axis-parallel compact edge: curve not reduced");
        t.classes.push_back(make_class(e.d, e.len2 / e.d, e.len1 / e.d));
    }
    t.pairwise.assign(k, std::vector<Int>(k, Int(0)));
    for (std::size_t a = 0; a < k; ++a) {
        const CompactEdge& ea = polygon.edges[a];
        if (ea.d > 1)
            t.pairwise[a][a] = Int(ea.len1) * Int(ea.len2) / (Int(ea.d) * Int(ea.d));
        for (std::size_t b = a + 1; b < k; ++b) {
            const CompactEdge& eb = polygon.edges[b];
            const Int cross = std::min(Int(ea.len1) * Int(eb.len2), Int(ea.len2) * Int(eb.len1)) /
                              (Int(ea.d) * Int(eb.d));
            t.pairwise[a][b] = cross;
            t.pairwise[b][a] = cross;
        }
    }
    t.canonicalize();
    return t;
}

ClassificationReport classify(const BranchInput& b) {
    ClassificationReport rep;
    rep.predicted_polygon = predicted_polygon(b);

    if (!b.lambda) {
        rep.case_tag = CaseTag::INFINITE_LAMBDA;
        rep.type = monomial_type(b.n - 1, b.m - 1);
        rep.notes = "generic polar equisingular to y^(n-1) - x^(m-1)";
        return rep;
    }

    const ZariskiDatum d = make_datum(b.n, b.m, *b.lambda);
    const long lambda = *b.lambda;
    if (d.q == 1 && lambda > 2 * b.m - b.n)
        throw std::logic_error("q = 1 and lambda > 2m-n cannot hold together");

    if (d.q == 1) {
        rep.case_tag = CaseTag::Q_EQUALS_ONE;
        rep.type = monomial_type(b.n - 1, d.p);
        rep.notes = "generic polar equisingular to y^(n-1) - x^p";
        return rep;
    }
    if (lambda > 2 * b.m - b.n) {
        rep.case_tag = CaseTag::LAMBDA_LARGE;
        rep.type = monomial_type(b.n - 1, b.m - 1);
        rep.notes = "generic polar equisingular to y^(n-1) - x^(m-1)";
        return rep;
    }

    const auto tl = t_lambda(b.n, b.m, lambda);
    const bool support_meets_t = std::any_of(tl.begin(), tl.end(), [&](const LatticePoint& p) {
        return b.coeffs.contains(p);
    });
    if (support_meets_t) {
        rep.case_tag = CaseTag::GENERAL_T_NONEMPTY;
        rep.notes = "type not decided by the polygon alone; consult the polar oracle";
        return rep;
    }

    if (lambda < d.p + d.q + b.m - b.n) {
        // B below l_{N,M}: two compact edges N-B and B-M.
        rep.case_tag = CaseTag::SPECIAL_CURVE_TWO_EDGES;
        const long d1 = ll_gcd(b.n - d.q, d.p);
        const long d2 = ll_gcd(d.q - 1, b.m - d.p - 1);
        const Int a1((b.n - d.q) / d1), b1(d.p / d1);
        const Int a2((d.q - 1) / d2), b2((b.m - d.p - 1) / d2);
        EquisingularityType t;
        t.classes.push_back(make_class(d1, (b.n - d.q) / d1, d.p / d1));
        t.classes.push_back(make_class(d2, (d.q - 1) / d2, (b.m - d.p - 1) / d2));
        t.pairwise.assign(2, std::vector<Int>(2, Int(0)));
        if (d1 > 1) t.pairwise[0][0] = a1 * b1;
        if (d2 > 1) t.pairwise[1][1] = a2 * b2;
        t.pairwise[0][1] = t.pairwise[1][0] = std::min(a1 * b2, a2 * b1);
        t.canonicalize();
        rep.type = std::move(t);
        rep.notes = "two-edge polygon N-B-M";
        return rep;
    }

    rep.case_tag = CaseTag::SPECIAL_CURVE_ONE_EDGE;
    rep.type = monomial_type(b.n - 1, b.m - 1);
    rep.notes = "B on or above l_{N,M}; single edge N-M";
    return rep;
}

}  // namespace genpolar
