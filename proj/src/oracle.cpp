#include "genpolar/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>

namespace genpolar {

SparsePoly build_poly(const BranchInput& b) {
    SparsePoly f;
    f.add_term(0, b.n, Rat(1));
    f.add_term(b.m, 0, Rat(-1));
    if (b.lambda) {
        const ZariskiDatum d = make_datum(b.n, b.m, *b.lambda);
        f.add_term(d.p, d.q, Rat(1));
        for (const auto& [pt, a] : b.coeffs) f.add_term(pt.i, pt.j, a);
    }
    return f;
}

SparsePoly polar(const SparsePoly& f, long a, long b) {
    if (a == 0 && b == 0) throw std::invalid_argument("polar direction (0,0)");
    return f.derivative_x().scaled(Rat(a)) + f.derivative_y().scaled(Rat(b));
}

namespace {

struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

PolarSample sample_generic(const SparsePoly& f, int trials, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("polar of the zero polynomial");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    SplitMix64 rng(seed);

    struct Trial {
        long a, b;
        SparsePoly pol;
        NewtonPolygon np;
        NondegeneracyReport nd;
    };
    std::vector<Trial> ts;
    for (int t = 0; t < trials; ++t) {
        long a = 0, b = 0;
        do {
            a = rng.range(-97, 97);
            b = rng.range(1, 97);
        } while (a == 0 || ll_gcd(a, b) != 1);
        Trial tr;
        tr.a = a;
        tr.b = b;
        tr.pol = polar(f, a, b);
        tr.np = polygon_of_poly(tr.pol);
        tr.nd = is_nondegenerate(tr.pol);
        ts.push_back(std::move(tr));
    }

    // Modal polygon, earliest occurrence breaking ties.
    int best = 0, best_count = 0;
    for (int i = 0; i < trials; ++i) {
        int count = 0;
        for (int j = 0; j < trials; ++j)
            if (ts[j].np == ts[i].np) ++count;
        if (count > best_count) {
            best_count = count;
            best = i;
        }
    }
    const NewtonPolygon modal = ts[best].np;

    int pick = -1;
    for (int i = 0; i < trials; ++i)
        if (ts[i].np == modal && ts[i].nd.nondegenerate) {
            pick = i;
            break;
        }
    if (pick < 0)
        for (int i = 0; i < trials; ++i)
            if (ts[i].np == modal) {
                pick = i;
                break;
            }

    PolarSample s;
    s.a = ts[pick].a;
    s.b = ts[pick].b;
    s.polar = ts[pick].pol;
    s.polygon = ts[pick].np;
    s.nondegenerate = ts[pick].nd.nondegenerate;
    for (const EdgeVerdict& v : ts[pick].nd.per_edge)
        if (!v.nondegenerate) {
            s.degenerate_edge = v.edge;
            break;
        }
    for (const Trial& t : ts)
        s.trials.push_back(TrialRecord{t.a, t.b, t.np == modal, t.nd.nondegenerate});
    return s;
}

OracleVerdict oracle_type(const PolarSample& s) {
    OracleVerdict v;
    if (!s.nondegenerate) {
        v.offending_edge = s.degenerate_edge;
        return v;
    }
    v.type = oka_type(s.polygon);
    return v;
}

// ---------------------------------------------------------------------------
// Numeric Newton-Puiseux machinery.

namespace {

using cplx = std::complex<double>;
using CPoly = std::map<LatticePoint, cplx>;  // exponents -> coefficient

constexpr double kSupportThreshold = 1e-11;  // relative, during iteration
constexpr double kClusterTol = 1e-5;         // relative root clustering

double max_abs(const CPoly& h) {
    double m = 0.0;
    for (const auto& [p, c] : h) m = std::max(m, std::abs(c));
    return m;
}

CPoly thresholded(const CPoly& h) {
    const double cut = kSupportThreshold * max_abs(h);
    CPoly r;
    for (const auto& [p, c] : h)
        if (std::abs(c) > cut) r.emplace(p, c);
    return r;
}

std::vector<cplx> companion_roots(const std::vector<cplx>& coeffs) {
    // coeffs[k] multiplies u^k, leading coefficient nonzero.
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return {};
    if (n == 1) return {-coeffs[0] / coeffs[1]};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (std::size_t k = 0; k + 1 < n; ++k) comp(static_cast<long>(k) + 1, static_cast<long>(k)) = 1.0;
    for (std::size_t k = 0; k < n; ++k)
        comp(static_cast<long>(k), static_cast<long>(n) - 1) = -coeffs[k] / coeffs[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("root finding did not converge");
    std::vector<cplx> roots;
    for (long k = 0; k < solver.eigenvalues().size(); ++k) roots.push_back(solver.eigenvalues()(k));
    // Deterministic order.
    std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return roots;
}

struct RootCluster {
    cplx center;
    int multiplicity = 0;
};

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots) {
    std::vector<RootCluster> cs;
    for (const cplx& r : roots) {
        bool placed = false;
        for (RootCluster& c : cs) {
            if (std::abs(r - c.center) <= kClusterTol * std::max(1.0, std::abs(c.center))) {
                c.center = (c.center * static_cast<double>(c.multiplicity) + r) /
                           static_cast<double>(c.multiplicity + 1);
                ++c.multiplicity;
                placed = true;
                break;
            }
        }
        if (!placed) cs.push_back(RootCluster{r, 1});
    }
    return cs;
}

// x -> x^r, then y -> x^s (c + y), then divide by the minimal x power.
CPoly substitute(const CPoly& h, long r, long s, const cplx& c) {
    CPoly out;
    for (const auto& [p, coef] : h) {
        const long base = p.i * r + s * p.j;
        // row[k] = C(j, k) c^{j-k}, built down from k = j
        std::vector<cplx> row(static_cast<std::size_t>(p.j) + 1);
        row[static_cast<std::size_t>(p.j)] = 1.0;
        for (long k = p.j - 1; k >= 0; --k) {
            row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k + 1)] * c *
                                               (static_cast<double>(k + 1) /
                                                static_cast<double>(p.j - k));
        }
        for (long k = 0; k <= p.j; ++k) {
            const cplx add = coef * row[static_cast<std::size_t>(k)];
            if (add == 0.0) continue;
            auto [it, fresh] = out.try_emplace(LatticePoint{base, k}, add);
            if (!fresh) it->second += add;
        }
    }
    out = thresholded(out);
    long w = 0;
    bool first = true;
    for (const auto& [p, coef] : out) {
        if (first || p.i < w) w = p.i;
        first = false;
    }
    if (w > 0) {
        CPoly shifted;
        for (const auto& [p, coef] : out) shifted.emplace(LatticePoint{p.i - w, p.j}, coef);
        out = std::move(shifted);
    }
    return out;
}

struct LocalBranch {
    long ram = 1;  // ramification accumulated below this level
    std::vector<std::pair<long, cplx>> terms;  // exponents in the local variable
};

long min_y_exponent(const CPoly& h) {
    long mj = -1;
    for (const auto& [p, c] : h)
        if (mj < 0 || p.j < mj) mj = p.j;
    return mj;
}

// Branches of h through y -> 0 as x -> 0, each counted once with its
// ramification.  The budget is the largest collectible exponent in the
// current variable; substitutions rescale it.
std::vector<LocalBranch> expand(const CPoly& h_in, long budget, long guard) {
    std::vector<LocalBranch> out;
    if (guard <= 0) throw std::runtime_error("Puiseux recursion did not terminate");
    const CPoly h = thresholded(h_in);
    if (h.empty()) throw std::runtime_error("Puiseux expansion lost the polynomial");

    // y | h: a series that terminates exactly.
    const long ymin = min_y_exponent(h);
    for (long k = 0; k < ymin; ++k) out.push_back(LocalBranch{});

    std::vector<LatticePoint> supp;
    for (const auto& [p, c] : h) supp.push_back(p);
    const NewtonPolygon np = polygon_of_points(std::move(supp));

    // No compact edge and no y factor: the residual constant term is
    // accumulated rounding noise, so the series collected so far already
    // satisfies the curve to working precision.  Close the branch here.
    if (np.edges.empty() && ymin == 0) {
        out.push_back(LocalBranch{});
        return out;
    }

    for (const CompactEdge& e : np.edges) {
        const long d = e.d;
        const long s = e.len1 / d, r = e.len2 / d;
        // Lattice points on the edge step by the primitive vector (s, -r),
        // so the edge polynomial in u = t^r has degree d with nonzero ends.
        std::vector<cplx> hat(static_cast<std::size_t>(d) + 1, cplx(0.0));
        for (const auto& [p, c] : h) {
            if (p.i < e.from.i || p.i > e.to.i) continue;
            const long cr =
                (e.to.i - e.from.i) * (p.j - e.from.j) - (e.to.j - e.from.j) * (p.i - e.from.i);
            if (cr != 0) continue;
            hat[static_cast<std::size_t>((p.j - e.to.j) / r)] += c;
        }
        for (const RootCluster& cl : cluster_roots(companion_roots(hat))) {
            const cplx c0 = std::pow(cl.center, 1.0 / static_cast<double>(r));
            const long remaining = budget * r - s;
            if (remaining <= 0) {
                LocalBranch br;
                br.ram = r;
                br.terms.push_back({s, c0});
                out.push_back(std::move(br));
                continue;
            }
            const CPoly next = substitute(h, r, s, c0);
            for (LocalBranch sub : expand(next, remaining, guard - 1)) {
                LocalBranch br;
                br.ram = r * sub.ram;
                br.terms.push_back({s * sub.ram, c0});
                for (const auto& [ex, co] : sub.terms)
                    br.terms.push_back({s * sub.ram + ex, co});
                out.push_back(std::move(br));
            }
        }
    }
    return out;
}

}  // namespace

namespace {

// Normalized residual of a partial expansion y(t) = sum c t^e with x = t^R:
// compose f(t^R, y(t)) and take the largest coefficient a valid approximant
// must cancel.  With e = ord y, w0 the minimal monomial valuation and dmax
// the collected depth, the composition of a valid approximant has order at
// least w0 - e + dmax + 1, so indices up to w0 + dmax - e are checked.
double expansion_residual(const SparsePoly& f, long R,
                          const std::vector<std::pair<long, cplx>>& terms) {
    long dmax = 0, emin = 0;
    for (const auto& [ex, co] : terms) {
        dmax = std::max(dmax, ex);
        emin = emin == 0 ? ex : std::min(emin, ex);
    }
    if (dmax == 0) return 0.0;
    long w0 = -1;
    for (const auto& [p, a] : f.terms()) {
        const long v = R * p.i + p.j * emin;
        if (w0 < 0 || v < w0) w0 = v;
    }
    const long limit = w0 + dmax - emin;
    std::vector<cplx> yhat(static_cast<std::size_t>(dmax) + 1, cplx(0.0));
    for (const auto& [ex, co] : terms) yhat[static_cast<std::size_t>(ex)] += co;
    std::vector<std::vector<cplx>> pw;
    pw.push_back({cplx(1.0)});
    for (long j = 1; j <= f.deg_y(); ++j) {
        const auto& prev = pw.back();
        std::vector<cplx> cur(static_cast<std::size_t>(limit) + 1, cplx(0.0));
        for (std::size_t a = 0; a < prev.size(); ++a) {
            if (prev[a] == 0.0) continue;
            for (std::size_t b = 0; b < yhat.size() && a + b <= static_cast<std::size_t>(limit);
                 ++b)
                cur[a + b] += prev[a] * yhat[b];
        }
        pw.push_back(std::move(cur));
    }
    std::vector<cplx> comp(static_cast<std::size_t>(limit) + 1, cplx(0.0));
    double scale = 0.0;
    for (const auto& [p, a] : f.terms()) {
        scale += std::abs(a.get_d());
        const long shift = R * p.i;
        if (shift > limit) continue;
        const auto& yj = pw[static_cast<std::size_t>(p.j)];
        const cplx av(a.get_d(), 0.0);
        for (std::size_t k = 0;
             k < yj.size() && k + static_cast<std::size_t>(shift) <= static_cast<std::size_t>(limit);
             ++k)
            comp[k + static_cast<std::size_t>(shift)] += av * yj[k];
    }
    double worst = 0.0;
    for (const cplx& c : comp) worst = std::max(worst, std::abs(c));
    return worst / std::max(1.0, scale);
}

}  // namespace

std::vector<PuiseuxBranchApprox> puiseux_probe(const SparsePoly& f, long depth, double tol) {
    if (f.is_zero() || f.deg_y() < 1) throw std::invalid_argument("need positive y-degree");
    if (depth < 1) throw std::invalid_argument("need a positive exponent budget");
    CPoly h;
    for (const auto& [p, a] : f.terms()) h.emplace(p, cplx(a.get_d(), 0.0));

    // Each level consumes at least 1/ram of the original-x budget, so the
    // recursion depth is bounded by budget * deg_y.
    const long guard = depth * (f.deg_y() + 1) + 16;

    std::vector<PuiseuxBranchApprox> out;
    for (const LocalBranch& lb : expand(h, depth, guard)) {
        // Iterating on rounding noise can pollute the tail of a long
        // expansion.  Keep the longest prefix the residual certifies.
        std::vector<std::pair<long, cplx>> terms = lb.terms;
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        constexpr double kTrimTol = 1e-8;
        if (!terms.empty() && expansion_residual(f, lb.ram, terms) > kTrimTol) {
            std::size_t lo = 1, hi = terms.size();  // prefix in [lo, hi)
            while (lo + 1 < hi) {
                const std::size_t mid = (lo + hi) / 2;
                std::vector<std::pair<long, cplx>> prefix(terms.begin(),
                                                          terms.begin() + static_cast<long>(mid));
                if (expansion_residual(f, lb.ram, prefix) > kTrimTol) hi = mid;
                else lo = mid;
            }
            terms.resize(lo);
        }

        PuiseuxBranchApprox br;
        br.residual_norm = expansion_residual(f, lb.ram, terms);
        // Primitive ramification: divide out common factors with the
        // thresholded exponent set.
        long g = lb.ram;
        for (const auto& [ex, co] : terms)
            if (std::abs(co) >= tol) g = ll_gcd(g, ex);
        if (g == 0) g = lb.ram;
        br.denominator = lb.ram / g;
        for (const auto& [ex, co] : terms)
            br.terms.push_back({make_rat(Int(ex), Int(lb.ram)), co});
        out.push_back(std::move(br));
    }
    return out;
}

CharSequence char_exponents_from_approx(const PuiseuxBranchApprox& br, double tol) {
    const long n = br.denominator;
    std::vector<Int> beta{Int(n)};
    Int e(n);
    for (const auto& [ex, co] : br.terms) {
        if (e == 1) break;
        if (std::abs(co) < tol) continue;
        // exponent over the primitive denominator n
        const Rat scaled = ex * Rat(n);
        if (scaled.get_den() != 1)
            throw std::domain_error("expansion is not primitive over its denominator");
        const Int i = scaled.get_num();
        const Int g = int_gcd(e, i);
        if (g < e) {
            beta.push_back(i);
            e = g;
        }
    }
    if (e != 1)
        throw std::domain_error("expansion too short to reach the full gcd chain");
    return CharSequence::from_exponents(std::move(beta));
}

Int intersection_order(const SparsePoly& f, const SparsePoly& g) {
    if (f.deg_y() < 1 || g.deg_y() < 1) throw std::invalid_argument("need positive y-degrees");
    const long dfY = f.deg_y(), dgY = g.deg_y();
    const long bound = f.deg_x() * dgY + g.deg_x() * dfY;
    const RatPoly lf = f.y_coefficient(dfY);
    const RatPoly lg = g.y_coefficient(dgY);

    std::vector<Rat> xs, vals;
    long x0 = 1;
    while (static_cast<long>(xs.size()) <= bound) {
        const Rat x(x0++);
        if (lf.eval(x) == 0 || lg.eval(x) == 0) continue;  // keep y-degrees intact
        xs.push_back(x);
        vals.push_back(resultant(f.eval_x(x), g.eval_x(x)));
    }

    // Lagrange interpolation over Q.
    RatPoly res;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (vals[k] == 0) continue;
        RatPoly num = RatPoly::constant(Rat(1));
        Rat den(1);
        for (std::size_t l = 0; l < xs.size(); ++l) {
            if (l == k) continue;
            num = num * RatPoly(std::vector<Rat>{-xs[l], Rat(1)});
            den *= xs[k] - xs[l];
        }
        res = res + num * Rat(vals[k] / den);
    }
    if (res.is_zero()) throw std::domain_error("resultant vanishes: curves share a factor");
    return Int(static_cast<long>(res.valuation()));
}

}  // namespace genpolar
