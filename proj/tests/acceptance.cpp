// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.
//
//  1. K(5,12) case study reproduced exactly (16 labeled checks).
//  2. Predicted polygon equals the sampled polar polygon for all coprime
//     4 <= n < m <= 20, every finite invariant, three coefficient profiles.
//  3. Within that sweep, decided classifier types match non-degenerate
//     oracle types exactly.
//  4. Generic-coefficient polygon equals the full-T predicted polygon.
//  5. Bijection, order preservation, emptiness lemma, p+q bounds, and the
//     2m-n exclusion, exhaustively up to (15, 40).
//  6. The 9/20 instance is degenerate and the numeric probe recovers the
//     genus-two semigroup <4,10,21> with residual below 1e-6.
//  7. Probe ramifications sum to deg_y on a ten-curve suite; resultant
//     intersection order is symmetric on twenty random coprime pairs.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "genpolar/checks.hpp"
#include "genpolar/oracle.hpp"

using namespace genpolar;

namespace {

int failures = 0;

void report(int idx, const char* what, bool pass, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

SparsePoly from_terms(std::vector<std::tuple<long, long, long>> ts) {
    SparsePoly f;
    for (const auto& [i, j, a] : ts) f.add_term(i, j, Rat(a));
    return f;
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();

    // 1. Example reproduction.
    {
        const auto checks = run_example_5_12();
        bool all = true;
        std::string detail;
        for (const auto& c : checks)
            if (!c.pass) {
                all = false;
                detail += c.label + "; ";
            }
        report(1, "K(5,12) case study, 16 exact checks", all && checks.size() == 16, detail);
    }

    // 2-4. The sweep.
    {
        VerifyOptions opt;
        opt.nmax = 20;
        opt.mmax = 20;
        opt.seed = 0;
        opt.trials = 7;
        const auto res = run_verify(opt);
        long polygon_bad = 0, type_bad = 0, generic_bad = 0;
        long type_compared = 0, generic_compared = 0;
        for (const auto& inst : res.instances) {
            if (!inst.polygon_ok) ++polygon_bad;
            if (inst.type_compared) ++type_compared;
            if (!inst.type_ok) ++type_bad;
            if (inst.generic_compared) ++generic_compared;
            if (!inst.generic_ok) ++generic_bad;
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%zu instances over %ld pairs",
                      res.instances.size(), res.pairs);
        report(2, "polygon prediction vs exact polar, (n,m) <= 20, 3 profiles",
               polygon_bad == 0, std::string(buf) + (polygon_bad ? ", mismatches!" : ""));
        std::snprintf(buf, sizeof buf, "%ld comparisons", type_compared);
        report(3, "decided types equal non-degenerate oracle types", type_bad == 0, buf);
        std::snprintf(buf, sizeof buf, "%ld comparisons", generic_compared);
        report(4, "generic polygon equals full-T predicted polygon",
               generic_bad == 0 && generic_compared > 0, buf);
    }

    // 5. Bijection and lemma suites up to (15, 40).
    {
        bool ok = true;
        std::string detail;
        long lambdas = 0;
        for (long n = 3; n <= 15 && ok; ++n) {
            for (long m = n + 1; m <= 40 && ok; ++m) {
                if (ll_gcd(n, m) != 1) continue;
                if (n == 3 && m < 7) continue;
                const auto zs = zariski_set(n, m);
                const auto interior = interior_T(n, m);
                if (zs.size() != interior.size()) {
                    ok = false;
                    detail = "cardinality mismatch";
                    break;
                }
                std::vector<LatticePoint> images;
                for (std::size_t k = 0; k < zs.size(); ++k) {
                    ++lambdas;
                    const long lam = zs[k];
                    const LatticePoint pt = phi(n, m, lam);
                    images.push_back(pt);
                    if (phi_inverse(n, m, pt) != lam) { ok = false; detail = "phi not inverted"; }
                    if (lam == 2 * m - n) { ok = false; detail = "2m-n appeared"; }
                    if (k + 1 < zs.size() &&
                        !precedes(n, m, pt, phi(n, m, zs[k + 1]))) {
                        ok = false;
                        detail = "order not preserved";
                    }
                    const ZariskiDatum d = make_datum(n, m, lam);
                    if (lam < 2 * m - n && !(n < d.p + d.q && d.p + d.q < m)) {
                        ok = false;
                        detail = "p+q bound violated";
                    }
                    const bool must_be_empty =
                        lam > 2 * m - n || d.q == 1 || n == 3 || m == n + 1;
                    if (must_be_empty && !t_lambda(n, m, lam).empty()) {
                        ok = false;
                        detail = "emptiness lemma violated";
                    }
                }
                std::sort(images.begin(), images.end());
                if (images != interior) {
                    ok = false;
                    detail = "phi is not a bijection";
                }
            }
        }
        report(5, "bijection, ordering and emptiness suites up to (15,40)", ok,
               detail.empty() ? std::to_string(lambdas) + " invariants checked" : detail);
    }

    // 6. Degenerate probe.  The source family for lambda = 13 carries both
    // free coefficients; the 9/20 degeneracy claim is about its generic
    // member, so a_{8,2} is set to 1 (any nonzero value works).
    {
        bool ok = false;
        std::string detail;
        const auto b = BranchInput::make(
            5, 12, 13,
            {{LatticePoint{10, 1}, make_rat(9, 20)}, {LatticePoint{8, 2}, Rat(1)}});
        const auto sample = sample_generic(build_poly(b), 7, 0);
        if (sample.nondegenerate) {
            detail = "sample unexpectedly non-degenerate";
        } else {
            const auto branches = puiseux_probe(sample.polar, 4 * 5 * 12);
            const auto want = NumericalSemigroup::from_generators({Int(4), Int(10), Int(21)});
            for (const auto& br : branches) {
                const auto cs = char_exponents_from_approx(br);
                if (gens_from_char_exponents(cs) == want && br.residual_norm < 1e-6) ok = true;
            }
            if (!ok) detail = "semigroup <4,10,21> not recovered";
        }
        report(6, "degenerate 9/20 instance probes to <4,10,21>, residual < 1e-6", ok, detail);
    }

    // 7. Oracle internal consistency.
    {
        bool ok = true;
        std::string detail;
        const std::vector<SparsePoly> suite = {
            from_terms({{0, 2, 1}, {3, 0, -1}}),
            from_terms({{0, 2, 1}, {2, 0, -1}}),
            from_terms({{0, 3, 1}, {4, 0, -1}}),
            polar(build_poly(BranchInput::make(5, 12, 13)), 3, 2),
            polar(build_poly(BranchInput::make(5, 12, 14)), 5, 7),
            polar(build_poly(BranchInput::make(5, 12, 16)), 1, 4),
            polar(build_poly(BranchInput::make(5, 12, 18)), 2, 9),
            polar(build_poly(BranchInput::make(5, 12, 21)), 4, 3),
            polar(build_poly(
                      BranchInput::make(5, 12, 13, {{LatticePoint{10, 1}, make_rat(9, 20)}})),
                  1, 1),
            polar(build_poly(BranchInput::make(5, 12, 13, {{LatticePoint{8, 2}, Rat(1)}})), 3,
                  5),
        };
        for (const auto& f : suite) {
            long total = 0;
            for (const auto& br : puiseux_probe(f, 240)) total += br.denominator;
            if (total != f.deg_y()) {
                ok = false;
                detail = "ramification sum mismatch";
            }
        }
        std::uint64_t s = 2024;
        auto rnd = [&](long lo, long hi) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            return lo +
                   static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
        };
        int done = 0;
        while (done < 20) {
            SparsePoly f, g;
            f.add_term(0, rnd(1, 3), Rat(rnd(1, 4)));
            f.add_term(rnd(1, 4), 0, Rat(rnd(-4, -1)));
            if (rnd(0, 1)) f.add_term(rnd(1, 3), rnd(1, 2), Rat(rnd(-3, 3)));
            g.add_term(0, rnd(1, 3), Rat(rnd(1, 4)));
            g.add_term(rnd(1, 4), 0, Rat(rnd(-4, -1)));
            if (rnd(0, 1)) g.add_term(rnd(1, 3), rnd(1, 2), Rat(rnd(-3, 3)));
            if (f.deg_y() < 1 || g.deg_y() < 1) continue;
            try {
                if (intersection_order(f, g) != intersection_order(g, f)) {
                    ok = false;
                    detail = "intersection order asymmetric";
                }
                ++done;
            } catch (const std::domain_error&) {
                continue;
            }
        }
        report(7, "probe ramification sums and resultant symmetry", ok, detail);
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("%s -- %d failure(s), %.1f s\n", failures == 0 ? "ALL PASS" : "FAILURES",
                failures, secs);
    return failures == 0 ? 0 : 1;
}
