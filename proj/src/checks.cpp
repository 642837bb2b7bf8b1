#include "genpolar/checks.hpp"

#include <algorithm>
#include <sstream>

#include "genpolar/oracle.hpp"
#include "genpolar/semigroup.hpp"
#include "genpolar/zariski.hpp"

namespace genpolar {

namespace {

std::string points_str(const std::vector<LatticePoint>& pts) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) os << ", ";
        os << "(" << pts[k].i << "," << pts[k].j << ")";
    }
    os << "}";
    return os.str();
}

EquisingularityType two_class_type(long c1, std::vector<long> g1, long w1,
                                   long c2, std::vector<long> g2, long w2,
                                   long cross) {
    EquisingularityType t;
    BranchClass a, b;
    a.count = c1;
    a.gens = NumericalSemigroup::from_generators(std::vector<Int>(g1.begin(), g1.end()));
    b.count = c2;
    b.gens = NumericalSemigroup::from_generators(std::vector<Int>(g2.begin(), g2.end()));
    t.classes = {a, b};
    t.pairwise = {{Int(w1), Int(cross)}, {Int(cross), Int(w2)}};
    t.canonicalize();
    return t;
}

EquisingularityType one_class_type(long count, std::vector<long> gens, long w) {
    EquisingularityType t;
    BranchClass a;
    a.count = count;
    a.gens = NumericalSemigroup::from_generators(std::vector<Int>(gens.begin(), gens.end()));
    t.classes = {a};
    t.pairwise = {{Int(w)}};
    t.canonicalize();
    return t;
}

}  // namespace

std::vector<CheckResult> run_example_5_12() {
    std::vector<CheckResult> out;
    const long n = 5, m = 12;
    auto check = [&](const std::string& label, bool pass, const std::string& detail) {
        out.push_back(CheckResult{label, pass, detail});
    };

    {
        const std::vector<long> want{13, 14, 16, 18, 21, 23, 26, 28, 33, 38};
        const auto got = zariski_set(n, m);
        std::ostringstream os;
        for (long z : got) os << z << " ";
        check("zariski_set(5,12)", got == want, os.str());
    }
    {
        const struct {
            long lambda;
            LatticePoint want;
        } cases[] = {{13, {5, 3}}, {14, {10, 1}}, {16, {8, 2}}, {18, {6, 3}}};
        for (const auto& c : cases) {
            const LatticePoint got = phi(n, m, c.lambda);
            std::ostringstream os;
            os << "Phi(" << c.lambda << ") = (" << got.i << "," << got.j << ")";
            check("phi(" + std::to_string(c.lambda) + ")", got == c.want, os.str());
        }
    }
    {
        const auto t13 = t_lambda(n, m, 13);
        const std::vector<LatticePoint> want{{8, 2}, {10, 1}};
        check("T_13 = {(10,1),(8,2)}", t13 == want, points_str(t13));
        check("T_16 empty", t_lambda(n, m, 16).empty(), points_str(t_lambda(n, m, 16)));
        check("T_18 empty", t_lambda(n, m, 18).empty(), points_str(t_lambda(n, m, 18)));
    }

    // lambda = 14: two <2,5> branches meeting with multiplicity 10.
    {
        const auto rep = classify(BranchInput::make(n, m, 14));
        const auto want = one_class_type(2, {2, 5}, 10);
        check("classify(5,12,14)", rep.type && *rep.type == want,
              rep.type ? rep.type->str() : "undecided");
    }
    // lambda > 2m-n = 19: irreducible with semigroup <4,11>.
    {
        bool ok = true;
        std::ostringstream os;
        for (long lam : {21, 23, 26, 28, 33, 38}) {
            const auto rep = classify(BranchInput::make(n, m, lam));
            const auto want = one_class_type(1, {4, 11}, 0);
            const bool this_ok = rep.type && *rep.type == want &&
                                 rep.case_tag == CaseTag::LAMBDA_LARGE;
            ok = ok && this_ok;
            os << lam << (this_ok ? " ok " : " FAIL ");
        }
        check("classify lambda in {21,23,26,28,33,38}", ok, os.str());
    }
    // lambda = 16: <3,8> plus a smooth branch, intersection 8.
    {
        const auto rep = classify(BranchInput::make(n, m, 16));
        const auto want = two_class_type(1, {3, 8}, 0, 1, {1}, 0, 8);
        check("classify(5,12,16)", rep.type && *rep.type == want,
              rep.type ? rep.type->str() : "undecided");
    }
    // lambda = 18: irreducible <4,11>.
    {
        const auto rep = classify(BranchInput::make(n, m, 18));
        const auto want = one_class_type(1, {4, 11}, 0);
        check("classify(5,12,18)", rep.type && *rep.type == want &&
                                       rep.case_tag == CaseTag::SPECIAL_CURVE_ONE_EDGE,
              rep.type ? rep.type->str() : "undecided");
    }
    // lambda = 13, all T-coefficients zero: <2,5> plus two smooth branches,
    // I(Q1,Q2) = 3 and I(P1,Qi) = 5.
    EquisingularityType type_13_zero;
    {
        const auto rep = classify(BranchInput::make(n, m, 13));
        const auto want = two_class_type(1, {2, 5}, 0, 2, {1}, 3, 5);
        const bool pass = rep.type && *rep.type == want &&
                          rep.case_tag == CaseTag::SPECIAL_CURVE_TWO_EDGES;
        if (rep.type) type_13_zero = *rep.type;
        check("classify(5,12,13) zero coefficients", pass,
              rep.type ? rep.type->str() : "undecided");
    }
    // lambda = 13, a_{10,1} = 1: polygon drops to {(0,4),(5,2),(10,0)} and the
    // sampled polar is non-degenerate with two <2,5> branches, I = 10.
    {
        const auto b = BranchInput::make(n, m, 13, {{LatticePoint{10, 1}, Rat(1)}});
        const auto rep = classify(b);
        const auto want_np = polygon_of_points(
            {LatticePoint{0, 4}, LatticePoint{5, 2}, LatticePoint{10, 0}});
        const auto sample = sample_generic(build_poly(b), 7, 512);
        const auto verdict = oracle_type(sample);
        const auto want_type = one_class_type(2, {2, 5}, 10);
        const bool pass = rep.case_tag == CaseTag::GENERAL_T_NONEMPTY && !rep.type &&
                          rep.predicted_polygon == want_np && sample.polygon == want_np &&
                          !verdict.degenerate() && *verdict.type == want_type;
        check("lambda=13, a_{10,1}=1: polygon and oracle type", pass,
              verdict.degenerate() ? "degenerate" : verdict.type->str());
    }
    // lambda = 13, a_{10,1} = 9/20 (with a_{8,2} != 0, the generic member of
    // the family): every direction degenerate; the probe recovers a single
    // branch with semigroup <4,10,21>.
    {
        const auto b = BranchInput::make(
            n, m, 13,
            {{LatticePoint{10, 1}, make_rat(9, 20)}, {LatticePoint{8, 2}, Rat(1)}});
        const auto sample = sample_generic(build_poly(b), 7, 512);
        bool pass = !sample.nondegenerate;
        std::string detail = pass ? "degenerate as expected; " : "unexpectedly non-degenerate; ";
        if (pass) {
            const auto branches = puiseux_probe(sample.polar, 4 * n * m);
            const auto want = NumericalSemigroup::from_generators({Int(4), Int(10), Int(21)});
            bool found = false;
            for (const auto& br : branches) {
                if (br.denominator != 4) continue;
                const auto cs = char_exponents_from_approx(br);
                const auto sg = gens_from_char_exponents(cs);
                if (sg == want && br.residual_norm < 1e-6) found = true;
                std::ostringstream os;
                os << "ram " << br.denominator << " -> " << sg.str() << " residual "
                   << br.residual_norm << "; ";
                detail += os.str();
            }
            pass = found && branches.size() == 1;
        }
        check("lambda=13, a_{10,1}=9/20: degenerate, probe finds <4,10,21>", pass, detail);
    }
    // lambda = 13, a_{10,1} = 0, a_{8,2} = 1: diagram of
    // {(0,4),(5,2),(8,1),(11,0)} and the type of the zero case.
    {
        const auto b = BranchInput::make(n, m, 13, {{LatticePoint{8, 2}, Rat(1)}});
        const auto rep = classify(b);
        const auto want_np =
            polygon_of_points({LatticePoint{0, 4}, LatticePoint{5, 2}, LatticePoint{8, 1},
                               LatticePoint{11, 0}});
        const auto sample = sample_generic(build_poly(b), 7, 512);
        const auto verdict = oracle_type(sample);
        const bool support_on_edge = diagram_contains(sample.polygon, LatticePoint{8, 1});
        const bool pass = rep.case_tag == CaseTag::GENERAL_T_NONEMPTY &&
                          rep.predicted_polygon == want_np && sample.polygon == want_np &&
                          support_on_edge && !verdict.degenerate() &&
                          *verdict.type == type_13_zero;
        check("lambda=13, a_{8,2}=1: polygon and zero-case type", pass,
              verdict.degenerate() ? "degenerate" : verdict.type->str());
    }
    return out;
}

VerifyResult run_verify(const VerifyOptions& opt) {
    if (opt.nmax < 4 || opt.mmax < 4)
        throw std::invalid_argument("verify bounds must be at least 4");
    if (opt.trials < 1) throw std::invalid_argument("need at least one trial");

    VerifyResult res;
    for (long n = 4; n <= opt.nmax; ++n) {
        for (long m = n + 1; m <= opt.mmax; ++m) {
            if (ll_gcd(n, m) != 1) continue;
            ++res.pairs;
            for (long lambda : zariski_set(n, m)) {
                const auto tl = t_lambda(n, m, lambda);
                const auto il = i_lambda(n, m, lambda);
                for (int profile = 0; profile < 3; ++profile) {
                    std::map<LatticePoint, Rat> coeffs;
                    if (profile == 1) {
                        for (const LatticePoint& p : tl) coeffs.emplace(p, Rat(1));
                    } else if (profile == 2) {
                        std::uint64_t h = opt.seed;
                        for (long v : {n, m, lambda, 2L}) h = h * 0x100000001b3ull + static_cast<std::uint64_t>(v);
                        for (const LatticePoint& p : il) {
                            h = h * 6364136223846793005ull + 1442695040888963407ull;
                            const long num = static_cast<long>(h % 19) - 9;
                            h = h * 6364136223846793005ull + 1442695040888963407ull;
                            const long den = 1 + static_cast<long>(h % 9);
                            if (num != 0) coeffs.emplace(p, make_rat(num, den));
                        }
                    }
                    VerifyInstance inst;
                    inst.n = n;
                    inst.m = m;
                    inst.lambda = lambda;
                    inst.profile = profile;

                    const auto b = BranchInput::make(n, m, lambda, coeffs);
                    const auto predicted = predicted_polygon(b);

                    std::uint64_t inst_seed = opt.seed;
                    for (long v : {n, m, lambda, static_cast<long>(profile)})
                        inst_seed = inst_seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(v);
                    const auto sample = sample_generic(build_poly(b), opt.trials, inst_seed);
                    inst.polygon_ok = sample.polygon == predicted;
                    if (!inst.polygon_ok) inst.detail += "polygon mismatch; ";

                    const auto rep = classify(b);
                    if (rep.type && sample.nondegenerate) {
                        inst.type_compared = true;
                        const auto verdict = oracle_type(sample);
                        inst.type_ok = verdict.type && *verdict.type == *rep.type;
                        if (!inst.type_ok)
                            inst.detail += "type mismatch: " + rep.type->str() + " vs " +
                                           (verdict.type ? verdict.type->str() : "degenerate") +
                                           "; ";
                    }
                    if (profile == 1) {
                        inst.generic_compared = true;
                        inst.generic_ok = generic_polygon(n, m, lambda) == predicted;
                        if (!inst.generic_ok) inst.detail += "generic polygon mismatch; ";
                    }
                    if (!inst.ok()) ++res.failures;
                    res.instances.push_back(std::move(inst));
                }
            }
        }
    }
    return res;
}

}  // namespace genpolar
