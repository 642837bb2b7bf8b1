// Command-line frontend: enumerate Zariski invariants, classify generic
// polars, run the classifier-vs-oracle verification sweep, reproduce the
// K(5,12) case study, and emit SVG figures.
//
// Exit codes: 0 success, 1 verification/check failure, 2 input validation,
// 3 needs-oracle escalation (degenerate sample without --puiseux), 4 I/O.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "genpolar/checks.hpp"
#include "genpolar/oracle.hpp"
#include "genpolar/report.hpp"
#include "genpolar/svg.hpp"

namespace gp = genpolar;

namespace {

struct GlobalFlags {
    bool json = false;
    bool quiet = false;
};

void emit(const GlobalFlags& g, const gp::json& env, const std::string& text) {
    if (g.json) {
        std::cout << env.dump(2) << "\n";
    } else if (!g.quiet) {
        std::cout << text;
    }
}

std::optional<long> parse_lambda(const std::string& s) {
    if (s == "inf") return std::nullopt;
    try {
        std::size_t pos = 0;
        const long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("lambda must be a natural number or 'inf'");
    }
}

std::map<gp::LatticePoint, gp::Rat> parse_coeffs(const std::vector<std::string>& raw) {
    std::map<gp::LatticePoint, gp::Rat> out;
    for (const std::string& s : raw) {
        const auto eq = s.find('=');
        const auto comma = s.find(',');
        if (eq == std::string::npos || comma == std::string::npos || comma > eq)
            throw std::invalid_argument("coefficient must look like i,j=p/q");
        const long i = std::stoll(s.substr(0, comma));
        const long j = std::stoll(s.substr(comma + 1, eq - comma - 1));
        const gp::Rat v = gp::parse_rational(s.substr(eq + 1));
        if (v != 0) out[gp::LatticePoint{i, j}] = v;
    }
    return out;
}

std::string lambda_str(const std::optional<long>& lam) {
    return lam ? std::to_string(*lam) : "inf";
}

int cmd_zariski(const GlobalFlags& g, long n, long m) {
    const auto zs = gp::zariski_set(n, m);
    gp::json result;
    result["count"] = zs.size();
    result["invariants"] = gp::json::array();
    std::ostringstream text;
    text << "Z(" << n << "," << m << ") has " << zs.size() << " finite invariants\n";
    text << "lambda  (alpha,beta)  Phi      |T|  reason\n";
    for (long lam : zs) {
        const auto [alpha, beta] = gp::decompose(n, m, lam);
        const gp::LatticePoint p = gp::phi(n, m, lam);
        const auto tl = gp::t_lambda(n, m, lam);
        const auto reason = gp::t_lambda_empty_reason(n, m, lam);
        gp::json row;
        row["lambda"] = lam;
        row["alpha"] = alpha;
        row["beta"] = beta;
        row["phi"] = gp::to_json(p);
        row["t_lambda"] = gp::json::array();
        for (const auto& t : tl) row["t_lambda"].push_back(gp::to_json(t));
        row["t_lambda_size"] = tl.size();
        row["emptiness"] = gp::to_string(reason);
        result["invariants"].push_back(std::move(row));
        text << lam << "\t(" << alpha << "," << beta << ")\t(" << p.i << "," << p.j << ")\t"
             << tl.size() << "    " << gp::to_string(reason) << "\n";
    }
    gp::json inputs;
    inputs["n"] = n;
    inputs["m"] = m;
    emit(g, gp::envelope("zariski", inputs, result), text.str());
    return 0;
}

int cmd_classify(const GlobalFlags& g, long n, long m, const std::string& lambda_s,
                 const std::vector<std::string>& coeff_raw, bool use_oracle, bool use_puiseux,
                 std::uint64_t seed, int trials) {
    const auto lambda = parse_lambda(lambda_s);
    const auto coeffs = parse_coeffs(coeff_raw);
    const auto b = gp::BranchInput::make(n, m, lambda, coeffs);
    const auto rep = gp::classify(b);

    gp::json inputs;
    inputs["n"] = n;
    inputs["m"] = m;
    inputs["lambda"] = lambda_str(lambda);
    inputs["coefficients"] = gp::json::object();
    for (const auto& [p, a] : b.coeffs)
        inputs["coefficients"][std::to_string(p.i) + "," + std::to_string(p.j)] =
            gp::rat_to_string(a);

    gp::json result;
    result["classification"] = gp::to_json(rep);
    std::ostringstream text;
    text << "case: " << gp::to_string(rep.case_tag) << "\n";
    text << "predicted polygon vertices:";
    for (const auto& v : rep.predicted_polygon.vertices) text << " (" << v.i << "," << v.j << ")";
    text << "\n";
    if (rep.type) text << "type: " << rep.type->str() << "\n";
    else text << "type: UNDECIDED (" << rep.notes << ")\n";

    int rc = 0;
    std::vector<std::string> warnings;
    if (!rep.type && use_oracle) {
        const auto sample = gp::sample_generic(gp::build_poly(b), trials, seed);
        const auto verdict = gp::oracle_type(sample);
        result["oracle"] = gp::to_json(sample);
        if (!verdict.degenerate()) {
            result["oracle"]["type"] = gp::to_json(*verdict.type);
            text << "oracle type: " << verdict.type->str() << "\n";
        } else if (use_puiseux) {
            const auto branches = gp::puiseux_probe(sample.polar, 4 * n * m);
            result["puiseux"] = gp::json::array();
            text << "oracle: degenerate; Puiseux probe:\n";
            for (const auto& br : branches) {
                gp::json bj = gp::to_json(br);
                const auto cs = gp::char_exponents_from_approx(br);
                const auto sg = gp::gens_from_char_exponents(cs);
                bj["semigroup"] = gp::to_json(sg);
                gp::json ce = gp::json::array();
                for (const auto& be : cs.beta) ce.push_back(be.get_str());
                bj["char_exponents"] = ce;
                result["puiseux"].push_back(std::move(bj));
                text << "  branch with ramification " << br.denominator << ", semigroup "
                     << sg.str() << ", residual " << br.residual_norm << "\n";
            }
        } else {
            warnings.push_back("generic polar is degenerate; rerun with --puiseux");
            text << "oracle: degenerate (rerun with --puiseux)\n";
            rc = 3;
        }
    }
    emit(g, gp::envelope("classify", inputs, result, warnings), text.str());
    return rc;
}

int cmd_verify(const GlobalFlags& g, const gp::VerifyOptions& opt) {
    const auto res = gp::run_verify(opt);
    gp::json inputs;
    inputs["nmax"] = opt.nmax;
    inputs["mmax"] = opt.mmax;
    inputs["seed"] = opt.seed;
    inputs["trials"] = opt.trials;
    gp::json result;
    result["pairs"] = res.pairs;
    result["instances"] = res.instances.size();
    result["failures"] = res.failures;
    result["detail"] = gp::json::array();
    std::ostringstream text;
    long type_comparisons = 0;
    for (const auto& inst : res.instances) {
        if (inst.type_compared) ++type_comparisons;
        gp::json row;
        row["n"] = inst.n;
        row["m"] = inst.m;
        row["lambda"] = inst.lambda;
        row["profile"] = inst.profile;
        row["pass"] = inst.ok();
        if (!inst.ok()) row["detail"] = inst.detail;
        result["detail"].push_back(std::move(row));
        if (!inst.ok() && !g.quiet)
            text << "FAIL (" << inst.n << "," << inst.m << "," << inst.lambda << ") profile "
                 << inst.profile << ": " << inst.detail << "\n";
    }
    result["type_comparisons"] = type_comparisons;
    text << (res.all_ok() ? "PASS" : "FAIL") << ": " << res.instances.size() << " instances over "
         << res.pairs << " (n,m) pairs, " << type_comparisons << " type comparisons, "
         << res.failures << " failures\n";
    emit(g, gp::envelope("verify", inputs, result), text.str());
    return res.all_ok() ? 0 : 1;
}

int cmd_example(const GlobalFlags& g) {
    const auto checks = gp::run_example_5_12();
    gp::json result;
    result["checks"] = gp::json::array();
    std::ostringstream text;
    bool all = true;
    for (const auto& c : checks) {
        gp::json row;
        row["label"] = c.label;
        row["pass"] = c.pass;
        row["detail"] = c.detail;
        result["checks"].push_back(std::move(row));
        all = all && c.pass;
        text << (c.pass ? "PASS" : "FAIL") << "  " << c.label << "\n";
    }
    result["all_pass"] = all;
    result["count"] = checks.size();
    text << (all ? "all " : "SOME FAILURES among ") << checks.size() << " checks\n";
    emit(g, gp::envelope("example-5-12", gp::json::object(), result), text.str());
    return all ? 0 : 1;
}

int cmd_svg(const GlobalFlags& g, const std::string& kind, long n, long m,
            const std::string& lambda_s, const std::vector<std::string>& coeff_raw,
            const std::string& out_path) {
    std::string svg;
    if (kind == "triangle") {
        svg = gp::svg_triangle(n, m);
    } else if (kind == "region") {
        const auto lambda = parse_lambda(lambda_s);
        if (!lambda) throw std::invalid_argument("region figure needs a finite lambda");
        svg = gp::svg_region(n, m, *lambda);
    } else if (kind == "polygon") {
        const auto b = gp::BranchInput::make(n, m, parse_lambda(lambda_s),
                                             parse_coeffs(coeff_raw));
        svg = gp::svg_polygon(b);
    } else {
        throw std::invalid_argument("svg kind must be triangle, region or polygon");
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << "\n";
        return 4;
    }
    out << svg;
    if (!out.good()) {
        std::cerr << "failed writing " << out_path << "\n";
        return 4;
    }
    if (!g.quiet && !g.json) std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological type of generic polar curves of genus-one plane branches"};
    app.require_subcommand(1);
    app.fallthrough();  // --json / --quiet may follow the subcommand
    GlobalFlags g;
    app.add_flag("--json", g.json, "emit a machine-readable JSON envelope");
    app.add_flag("--quiet", g.quiet, "suppress human-readable output");

    long n = 0, m = 0;
    std::string lambda_s = "inf";
    std::vector<std::string> coeff_raw;
    bool use_oracle = false, use_puiseux = false;
    std::uint64_t seed = 0;
    int trials = 7;

    auto* zar = app.add_subcommand("zariski", "list the finite Zariski invariants of K(n,m)");
    zar->add_option("n", n)->required();
    zar->add_option("m", m)->required();

    auto* cls = app.add_subcommand("classify", "classify the generic polar of a branch");
    cls->add_option("n", n)->required();
    cls->add_option("m", m)->required();
    cls->add_option("lambda", lambda_s, "Zariski invariant or 'inf'")->required();
    cls->add_option("--coeff", coeff_raw, "normal-form coefficient i,j=p/q (repeatable)");
    cls->add_flag("--oracle", use_oracle, "run the exact polar oracle on undecided cases");
    cls->add_flag("--puiseux", use_puiseux, "probe degenerate polars numerically");
    cls->add_option("--seed", seed, "oracle sampling seed");
    cls->add_option("--trials", trials, "oracle sampling trials");

    gp::VerifyOptions vopt;
    auto* ver = app.add_subcommand("verify", "classifier-vs-oracle sweep");
    ver->add_option("--nmax", vopt.nmax, "largest multiplicity n (>= 4)");
    ver->add_option("--mmax", vopt.mmax, "largest m (>= 4)");
    ver->add_option("--seed", vopt.seed, "sweep seed");
    ver->add_option("--trials", vopt.trials, "oracle trials per instance");

    auto* exa = app.add_subcommand("example-5-12", "reproduce the K(5,12) case study");
    (void)exa;

    std::string kind, out_path = "figure.svg";
    auto* svg = app.add_subcommand("svg", "emit an SVG figure");
    svg->add_option("kind", kind, "triangle | region | polygon")->required();
    svg->add_option("n", n)->required();
    svg->add_option("m", m)->required();
    svg->add_option("lambda", lambda_s, "needed for region/polygon");
    svg->add_option("--coeff", coeff_raw, "coefficients for polygon figures");
    svg->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(zar)) return cmd_zariski(g, n, m);
        if (app.got_subcommand(cls))
            return cmd_classify(g, n, m, lambda_s, coeff_raw, use_oracle, use_puiseux, seed,
                                trials);
        if (app.got_subcommand(ver)) return cmd_verify(g, vopt);
        if (app.got_subcommand(exa)) return cmd_example(g);
        if (app.got_subcommand(svg)) return cmd_svg(g, kind, n, m, lambda_s, coeff_raw, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
