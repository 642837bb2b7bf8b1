#include <doctest.h>

#include <complex>

#include "genpolar/oracle.hpp"

using namespace genpolar;

namespace {

SparsePoly from_terms(std::vector<std::tuple<long, long, long>> ts) {
    SparsePoly f;
    for (const auto& [i, j, a] : ts) f.add_term(i, j, Rat(a));
    return f;
}

NumericalSemigroup sg(std::vector<long> gens) {
    return NumericalSemigroup::from_generators(std::vector<Int>(gens.begin(), gens.end()));
}

}  // namespace

TEST_CASE("normal-form polynomials") {
    const auto f = build_poly(BranchInput::make(5, 12, 13));
    CHECK(f == from_terms({{0, 5, 1}, {12, 0, -1}, {5, 3, 1}}));

    const auto finf = build_poly(BranchInput::make(5, 12, std::nullopt));
    CHECK(finf == from_terms({{0, 5, 1}, {12, 0, -1}}));

    const auto fc =
        build_poly(BranchInput::make(5, 12, 13, {{LatticePoint{10, 1}, make_rat(9, 20)}}));
    CHECK(fc.coeff(10, 1) == make_rat(9, 20));
    CHECK(fc.term_count() == 4);
}

TEST_CASE("polars differentiate term by term") {
    const auto f = from_terms({{0, 5, 1}, {12, 0, -1}});
    CHECK(polar(f, 1, 1) == from_terms({{0, 4, 5}, {11, 0, -12}}));

    CHECK(polar(from_terms({{1, 1, 1}}), 1, 0) == from_terms({{0, 1, 1}}));

    const auto g = from_terms({{0, 5, 1}, {12, 0, -1}, {5, 3, 1}});
    const auto p = polar(g, 2, 3);
    CHECK(p.coeff(11, 0) == Rat(-24));
    CHECK(p.coeff(4, 3) == Rat(10));
    CHECK(p.coeff(0, 4) == Rat(15));
    CHECK(p.coeff(5, 2) == Rat(9));
    CHECK(p.term_count() == 4);
    CHECK_THROWS_AS(polar(g, 0, 0), std::invalid_argument);
}

TEST_CASE("generic sampling is deterministic and votes by polygon") {
    const auto f = build_poly(BranchInput::make(5, 12, std::nullopt));
    const auto s1 = sample_generic(f, 7, 123);
    const auto s2 = sample_generic(f, 7, 123);
    CHECK(s1.a == s2.a);
    CHECK(s1.b == s2.b);
    CHECK(s1.polygon == s2.polygon);
    CHECK(s1.nondegenerate);
    CHECK(s1.polygon.vertices == std::vector<LatticePoint>{{0, 4}, {11, 0}});
    CHECK(s1.trials.size() == 7);

    const auto f13 = build_poly(BranchInput::make(5, 12, 13));
    const auto s3 = sample_generic(f13, 7, 0);
    CHECK(s3.polygon.vertices == std::vector<LatticePoint>{{0, 4}, {5, 2}, {11, 0}});
    CHECK(s3.nondegenerate);

    // the 9/20 instance is degenerate in every direction
    // the 9/20 family is degenerate in every direction
    const auto fdeg = build_poly(BranchInput::make(
        5, 12, 13, {{LatticePoint{10, 1}, make_rat(9, 20)}, {LatticePoint{8, 2}, Rat(1)}}));
    const auto s4 = sample_generic(fdeg, 7, 99);
    CHECK_FALSE(s4.nondegenerate);
    CHECK(s4.degenerate_edge.has_value());
    for (const TrialRecord& t : s4.trials) CHECK_FALSE(t.nondegenerate);
}

TEST_CASE("oracle types for the worked cases") {
    const auto t14 = oracle_type(sample_generic(build_poly(BranchInput::make(5, 12, 14)), 7, 1));
    REQUIRE_FALSE(t14.degenerate());
    CHECK(t14.type->classes.size() == 1);
    CHECK(t14.type->classes[0].count == 2);
    CHECK(t14.type->classes[0].gens == sg({2, 5}));
    CHECK(t14.type->pairwise[0][0] == 10);

    const auto t33 = oracle_type(sample_generic(build_poly(BranchInput::make(5, 12, 33)), 7, 1));
    REQUIRE_FALSE(t33.degenerate());
    CHECK(t33.type->classes.size() == 1);
    CHECK(t33.type->classes[0].count == 1);
    CHECK(t33.type->classes[0].gens == sg({4, 11}));

    const auto fdeg =
        build_poly(BranchInput::make(5, 12, 13, {{LatticePoint{10, 1}, make_rat(9, 20)}}));
    const auto tdeg = oracle_type(sample_generic(fdeg, 7, 99));
    CHECK(tdeg.degenerate());
}

TEST_CASE("Puiseux expansion of the cusp") {
    const auto branches = puiseux_probe(from_terms({{0, 2, 1}, {3, 0, -1}}), 40);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].denominator == 2);
    CHECK(branches[0].residual_norm < 1e-9);
    REQUIRE_FALSE(branches[0].terms.empty());
    CHECK(branches[0].terms[0].first == make_rat(3, 2));
    const auto cs = char_exponents_from_approx(branches[0]);
    CHECK(cs.beta == std::vector<Int>{2, 3});
    CHECK(gens_from_char_exponents(cs) == sg({2, 3}));
}

TEST_CASE("Puiseux expansion of the node") {
    const auto branches = puiseux_probe(from_terms({{0, 2, 1}, {2, 0, -1}}), 40);
    REQUIRE(branches.size() == 2);
    for (const auto& br : branches) {
        CHECK(br.denominator == 1);
        CHECK(br.residual_norm < 1e-9);
        const auto cs = char_exponents_from_approx(br);
        CHECK(cs.beta == std::vector<Int>{1});
    }
    // contact order 1: the two leading coefficients differ
    const std::complex<double> c0 = branches[0].terms[0].second;
    const std::complex<double> c1 = branches[1].terms[0].second;
    CHECK(std::abs(c0 - c1) > 0.5);
}

TEST_CASE("Puiseux expansion with a ramified continuation") {
    // (y - x^3)^2 - x^7: one branch, exponents 3 and 7/2
    SparsePoly f;
    f.add_term(0, 2, Rat(1));
    f.add_term(3, 1, Rat(-2));
    f.add_term(6, 0, Rat(1));
    f.add_term(7, 0, Rat(-1));
    const auto branches = puiseux_probe(f, 60);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].denominator == 2);
    CHECK(branches[0].residual_norm < 1e-9);
    const auto cs = char_exponents_from_approx(branches[0]);
    CHECK(cs.beta == std::vector<Int>{2, 7});
}

TEST_CASE("the degenerate 9/20 polar: generic vs special family member") {
    const auto want25 = sg({2, 5});
    const auto want421 = sg({4, 10, 21});

    // generic member of the lambda = 13 family (a_{8,2} = 1): one genus-two
    // branch with semigroup <4,10,21>
    const auto bfull = BranchInput::make(
        5, 12, 13, {{LatticePoint{10, 1}, make_rat(9, 20)}, {LatticePoint{8, 2}, Rat(1)}});
    const auto sfull = sample_generic(build_poly(bfull), 7, 7);
    CHECK_FALSE(sfull.nondegenerate);
    const auto full_branches = puiseux_probe(sfull.polar, 240);
    REQUIRE(full_branches.size() == 1);
    CHECK(full_branches[0].denominator == 4);
    CHECK(full_branches[0].residual_norm < 1e-6);
    CHECK(gens_from_char_exponents(char_exponents_from_approx(full_branches[0])) == want421);

    // the special member a_{8,2} = 0 splits instead into two <2,5> branches
    // with contact 3; exact cross-check: ord_x Res_y(P, P_y) = 32 here,
    // while a single <4,10,21> branch would force 31
    const auto bzero =
        BranchInput::make(5, 12, 13, {{LatticePoint{10, 1}, make_rat(9, 20)}});
    const auto szero = sample_generic(build_poly(bzero), 7, 7);
    CHECK_FALSE(szero.nondegenerate);
    const auto zero_branches = puiseux_probe(szero.polar, 240);
    REQUIRE(zero_branches.size() == 2);
    for (const auto& br : zero_branches) {
        CHECK(br.denominator == 2);
        CHECK(gens_from_char_exponents(char_exponents_from_approx(br)) == want25);
    }
    CHECK(intersection_order(szero.polar, szero.polar.derivative_y()) == 32);
    CHECK(intersection_order(sfull.polar, sfull.polar.derivative_y()) == 31);
}

TEST_CASE("ramification indices sum to the y-degree") {
    const std::vector<SparsePoly> suite = {
        from_terms({{0, 2, 1}, {3, 0, -1}}),           // cusp
        from_terms({{0, 2, 1}, {2, 0, -1}}),           // node
        from_terms({{0, 3, 1}, {4, 0, -1}}),           // E6
        polar(build_poly(BranchInput::make(5, 12, 13)), 3, 2),
        polar(build_poly(BranchInput::make(5, 12, 14)), 5, 7),
        polar(build_poly(BranchInput::make(5, 12, 16)), 1, 4),
        polar(build_poly(BranchInput::make(5, 12, 18)), 2, 9),
        polar(build_poly(BranchInput::make(5, 12, 21)), 4, 3),
        polar(build_poly(BranchInput::make(5, 12, 13, {{LatticePoint{10, 1}, make_rat(9, 20)}})),
              1, 1),
        polar(build_poly(BranchInput::make(5, 12, 13, {{LatticePoint{8, 2}, Rat(1)}})), 3, 5),
    };
    for (const auto& f : suite) {
        long total = 0;
        for (const auto& br : puiseux_probe(f, 240)) total += br.denominator;
        CHECK(total == f.deg_y());
    }
}

TEST_CASE("intersection orders") {
    const auto cusp = from_terms({{0, 2, 1}, {3, 0, -1}});
    CHECK(intersection_order(cusp, from_terms({{0, 1, 1}})) == 3);
    CHECK(intersection_order(cusp, from_terms({{0, 2, 1}, {2, 0, -1}})) == 4);
    CHECK(intersection_order(from_terms({{0, 1, 1}, {1, 0, -1}}),
                             from_terms({{0, 1, 1}, {1, 0, 1}})) == 1);
    CHECK_THROWS_AS(intersection_order(cusp, cusp), std::domain_error);
}

TEST_CASE("intersection order is symmetric on random coprime pairs") {
    std::uint64_t s = 2024;
    auto rnd = [&](long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
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
            const Int ab = intersection_order(f, g);
            const Int ba = intersection_order(g, f);
            CHECK(ab == ba);
            ++done;
        } catch (const std::domain_error&) {
            continue;  // shared factor: not a coprime pair, redraw
        }
    }
}
