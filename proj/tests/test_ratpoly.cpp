#include <doctest.h>

#include "genpolar/ratpoly.hpp"

using namespace genpolar;

namespace {

RatPoly pl(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("division invariant") {
    const RatPoly f = pl({1, 0, -3, 0, 2, 5});
    const RatPoly g = pl({-2, 1, 1});
    const auto [q, r] = f.divmod(g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK_THROWS_AS(f.divmod(RatPoly()), std::domain_error);
}

TEST_CASE("gcd divides both inputs and is monic") {
    const RatPoly h = pl({1, 2, 1});            // (t+1)^2
    const RatPoly f = h * pl({-3, 1});          // (t+1)^2 (t-3)
    const RatPoly g = h * pl({5, 0, 1});        // (t+1)^2 (t^2+5)
    const RatPoly d = poly_gcd(f, g);
    CHECK(d == h);  // h is monic already
    CHECK(f.divmod(d).second.is_zero());
    CHECK(g.divmod(d).second.is_zero());
    CHECK(poly_gcd(pl({1, 1}), pl({2, 1})).degree() == 0);
}

TEST_CASE("square-freeness of the nonzero roots") {
    CHECK(nonzero_roots_simple(pl({-1, 0, 0, 0, 0, 1})));   // t^5 - 1
    CHECK_FALSE(nonzero_roots_simple(pl({1, 0, -2, 0, 1})));  // (t^2-1)^2
    CHECK(nonzero_roots_simple(pl({0, 0, -1, 0, 0, 0, 0, 1})));  // t^2(t^5 - 1)
    CHECK(nonzero_roots_simple(pl({0, 0, 1})));  // t^2: only the zero root
    CHECK(nonzero_roots_simple(pl({3})));
}

TEST_CASE("resultants") {
    // res(t^2 - 1, t^2 - 4) = (1-4)(1-4)... product over roots of f of g(r)
    CHECK(resultant(pl({-1, 0, 1}), pl({-4, 0, 1})) == Rat(9));
    // common root
    CHECK(resultant(pl({-1, 0, 1}), pl({-1, 1})) == Rat(0));
    // res(f, c) = c^deg f
    CHECK(resultant(pl({1, 2, 3, 1}), pl({5})) == Rat(125));
    // degree-1 pair: res(t - a, t - b) = b - a up to sign convention
    const Rat r = resultant(pl({-2, 1}), pl({-7, 1}));
    CHECK((r == Rat(5) || r == Rat(-5)));
}

TEST_CASE("evaluation and derivative") {
    const RatPoly f = pl({1, -2, 0, 4});  // 4t^3 - 2t + 1
    CHECK(f.eval(Rat(2)) == Rat(29));
    CHECK(f.derivative() == pl({-2, 0, 12}));
    CHECK(f.valuation() == 0);
    CHECK(pl({0, 0, 7, 1}).valuation() == 2);
}
