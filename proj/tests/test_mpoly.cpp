#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainwarn/mpoly.hpp"
#include "chainwarn/parse.hpp"

using namespace chainwarn;

TEST_CASE("evaluation") {
    auto z4 = make_chain_ring(2, 1, 2);
    MPoly f = parse_poly(z4, 2, "t1+t2");
    CHECK(f.eval({z4->from_int(1), z4->from_int(3)}) == z4->zero());

    auto z8 = make_chain_ring(2, 1, 3);
    MPoly g = parse_poly(z8, 1, "t1^2");
    CHECK(g.eval({z8->from_int(2)}) == z8->from_int(4));

    MPoly h = parse_poly(z4, 2, "2*t1*t2 + 3");
    CHECK(h.eval({z4->one(), z4->one()}) == z4->from_int(1));

    CHECK_THROWS_AS(f.eval({z4->one()}), std::invalid_argument);
}

TEST_CASE("total degree") {
    auto z4 = make_chain_ring(2, 1, 2);
    CHECK(parse_poly(z4, 3, "t1*t2 + t3").total_degree() == 2);
    CHECK_FALSE(MPoly(z4, 1).total_degree().has_value());
    // a zero-divisor coefficient still carries degree
    CHECK(parse_poly(z4, 1, "2*t1^3").total_degree() == 3);
    // coefficients that cancel mod p^v vanish from the term map
    CHECK_FALSE(parse_poly(z4, 1, "4*t1").total_degree().has_value());
}

TEST_CASE("product expansion") {
    auto z4 = make_chain_ring(2, 1, 2);
    MPoly a = parse_poly(z4, 1, "t1 + 3");  // t - 1
    MPoly b = parse_poly(z4, 1, "t1 + 1");
    CHECK(poly_product_expand(z4, 1, {a, b}) == parse_poly(z4, 1, "t1^2 + 3"));

    MPoly c = parse_poly(z4, 1, "2*t1");
    MPoly prod = poly_product_expand(z4, 1, {c, c});
    CHECK(prod.is_zero());  // coefficient 4 = 0: degree collapses
    CHECK_FALSE(prod.total_degree().has_value());

    CHECK(poly_product_expand(z4, 1, {}) == parse_poly(z4, 1, "1"));
}

TEST_CASE("evaluation is multiplicative on a small grid") {
    auto z4 = make_chain_ring(2, 1, 2);
    MPoly f = parse_poly(z4, 2, "t1^2 + 3*t2");
    MPoly g = parse_poly(z4, 2, "2*t1*t2 + 1");
    MPoly fg = f * g;
    for (const auto& x : all_elements(z4))
        for (const auto& y : all_elements(z4)) {
            std::vector<RingElement> pt{x, y};
            CHECK(fg.eval(pt) == f.eval(pt) * g.eval(pt));
        }
}

TEST_CASE("degree is subadditive with drop allowed") {
    auto z4 = make_chain_ring(2, 1, 2);
    MPoly f = parse_poly(z4, 1, "2*t1 + 1");
    MPoly g = parse_poly(z4, 1, "2*t1 + 2");
    auto df = f.total_degree(), dg = g.total_degree(), dfg = (f * g).total_degree();
    REQUIRE(df.has_value());
    REQUIRE(dg.has_value());
    REQUIRE(dfg.has_value());
    CHECK(*dfg <= *df + *dg);
    CHECK(*dfg == 1);  // (2t+1)(2t+2) = 2t + 2 in Z/4: the 4t^2 term vanishes
}

TEST_CASE("polynomial text grammar") {
    auto gr = make_chain_ring(2, 2, 2);
    MPoly f = parse_poly(gr, 2, "[1,1]*t1^2 + [0,3]*t2 + 3");
    CHECK(f.terms().size() == 3);
    CHECK(f.eval({gr->element({0, 1}), gr->zero()}) ==
          gr->element({1, 1}) * gr->element({3, 3}) + gr->from_int(3));
    CHECK_THROWS_AS(parse_poly(gr, 1, "t2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(gr, 1, "q"), std::invalid_argument);
    // minus joins terms
    auto z4 = make_chain_ring(2, 1, 2);
    CHECK(parse_poly(z4, 1, "t1 - 1") == parse_poly(z4, 1, "t1 + 3"));
}
