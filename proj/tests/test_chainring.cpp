#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "chainwarn/chainring.hpp"

using namespace chainwarn;

TEST_CASE("construction of basic rings") {
    auto z8 = make_chain_ring(2, 1, 3);
    CHECK(z8->cardinality() == 8);
    CHECK(z8->residue_size() == 2);

    auto f4 = make_chain_ring(2, 2, 1);
    CHECK(f4->cardinality() == 4);
    // the only monic irreducible quadratic over F_2
    CHECK(f4->modulus_poly() == std::vector<u64>{1, 1, 1});

    auto gr42 = make_chain_ring(2, 2, 2);
    CHECK(gr42->cardinality() == 16);
    CHECK(gr42->residue_size() == 4);

    CHECK_THROWS_AS(make_chain_ring(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_chain_ring(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_chain_ring(2, 1, 0), std::invalid_argument);
}

TEST_CASE("modulus polynomial is the minimal irreducible lift") {
    // over F_3 the counter order hits x^2 + 1 first
    auto f9 = make_chain_ring(3, 2, 1);
    CHECK(f9->modulus_poly() == std::vector<u64>{1, 0, 1});
    // degree-3 over F_2: x^3 + x + 1 beats x^3 + x^2 + 1
    auto f8 = make_chain_ring(2, 3, 1);
    CHECK(f8->modulus_poly() == std::vector<u64>{1, 1, 0, 1});
}

TEST_CASE("arithmetic in Z/8") {
    auto r = make_chain_ring(2, 1, 3);
    CHECK(r->from_int(5) + r->from_int(5) == r->from_int(2));
    CHECK(r->from_int(2) * r->from_int(4) == r->zero());
    CHECK(-r->from_int(3) == r->from_int(5));
    auto other = make_chain_ring(2, 1, 2);
    CHECK_THROWS_AS(r->from_int(1) + other->from_int(1), std::invalid_argument);
}

TEST_CASE("arithmetic in GR(4,2)") {
    auto r = make_chain_ring(2, 2, 2);
    RingElement x = r->element({0, 1});
    // x^2 = -x - 1 = 3x + 3
    CHECK(x * x == r->element({3, 3}));
    CHECK(r->element({3, 1}) + r->element({1, 3}) == r->element({0, 0}));
}

TEST_CASE("pi-adic valuation") {
    auto z8 = make_chain_ring(2, 1, 3);
    CHECK(pi_valuation(z8->from_int(4)) == 2);
    CHECK(pi_valuation(z8->zero()) == 3);
    CHECK(pi_valuation(z8->from_int(1)) == 0);

    auto gr = make_chain_ring(2, 2, 2);
    CHECK(pi_valuation(gr->element({2, 2})) == 1);
}

TEST_CASE("valuation laws hold exhaustively on small rings") {
    for (auto [p, ell, v] : {std::tuple<u64, int, int>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
        auto r = make_chain_ring(p, ell, v);
        auto elems = all_elements(r);
        for (const auto& x : elems) {
            for (const auto& y : elems) {
                int vx = pi_valuation(x), vy = pi_valuation(y);
                CHECK(pi_valuation(x * y) == std::min(vx + vy, v));
                CHECK(pi_valuation(x + y) >= std::min(vx, vy));
            }
        }
        // #{x : ord >= i} = p^((v-i) ell)
        for (int i = 0; i <= v; ++i) {
            u64 expect = 1;
            for (int k = 0; k < (v - i) * ell; ++k) expect *= p;
            u64 got = 0;
            for (const auto& x : elems)
                if (pi_valuation(x) >= i) ++got;
            CHECK(got == expect);
        }
    }
}

TEST_CASE("units are exactly the valuation-zero elements") {
    for (auto [p, ell, v] : {std::tuple<u64, int, int>{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
        auto r = make_chain_ring(p, ell, v);
        auto elems = all_elements(r);
        for (const auto& x : elems) {
            bool has_inverse = false;
            for (const auto& y : elems)
                if (x * y == r->one()) has_inverse = true;
            CHECK(has_inverse == (pi_valuation(x) == 0));
        }
    }
}

TEST_CASE("coset representatives") {
    auto z8 = make_chain_ring(2, 1, 3);
    auto s2 = coset_representatives(z8, 2);
    REQUIRE(s2.size() == 4);
    for (u64 i = 0; i < 4; ++i) CHECK(s2[i] == z8->from_int(i64(i)));
    CHECK(coset_representatives(z8, 3).size() == 8);
    CHECK_THROWS_AS(coset_representatives(z8, 0), std::invalid_argument);
    CHECK_THROWS_AS(coset_representatives(z8, 4), std::invalid_argument);

    auto gr = make_chain_ring(2, 2, 2);
    auto s1 = coset_representatives(gr, 1);
    REQUIRE(s1.size() == 4);
    CHECK(s1[0] == gr->element({0, 0}));
    CHECK(s1[1] == gr->element({1, 0}));
    CHECK(s1[2] == gr->element({0, 1}));
    CHECK(s1[3] == gr->element({1, 1}));
    // pairwise incongruent mod p^a
    for (size_t i = 0; i < s1.size(); ++i)
        for (size_t j = i + 1; j < s1.size(); ++j)
            CHECK(pi_valuation(s1[i] - s1[j]) < 1);
}

TEST_CASE("conditions F and D coincide in a chain ring") {
    auto z4 = make_chain_ring(2, 1, 2);
    SubsetSpec ok({z4->from_int(0), z4->from_int(1)});
    CHECK(check_condition(ok, Condition::F));
    CHECK(check_condition(ok, Condition::D));
    SubsetSpec bad({z4->from_int(0), z4->from_int(2)});
    CHECK_FALSE(check_condition(bad, Condition::F));
    CHECK_FALSE(check_condition(bad, Condition::D));

    auto gr = make_chain_ring(2, 2, 2);
    SubsetSpec mixed({gr->element({0, 0}), gr->element({1, 0}), gr->element({0, 1})});
    CHECK(check_condition(mixed, Condition::F));

    CHECK_THROWS_AS(SubsetSpec({z4->from_int(1), z4->from_int(1)}), std::invalid_argument);

    // F <=> pairwise incongruent mod p, exhaustively on Z/4 pairs
    auto elems = all_elements(z4);
    for (const auto& x : elems)
        for (const auto& y : elems) {
            if (x == y) continue;
            bool incongruent = pi_valuation(x - y) == 0;
            CHECK(check_condition(SubsetSpec({x, y}), Condition::F) == incongruent);
        }
}

TEST_CASE("lift and reduce preserve canonical coefficients") {
    auto z4 = make_chain_ring(2, 1, 2);
    auto z16 = make_chain_ring(2, 1, 4);
    RingElement x = z4->from_int(3);
    RingElement lifted = lift_element(z16, x);
    CHECK(lifted.coeffs() == x.coeffs());
    CHECK(reduce_element(z4, z16->from_int(7)) == z4->from_int(3));
    CHECK_THROWS_AS(lift_element(make_chain_ring(3, 1, 3), x), std::invalid_argument);
}

TEST_CASE("element serialization") {
    auto z8 = make_chain_ring(2, 1, 3);
    CHECK(z8->from_int(5).str() == "5");
    auto gr = make_chain_ring(2, 2, 2);
    CHECK(gr->element({3, 1}).str() == "[3,1]");
}
