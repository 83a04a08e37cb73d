#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainwarn/parse.hpp"
#include "chainwarn/warning.hpp"

using namespace chainwarn;

namespace {

SubsetSpec ints(const RingPtr& r, std::initializer_list<i64> xs) {
    std::vector<RingElement> v;
    for (i64 x : xs) v.push_back(r->from_int(x));
    return SubsetSpec(v);
}

}  // namespace

TEST_CASE("c budget") {
    CHECK(c_budget(2, 2) == 1);
    CHECK(c_budget(3, 3) == 10);
    CHECK(c_budget(4, 1) == 0);
    CHECK(c_budget(7, 1) == 0);
}

TEST_CASE("afk valuation examples") {
    auto z32 = make_chain_ring(2, 1, 5);
    // x = 0, T = {0}: product over {1,2,3} is -6, valuation 1 = c(2)
    AfkResult r = afk_valuation(z32, z32->zero(), 2, ints(z32, {0}));
    CHECK(r.valuation == 1);
    CHECK(r.equality_case);

    // x = 1: the factor (1-1) collapses, valuation saturates above c
    AfkResult r2 = afk_valuation(z32, z32->one(), 2, ints(z32, {0}));
    CHECK(r2.valuation > 1);
    CHECK_FALSE(r2.equality_case);

    // Z/81, vj = 2, x = 3: ord(3) = 1 < 2, so strict inequality
    auto z81 = make_chain_ring(3, 1, 4);
    AfkResult r3 = afk_valuation(z81, z81->from_int(3), 2, ints(z81, {0}));
    CHECK(r3.valuation > 2);
    CHECK_FALSE(r3.equality_case);

    auto z4 = make_chain_ring(2, 1, 2);
    CHECK_THROWS_AS(afk_valuation(z4, z4->zero(), 1, ints(z4, {0, 2})), std::invalid_argument);
}

TEST_CASE("afk lemma exhaustively on Z/4 and GR(4,2), vj = 1..2") {
    for (auto [p, ell] : {std::pair<u64, int>{2, 1}, {3, 1}, {2, 2}}) {
        for (int vj = 1; vj <= 2; ++vj) {
            auto ring = make_chain_ring(p, ell, 2 * vj);
            i64 c = c_budget(ring->residue_size(), vj);
            auto s = coset_representatives(ring, vj);
            // all Condition-(F) subsets T of S(vj) with size <= 2
            std::vector<SubsetSpec> ts;
            for (size_t i = 0; i < s.size(); ++i) {
                ts.push_back(SubsetSpec({s[i]}));
                for (size_t j = i + 1; j < s.size(); ++j)
                    if (pi_valuation(s[i] - s[j]) == 0) ts.push_back(SubsetSpec({s[i], s[j]}));
            }
            for (const auto& x : all_elements(ring)) {
                for (const auto& t : ts) {
                    AfkResult r = afk_valuation(ring, x, vj, t);
                    CHECK(r.valuation >= c);
                    CHECK((r.valuation == c) == r.equality_case);
                }
            }
        }
    }
}

TEST_CASE("fat target factorization") {
    auto f2 = make_chain_ring(2, 1, 1);
    RestrictedSystem sys1(f2, {ints(f2, {0, 1})}, {parse_poly(f2, 1, "t1")}, {1},
                          {ints(f2, {0})});
    FatFactorization q1 = build_fat_target_polynomial(sys1);
    REQUIRE(q1.factors.size() == 1);
    CHECK(q1.factors[0].second == f2->one());
    CHECK(q1.formal_degree == 1);

    auto z4 = make_chain_ring(2, 1, 2);
    RestrictedSystem sys2(z4, {ints(z4, {0, 1})}, {parse_poly(z4, 1, "t1")}, {2},
                          {ints(z4, {0})});
    FatFactorization q2 = build_fat_target_polynomial(sys2);
    CHECK(q2.factors.size() == 3);  // (t-1)(t-2)(t-3)
    CHECK(q2.formal_degree == 3);

    RestrictedSystem sys3(f2, {ints(f2, {0, 1})},
                          {parse_poly(f2, 1, "t1"), parse_poly(f2, 1, "t1")}, {1, 1},
                          {ints(f2, {0}), ints(f2, {0})});
    CHECK(build_fat_target_polynomial(sys3).factors.size() == 2);
    CHECK(build_fat_target_polynomial(sys3).formal_degree == 2);
}

TEST_CASE("restricted solution counting") {
    auto f2 = make_chain_ring(2, 1, 1);
    RestrictedSystem sys(f2, {ints(f2, {0, 1}), ints(f2, {0, 1})},
                         {parse_poly(f2, 2, "t1+t2")}, {1}, {ints(f2, {0})});
    CHECK(count_restricted_solutions(sys) == 2);

    RestrictedSystem sys2(f2, {ints(f2, {0, 1}), ints(f2, {0, 1}), ints(f2, {0, 1})},
                          {parse_poly(f2, 3, "t1+t2+t3")}, {1}, {ints(f2, {0})});
    CHECK(count_restricted_solutions(sys2) == 4);  // q^(n-d), Warning-sharp

    auto z4 = make_chain_ring(2, 1, 2);
    RestrictedSystem sys3(z4, {ints(z4, {0, 1})}, {parse_poly(z4, 1, "t1")}, {2},
                          {ints(z4, {0, 1})});
    CHECK(count_restricted_solutions(sys3) == 2);
}

TEST_CASE("solution counting matches the factored-Q route") {
    auto z4 = make_chain_ring(2, 1, 2);
    RestrictedSystem sys(z4, {ints(z4, {0, 1}), ints(z4, {0, 3})},
                         {parse_poly(z4, 2, "t1*t2 + 2*t1 + 3")}, {2}, {ints(z4, {1, 2})});
    CHECK(count_restricted_solutions(sys) == count_solutions_via_fat_polynomial(sys));

    auto gr = make_chain_ring(2, 2, 2);
    RestrictedSystem sys2(
        gr, {SubsetSpec({gr->zero(), gr->one(), gr->element({0, 1})})},
        {parse_poly(gr, 1, "[0,1]*t1^2 + t1 + [2,3]")}, {2}, {SubsetSpec({gr->element({1, 1})})});
    CHECK(count_restricted_solutions(sys2) == count_solutions_via_fat_polynomial(sys2));
}

TEST_CASE("main theorem reports") {
    auto f2 = make_chain_ring(2, 1, 1);
    RestrictedSystem cor14(f2, {ints(f2, {0, 1}), ints(f2, {0, 1}), ints(f2, {0, 1})},
                           {parse_poly(f2, 3, "t1+t2+t3")}, {1}, {ints(f2, {0})});
    VerificationReport rep = verify_main_theorem(cor14);
    CHECK(rep.count == 4);
    CHECK(rep.bound == 4);  // m(2,2,2; 6-1) = 4
    CHECK(rep.holds);
    CHECK_FALSE(rep.vacuous);

    auto z4 = make_chain_ring(2, 1, 2);
    RestrictedSystem low(z4, {ints(z4, {0, 1}), ints(z4, {0, 1})}, {parse_poly(z4, 2, "t1+t2")},
                         {2}, {ints(z4, {0})});
    VerificationReport rep2 = verify_main_theorem(low);
    CHECK(rep2.count == 1);  // only (0,0)
    CHECK(rep2.bound == 1);  // argument 4 - 3 = 1 < n
    CHECK(rep2.holds);
    CHECK_FALSE(rep2.vacuous);

    // constant polynomial outside its target empties the solution set
    RestrictedSystem impossible(z4, {ints(z4, {0, 1})}, {parse_poly(z4, 1, "2")}, {2},
                                {ints(z4, {0})});
    VerificationReport rep3 = verify_main_theorem(impossible);
    CHECK(rep3.count == 0);
    CHECK(rep3.holds);

    // constant inside its target is dropped: no degree cost
    RestrictedSystem dropped(z4, {ints(z4, {0, 1})}, {parse_poly(z4, 1, "2")}, {1},
                             {ints(z4, {2})});
    VerificationReport rep4 = verify_main_theorem(dropped);
    CHECK(rep4.count == 2);
    CHECK(rep4.bound == 2);  // m(2; 2 - 0) = 2
    CHECK(rep4.holds);
}

TEST_CASE("alon-furedi nonvanishing counts") {
    auto f3 = make_chain_ring(3, 1, 1);
    VerificationReport r1 = count_nonvanishing(parse_poly(f3, 1, "t1"), {ints(f3, {0, 1, 2})});
    CHECK(r1.count == 2);
    CHECK(r1.bound == 2);  // m(3; 3-1), sharp
    CHECK(r1.holds);

    VerificationReport r2 = count_nonvanishing(parse_poly(f3, 2, "1"),
                                               {ints(f3, {0, 1, 2}), ints(f3, {0, 1})});
    CHECK(r2.count == 6);  // constant unit never vanishes
    CHECK(r2.holds);

    auto f2 = make_chain_ring(2, 1, 1);
    VerificationReport r3 =
        count_nonvanishing(parse_poly(f2, 2, "t1*t2"), {ints(f2, {0, 1}), ints(f2, {0, 1})});
    CHECK(r3.count == 1);
    CHECK(r3.bound == 1);  // m(2,2; 4-2)
    CHECK(r3.holds);

    // zero polynomial: count 0, trivially holds
    VerificationReport r4 = count_nonvanishing(MPoly(f2, 1), {ints(f2, {0, 1})});
    CHECK(r4.count == 0);
    CHECK(r4.holds);

    auto z4 = make_chain_ring(2, 1, 2);
    CHECK_THROWS_AS(count_nonvanishing(parse_poly(z4, 1, "t1"), {ints(z4, {0, 2})}),
                    std::invalid_argument);
}

TEST_CASE("sharp alon-furedi instances") {
    auto f2 = make_chain_ring(2, 1, 1);
    std::vector<SubsetSpec> grid{ints(f2, {0, 1}), ints(f2, {0, 1})};
    MPoly f = sharp_alon_furedi_instance(grid, {1, 1});
    CHECK(f == parse_poly(f2, 2, "t1*t2"));
    CHECK(count_nonvanishing(f, grid).count == 1);

    auto f3 = make_chain_ring(3, 1, 1);
    std::vector<SubsetSpec> grid3{ints(f3, {0, 1, 2})};
    MPoly g = sharp_alon_furedi_instance(grid3, {2});
    CHECK(g == parse_poly(f3, 1, "t1^2 + 2*t1"));  // t(t-1)
    CHECK(g.total_degree() == 2);
    CHECK(count_nonvanishing(g, grid3).count == 1);

    CHECK_THROWS_AS(sharp_alon_furedi_instance(grid3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(sharp_alon_furedi_instance(grid3, {4}), std::invalid_argument);

    // count is prod(#A_i - y_i) and degree is sum y_i, for every y
    auto z9 = make_chain_ring(3, 1, 2);
    std::vector<SubsetSpec> grid9{ints(z9, {0, 1, 5}), ints(z9, {2, 7})};
    for (i64 y1 = 1; y1 <= 3; ++y1)
        for (i64 y2 = 1; y2 <= 2; ++y2) {
            MPoly h = sharp_alon_furedi_instance(grid9, {y1, y2});
            CHECK(h.total_degree() == y1 + y2);
            CHECK(count_nonvanishing(h, grid9).count == BigInt((3 - y1) * (2 - y2)));
        }
}

TEST_CASE("system validation") {
    auto z4 = make_chain_ring(2, 1, 2);
    // input set failing Condition (F)
    CHECK_THROWS_AS(RestrictedSystem(z4, {ints(z4, {0, 2})}, {parse_poly(z4, 1, "t1")}, {1},
                                     {ints(z4, {0})}),
                    std::invalid_argument);
    // exponent above the length
    CHECK_THROWS_AS(RestrictedSystem(z4, {ints(z4, {0, 1})}, {parse_poly(z4, 1, "t1")}, {3},
                                     {ints(z4, {0})}),
                    std::invalid_argument);
    // variable count mismatch
    CHECK_THROWS_AS(RestrictedSystem(z4, {ints(z4, {0, 1})}, {parse_poly(z4, 2, "t1+t2")}, {1},
                                     {ints(z4, {0})}),
                    std::invalid_argument);
}

TEST_CASE("counts are partition independent") {
    auto f3 = make_chain_ring(3, 1, 1);
    RestrictedSystem sys(f3,
                         {ints(f3, {0, 1, 2}), ints(f3, {0, 1, 2}), ints(f3, {0, 1, 2}),
                          ints(f3, {0, 1, 2}), ints(f3, {0, 1, 2}), ints(f3, {0, 1, 2})},
                         {parse_poly(f3, 6, "t1+2*t2+t3*t4+t5+t6")}, {1}, {ints(f3, {0, 1})});
    BigInt serial = count_restricted_solutions(sys, 1);
    CHECK(serial == count_restricted_solutions(sys, 3));
    CHECK(serial == count_restricted_solutions(sys, 8));
}
