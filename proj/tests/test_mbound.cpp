#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainwarn/mbound.hpp"

using namespace chainwarn;

TEST_CASE("query validation") {
    CHECK_THROWS_AS(MBoundQuery({2, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(MBoundQuery({2, 2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(MBoundQuery({2, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(MBoundQuery({}, 1), std::invalid_argument);
}

TEST_CASE("brute-force examples") {
    CHECK(m_bound_bruteforce(MBoundQuery({2, 2, 2}, 2)) == 1);  // N < n
    CHECK(m_bound_bruteforce(MBoundQuery({2, 2}, 4)) == 4);     // unique composition
    CHECK(m_bound_bruteforce(MBoundQuery({3, 3}, 4)) == 3);     // min over (1,3),(2,2),(3,1)
}

TEST_CASE("DP examples") {
    CHECK(m_bound(MBoundQuery({2, 2, 2}, 5)) == 4);  // m(2,2,2;2n-k), n=3, k=1
    CHECK(m_bound(MBoundQuery({5, 5, 5}, 3)) == 1);
    // compositions of 7 in [1,3]^3 are permutations of (1,3,3) -> 9 and
    // (2,2,3) -> 12, so the oracle gives 9
    CHECK(m_bound(MBoundQuery({3, 3, 3}, 7)) == 9);
    CHECK(m_bound_bruteforce(MBoundQuery({3, 3, 3}, 7)) == 9);
}

TEST_CASE("DP equals brute force on a full small sweep") {
    for (i64 a1 = 1; a1 <= 4; ++a1)
        for (i64 a2 = 1; a2 <= 4; ++a2)
            for (i64 a3 = 1; a3 <= 4; ++a3) {
                std::vector<i64> a{a1, a2, a3};
                for (i64 N = 1; N <= a1 + a2 + a3; ++N) {
                    MBoundQuery q(a, N);
                    CHECK(m_bound(q) == m_bound_bruteforce(q));
                }
            }
}

TEST_CASE("pigeonhole identity") {
    CHECK(pigeonhole_threshold(MBoundQuery({2, 2}, 3)));
    CHECK_FALSE(pigeonhole_threshold(MBoundQuery({2, 2}, 2)));
    CHECK(pigeonhole_threshold(MBoundQuery({4, 4, 4}, 4)));
    for (i64 a1 = 1; a1 <= 4; ++a1)
        for (i64 a2 = 1; a2 <= 4; ++a2)
            for (i64 N = 1; N <= a1 + a2; ++N)
                CHECK(pigeonhole_threshold(MBoundQuery({a1, a2}, N)) == (N > 2));
}

TEST_CASE("binary grid identity up to n = 12") {
    for (i64 n = 1; n <= 12; ++n)
        for (i64 k = 0; k <= n; ++k) {
            BigInt expect = BigInt(1) << unsigned(n - k);
            CHECK(m_bound(MBoundQuery(std::vector<i64>(size_t(n), 2), 2 * n - k)) == expect);
        }
}

TEST_CASE("witness is the lexicographically smallest minimizer") {
    MBoundQuery q({3, 3}, 4);
    CHECK(m_bound_witness(q) == std::vector<i64>{1, 3});
    MBoundQuery tie({2, 2}, 3);  // (1,2) and (2,1) both give 2
    CHECK(m_bound_witness(tie) == std::vector<i64>{1, 2});
    CHECK(m_bound_witness(MBoundQuery({2, 2, 2}, 2)).empty());  // N < n
}

TEST_CASE("monotonicity in N") {
    std::vector<i64> a{3, 4, 2};
    for (i64 N = 3; N < 9; ++N)
        CHECK(m_bound(MBoundQuery(a, N)) <= m_bound(MBoundQuery(a, N + 1)));
}

TEST_CASE("clamped bound flags vacuity") {
    bool vac = false;
    CHECK(m_bound_clamped({2, 2}, -3, &vac) == 1);
    CHECK(vac);
    CHECK(m_bound_clamped({2, 2}, 3, &vac) == 2);
    CHECK_FALSE(vac);
}

TEST_CASE("products are exact big integers") {
    // 12 sixes, N = 72 forces y = a: product 6^12 > 2^31
    std::vector<i64> a(12, 6);
    CHECK(m_bound(MBoundQuery(a, 72)) == BigInt("2176782336"));
}
