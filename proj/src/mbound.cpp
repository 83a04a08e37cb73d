#include "chainwarn/mbound.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chainwarn {

MBoundQuery::MBoundQuery(std::vector<i64> a_, i64 N_) : a(std::move(a_)), N(N_) {
    if (a.empty()) throw std::invalid_argument("m-bound needs at least one a_i");
    for (i64 ai : a)
        if (ai < 1) throw std::invalid_argument("each a_i must be >= 1");
    i64 total = std::accumulate(a.begin(), a.end(), i64(0));
    if (N < 1 || N > total) throw std::invalid_argument("N out of [1, sum a_i]");
}

BigInt m_bound_bruteforce(const MBoundQuery& q) {
    const i64 n = i64(q.a.size());
    if (n > 8) throw BudgetError("brute-force m-bound limited to n <= 8", std::to_string(n));
    for (i64 ai : q.a)
        if (ai > 8) throw BudgetError("brute-force m-bound limited to a_i <= 8", std::to_string(ai));
    if (q.N < n) return 1;

    BigInt best = -1;
    std::vector<i64> y(q.a.size());
    auto rec = [&](auto&& self, size_t i, i64 remaining, const BigInt& prod) -> void {
        if (i == q.a.size()) {
            if (remaining == 0 && (best < 0 || prod < best)) best = prod;
            return;
        }
        for (i64 yi = 1; yi <= q.a[i] && yi <= remaining; ++yi) {
            y[i] = yi;
            self(self, i + 1, remaining - yi, prod * yi);
        }
    };
    rec(rec, 0, q.N, BigInt(1));
    if (best < 0) throw std::logic_error("no composition found");
    return best;
}

namespace {

// table[i][s] = min prod of y_i..y_{n-1} with sum s; -1 marks infeasible
std::vector<std::vector<BigInt>> dp_table(const std::vector<i64>& a, i64 N) {
    const size_t n = a.size();
    std::vector<i64> suffix(n + 1, 0);
    for (size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + a[i];
    std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(size_t(N) + 1, BigInt(-1)));
    table[n][0] = 1;
    for (size_t i = n; i-- > 0;) {
        for (i64 s = 0; s <= N; ++s) {
            // y_i in [1, a_i], remaining must stay achievable by suffix
            i64 lo = std::max<i64>(1, s - suffix[i + 1]);
            i64 hi = std::min<i64>(a[i], s - i64(n - 1 - i));
            BigInt best = -1;
            for (i64 yi = lo; yi <= hi; ++yi) {
                const BigInt& rest = table[i + 1][size_t(s - yi)];
                if (rest < 0) continue;
                BigInt cand = rest * yi;
                if (best < 0 || cand < best) best = cand;
            }
            table[i][size_t(s)] = best;
        }
    }
    return table;
}

}  // namespace

BigInt m_bound(const MBoundQuery& q) {
    const i64 n = i64(q.a.size());
    i64 total = std::accumulate(q.a.begin(), q.a.end(), i64(0));
    if (total > 20000) throw BudgetError("m-bound DP limited to sum a_i <= 20000", std::to_string(total));
    if (q.N < n) return 1;
    auto table = dp_table(q.a, q.N);
    BigInt r = table[0][size_t(q.N)];
    if (r < 0) throw std::logic_error("DP found no composition");
    return r;
}

std::vector<i64> m_bound_witness(const MBoundQuery& q) {
    const size_t n = q.a.size();
    if (q.N < i64(n)) return {};
    auto table = dp_table(q.a, q.N);
    std::vector<i64> y(n);
    i64 s = q.N;
    for (size_t i = 0; i < n; ++i) {
        const BigInt& target = table[i][size_t(s)];
        for (i64 yi = 1; yi <= q.a[i] && yi <= s; ++yi) {
            const BigInt& rest = table[i + 1][size_t(s - yi)];
            if (rest >= 0 && rest * yi == target) {
                y[i] = yi;
                s -= yi;
                break;
            }
        }
    }
    return y;
}

bool pigeonhole_threshold(const MBoundQuery& q) { return m_bound(q) >= 2; }

BigInt m_bound_clamped(const std::vector<i64>& a, i64 N, bool* vacuous) {
    i64 total = std::accumulate(a.begin(), a.end(), i64(0));
    if (N > total) throw std::invalid_argument("bound argument above sum a_i");
    if (N < 1) {
        if (vacuous) *vacuous = true;
        return 1;
    }
    if (vacuous) *vacuous = false;
    return m_bound(MBoundQuery(a, N));
}

}  // namespace chainwarn
