#pragma once

#include <vector>

#include "chainwarn/util.hpp"

namespace chainwarn {

/// Query for the Alon-Furedi bound function m(a_1,...,a_n; N): the
/// minimum of prod y_i over integer vectors with y_i in [1, a_i] and
/// sum y_i = N, and 1 when N < n.
struct MBoundQuery {
    std::vector<i64> a;
    i64 N = 0;
    MBoundQuery(std::vector<i64> a_, i64 N_);
};

/// Exhaustive-recursion oracle; only for small queries (n <= 8, a_i <= 8).
BigInt m_bound_bruteforce(const MBoundQuery& q);

/// DP over (index, remaining sum); exact big-integer products. Agrees
/// with the brute-force oracle everywhere both run.
BigInt m_bound(const MBoundQuery& q);

/// The minimizing composition, lexicographically smallest among
/// minimizers (all-ones padding when N < n is reported as empty).
std::vector<i64> m_bound_witness(const MBoundQuery& q);

/// m(...) >= 2; equals (N > n) by the pigeonhole identity.
bool pigeonhole_threshold(const MBoundQuery& q);

/// The Main Theorem's bound argument can fall below 1; callers clamp it
/// here: returns m(a; N) for N in [1, sum a], 1 (with *vacuous = true)
/// for N < 1. N > sum(a) cannot arise from the theorem's expression.
BigInt m_bound_clamped(const std::vector<i64>& a, i64 N, bool* vacuous);

}  // namespace chainwarn
