#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chainwarn/util.hpp"

namespace chainwarn::sweeps {

/// Aggregated result of one verification sweep. Every failure record is
/// a self-contained reproduction config.
struct Outcome {
    u64 instances = 0;
    std::vector<nlohmann::json> failures;
    bool pass() const { return failures.empty(); }
    void fail(nlohmann::json repro) {
        if (failures.size() < 64) failures.push_back(std::move(repro));
    }
};

/// m oracle equivalence (DP vs brute force) over all a with n <= max_n,
/// a_i <= max_a, every valid N; plus monotonicity in N.
Outcome mbound_equivalence(int max_n, int max_a);

/// Pigeonhole identity m >= 2 <=> N > n on the same ranges, the N < n
/// base case, and m(2,...,2; 2n-k) = 2^(n-k) for n <= max_binary_n.
Outcome mbound_identities(int max_n, int max_a, int max_binary_n);

/// Generalized AFK lemma, exhaustively: rings (2,1), (3,1), (2,2) with
/// q^vj <= 81, all Condition-(F) subsets T of S(vj) with #T <= 3, all x
/// in S(2 vj). Bulk path plus direct afk_valuation spot checks.
Outcome afk_lemma_exhaustive(u64 spot_check_seed, int spot_checks);

/// Main Theorem randomized sweep: p in {2,3}, v <= 2, ell <= 2, n <= 3,
/// r <= 2, #A_i <= q, deg f_j <= 2; verifies holds and the proof
/// bijection (ord Q <= c <=> solution) on every instance.
Outcome main_theorem_random(u64 seed, u64 instances);

/// Classical Warning sharpness: F_2 and F_3, linear systems with
/// d < n <= 4; nonzero counts >= q^(n-d) with equality witnessed per
/// (q, n, d).
Outcome warning_sharpness(u64 seed, u64 samples_per_shape);

/// Alon-Furedi over a ring on random polynomials and grids, plus the
/// sharpness construction: exact counts for every y on grids with
/// n <= max_n, #A_i <= max_a, and attainment of the m bound.
Outcome alon_furedi(u64 seed, u64 instances, int max_n, int max_a);

/// Davenport suite: D = d on all p-groups with #G <= 32 (by search),
/// D(Z/2+Z/2+Z/4), the plus-minus constants, the weighted upper bound
/// and the subgroup identity.
Outcome davenport_suite();

/// N-count suite: Olson / CCQWZ / fat-bound checks on all sequences of
/// length <= max_len in groups of order <= max_order.
Outcome ncount_suite(int max_order, int max_len);

/// Graph suite: subgraph-count bijection on random multigraphs, parity
/// law, parity-subgroup isomorphism, sandwich, atomic searches.
Outcome graph_suite(u64 seed, u64 samples);

/// Hypergraph suite: the 2^(n-d(p^v-#B)) bound on random hypergraphs and
/// Schmitt-construction atomicity.
Outcome hypergraph_suite(u64 seed, u64 samples);

/// Interpolation suite: fat-target counts both routes, nonzero
/// interpolant existence, Troi-Zannier minimal degrees.
Outcome interpolation_suite(u64 seed, u64 samples);

}  // namespace chainwarn::sweeps
