#pragma once

#include <optional>
#include <vector>

#include "chainwarn/util.hpp"
#include "chainwarn/warning.hpp"

namespace chainwarn {

/// Finite abelian group given by invariant factors 1 < n_1 | ... | n_r.
/// Factors equal to 1 are dropped on construction; the trivial group
/// (rank 0) is allowed, since it arises as the reduced group G(q') of
/// the parity-subgroup isomorphism.
struct PGroup {
    std::vector<i64> invariants;
    explicit PGroup(std::vector<i64> factors);
    i64 order() const;
    i64 exponent() const;  // n_r; 1 for the trivial group
    int rank() const { return int(invariants.size()); }
    /// The prime when this is a nontrivial p-group.
    std::optional<u64> p_group_prime() const;
    bool operator==(const PGroup& o) const { return invariants == o.invariants; }
};

/// d(G) = 1 + sum (n_i - 1): the invariant-factor lower bound for D(G).
i64 little_d(const PGroup& G);

/// Longest zero-sum-free sequence length, by exhaustive multiset search
/// (memoized on achievable-sum sets, first element canonical up to cheap
/// automorphisms). order_budget guards the search; the spec default is
/// 64, callers may raise it deliberately.
int longest_zero_sum_free(const PGroup& G, i64 order_budget = 64);

/// Exact Davenport constant D(G) = 1 + longest_zero_sum_free(G).
int davenport(const PGroup& G, i64 order_budget = 64);

/// D(G/H) for an explicitly listed subgroup H (given by coordinate
/// vectors; must contain 0 and be closed under addition). The same
/// search runs on the coset table, so no structure computation for the
/// quotient is needed.
int davenport_of_quotient(const PGroup& G, const std::vector<std::vector<i64>>& subgroup_elements,
                          i64 order_budget = 64);

/// Sequence of group elements; coordinates stored reduced mod n_i.
struct GSequence {
    PGroup group;
    std::vector<std::vector<i64>> terms;
    GSequence(PGroup g, std::vector<std::vector<i64>> t);
    int length() const { return int(terms.size()); }
};

/// N_A^B(g): weight vectors a in prod A_i with sum a_i g_i in B.
/// Weights are integers; the all-zero vector counts whenever 0 in B
/// (the set definition makes no exclusion).
BigInt count_weighted_sums(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets,
                           const std::vector<std::vector<i64>>& target_elements);

/// Same count with a per-coordinate product target B = prod B_j.
BigInt count_weighted_sums_product(const GSequence& g,
                                   const std::vector<std::vector<i64>>& weight_sets,
                                   const std::vector<std::vector<i64>>& coordinate_targets);

/// histogram[x] = #{a : sum a_i g_i = x}, x in mixed-radix element order.
/// One enumeration pass; feeds the N-count sweeps.
std::vector<BigInt> weighted_sum_histogram(const GSequence& g,
                                           const std::vector<std::vector<i64>>& weight_sets);

/// Subset sums Sigma(g) (weights {0,1}; the empty subset contributes 0),
/// as membership flags in mixed-radix element order.
std::vector<bool> subset_sums(const GSequence& g);

/// Fat Davenport constant D_A^B(G): least n such that every length-n
/// sequence over G has a nonzero A-weighted subsequence with sum in B.
/// Requires 0 in A, an element of A not divisible by exp G, and 0 in B.
/// The same weight set A is used at every index.
int fat_davenport(const PGroup& G, const std::vector<i64>& weight_set,
                  const std::vector<std::vector<i64>>& target_elements, i64 order_budget = 64);

struct FatBoundReport {
    VerificationReport report;  // through the warning-module linear reduction
    BigInt direct_count = 0;    // through direct weight enumeration
    BigInt theorem_bound = 0;   // m(#A_1..; sum #A_i - sum (p^{v_j} - #B_j))
    bool theorem_holds = false;
};

/// Weighted-subsequence bound over a p-group with per-coordinate targets
/// B_j: the count is computed twice (directly, and by reducing to the
/// Main Theorem with the linear forms of the incidence proof) and both
/// are reported together with the theorem's displayed bound.
FatBoundReport verify_fat_bound(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets,
                                const std::vector<std::vector<i64>>& coordinate_targets,
                                int workers = 1);

/// EGZ-type count: weight vectors with sum in prod B_j and support size
/// (number of nonzero integer weights) divisible by p^k, with the
/// matching m(...) bound. Requires 0 in every A_i.
VerificationReport egz_count(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets,
                             const std::vector<std::vector<i64>>& coordinate_targets, int k);

}  // namespace chainwarn
