#pragma once

#include <optional>
#include <vector>

#include "chainwarn/warning.hpp"

namespace chainwarn {

/// Interpolation with fat targets: a linearly independent basis f_1..f_n
/// in N variables, coefficient sets A_i, nodes x_j, exponents v_j and
/// node targets B_j. Linear independence over the ring is validated by
/// exhaustive nullspace search at construction (rank is unreliable over
/// a ring with zero divisors).
struct InterpolationProblem {
    RingPtr ring;
    std::vector<MPoly> basis;
    std::vector<SubsetSpec> coeff_sets;
    std::vector<std::vector<RingElement>> nodes;
    std::vector<int> exponents;
    std::vector<SubsetSpec> targets;

    InterpolationProblem(RingPtr ring_, std::vector<MPoly> basis_,
                         std::vector<SubsetSpec> coeff_sets_,
                         std::vector<std::vector<RingElement>> nodes_, std::vector<int> exponents_,
                         std::vector<SubsetSpec> targets_);
};

/// The evaluation forms L_j(c) = sum_i c_i f_i(x_j) as degree-<=1
/// polynomials in the coefficients, fed to verify_main_theorem.
VerificationReport interp_count(const InterpolationProblem& P, int workers = 1);

/// Independent route: plain enumeration of the coefficient boxes with
/// direct membership tests, no polynomial machinery.
BigInt interp_count_direct(const InterpolationProblem& P);

/// First nonzero coefficient vector (counter order) satisfying all node
/// constraints, or nullopt after exhausting the space. When the
/// existence inequality sum #A_i - sum (q^{v_j} - #B_j) > n holds (with
/// 0 in every set), failure to find one is a logic error, not a nullopt.
std::optional<std::vector<RingElement>> find_nonzero_interpolant(const InterpolationProblem& P);

struct TroiZannierResult {
    BigInt bound_numerator = 0;  // q(q-1) - sum #B_x + 1, over denominator q-1
    i64 bound_denominator = 1;
    int criterion_degree = 0;  // least n with (n+1)(q-1) > (q-1) + q(q-1) - sum #B_x
    int min_degree = 0;        // true minimal degree by exhaustive search
    std::vector<RingElement> witness;  // coefficients of t, t^2, ..., t^min_degree
};

/// Minimal-degree interpolation over a field F_q (chain ring of length
/// 1): find the least-degree nonzero f with f(0) = 0 and f(x) in B_x for
/// every nonzero x. Targets are listed in the canonical nonzero-element
/// order and must each contain 0. Degrees up to q are searched: t^q - t
/// always qualifies, and the proof criterion can require degree q.
TroiZannierResult troi_zannier(const RingPtr& field, const std::vector<SubsetSpec>& targets);

}  // namespace chainwarn
