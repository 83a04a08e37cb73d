#include "chainwarn/interp.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainwarn {

namespace {

constexpr u128 kSpaceBudget = 100000000;

/// Exhaustive R-linear independence: no nonzero (c_1..c_n) in ring^n has
/// sum c_i f_i identically zero.
void require_independent(const RingPtr& ring, const std::vector<MPoly>& basis) {
    u128 space = 1;
    for (size_t i = 0; i < basis.size(); ++i) {
        space *= ring->cardinality();
        if (space > (u128(1) << 24))
            throw BudgetError("independence check space too large", u128_str(space));
    }
    const u64 card = u64(ring->cardinality());
    const int n = int(basis.size());
    std::vector<u64> digits(size_t(n), 0);
    for (u128 idx = 1; idx < space; ++idx) {
        u128 t = idx;
        for (int i = 0; i < n; ++i) {
            digits[size_t(i)] = u64(t % card);
            t /= card;
        }
        MPoly combo(ring, basis.front().nvars());
        for (int i = 0; i < n; ++i) {
            if (digits[size_t(i)] == 0) continue;
            RingElement c = ring->element_at(digits[size_t(i)]);
            for (const auto& [e, coeff] : basis[size_t(i)].terms()) combo.add_term(e, c * coeff);
        }
        if (combo.is_zero())
            throw std::invalid_argument("basis is linearly dependent over the ring");
    }
}

}  // namespace

InterpolationProblem::InterpolationProblem(RingPtr ring_, std::vector<MPoly> basis_,
                                           std::vector<SubsetSpec> coeff_sets_,
                                           std::vector<std::vector<RingElement>> nodes_,
                                           std::vector<int> exponents_,
                                           std::vector<SubsetSpec> targets_)
    : ring(std::move(ring_)),
      basis(std::move(basis_)),
      coeff_sets(std::move(coeff_sets_)),
      nodes(std::move(nodes_)),
      exponents(std::move(exponents_)),
      targets(std::move(targets_)) {
    if (basis.empty()) throw std::invalid_argument("basis must be nonempty");
    if (coeff_sets.size() != basis.size())
        throw std::invalid_argument("one coefficient set per basis polynomial required");
    if (nodes.empty()) throw std::invalid_argument("at least one node required");
    if (nodes.size() != exponents.size() || nodes.size() != targets.size())
        throw std::invalid_argument("nodes, exponents, targets must have equal length");
    const int nv = basis.front().nvars();
    for (const auto& f : basis) {
        if (!f.ring()->same_ring(*ring)) throw std::invalid_argument("basis from a different ring");
        if (f.nvars() != nv) throw std::invalid_argument("basis variable counts disagree");
    }
    for (const auto& A : coeff_sets)
        if (!check_condition(A, Condition::F))
            throw std::invalid_argument("coefficient set fails Condition (F)");
    for (const auto& B : targets)
        if (!check_condition(B, Condition::F))
            throw std::invalid_argument("target set fails Condition (F)");
    for (const auto& x : nodes)
        if (int(x.size()) != nv) throw std::invalid_argument("node dimension mismatch");
    for (int vj : exponents)
        if (vj < 1 || vj > ring->length())
            throw std::invalid_argument("exponent out of [1, length]");
    require_independent(ring, basis);
}

namespace {

/// L_j(c) = sum_i f_i(x_j) c_i as an MPoly in the n coefficients.
std::vector<MPoly> evaluation_forms(const InterpolationProblem& P) {
    const int n = int(P.basis.size());
    std::vector<MPoly> forms;
    for (size_t j = 0; j < P.nodes.size(); ++j) {
        MPoly L(P.ring, n);
        for (int i = 0; i < n; ++i) {
            MPoly::ExpVec e(size_t(n), 0);
            e[size_t(i)] = 1;
            L.add_term(e, P.basis[size_t(i)].eval(P.nodes[j]));
        }
        forms.push_back(std::move(L));
    }
    return forms;
}

RestrictedSystem to_system(const InterpolationProblem& P) {
    return RestrictedSystem(P.ring, P.coeff_sets, evaluation_forms(P), P.exponents, P.targets);
}

}  // namespace

VerificationReport interp_count(const InterpolationProblem& P, int workers) {
    return verify_main_theorem(to_system(P), workers);
}

BigInt interp_count_direct(const InterpolationProblem& P) {
    u128 total128 = 1;
    for (const auto& A : P.coeff_sets) {
        total128 *= A.size();
        if (total128 > kSpaceBudget)
            throw BudgetError("coefficient enumeration budget exceeded", u128_str(total128));
    }
    const u64 total = u64(total128);
    const u64 p = P.ring->p();

    // per-node basis values and reduced target coefficient sets
    std::vector<std::vector<RingElement>> values;  // [node][basis]
    for (const auto& x : P.nodes) {
        std::vector<RingElement> row;
        for (const auto& f : P.basis) row.push_back(f.eval(x));
        values.push_back(std::move(row));
    }
    std::vector<std::set<std::vector<u64>>> reduced(P.targets.size());
    std::vector<u128> moduli(P.targets.size());
    for (size_t j = 0; j < P.targets.size(); ++j) {
        moduli[j] = pow_u128(p, P.exponents[j], u128(1) << 64);
        for (const auto& b : P.targets[j].elements) {
            std::vector<u64> c = b.coeffs();
            for (u64& ci : c) ci = u64(u128(ci) % moduli[j]);
            reduced[j].insert(std::move(c));
        }
    }

    u64 count = 0;
    std::vector<size_t> digit(P.coeff_sets.size(), 0);
    for (u64 idx = 0; idx < total; ++idx) {
        u64 t = idx;
        for (size_t i = 0; i < P.coeff_sets.size(); ++i) {
            digit[i] = size_t(t % P.coeff_sets[i].size());
            t /= P.coeff_sets[i].size();
        }
        bool ok = true;
        for (size_t j = 0; j < P.nodes.size() && ok; ++j) {
            RingElement sum = P.ring->zero();
            for (size_t i = 0; i < P.coeff_sets.size(); ++i)
                sum = sum + P.coeff_sets[i].elements[digit[i]] * values[j][i];
            std::vector<u64> c = sum.coeffs();
            for (u64& ci : c) ci = u64(u128(ci) % moduli[j]);
            ok = reduced[j].count(c) > 0;
        }
        if (ok) ++count;
    }
    return BigInt(count);
}

std::optional<std::vector<RingElement>> find_nonzero_interpolant(const InterpolationProblem& P) {
    for (const auto& A : P.coeff_sets) {
        bool zero = false;
        for (const auto& e : A.elements) zero = zero || e.is_zero();
        if (!zero) throw std::invalid_argument("every coefficient set must contain 0");
    }
    for (const auto& B : P.targets) {
        bool zero = false;
        for (const auto& e : B.elements) zero = zero || e.is_zero();
        if (!zero) throw std::invalid_argument("every target set must contain 0");
    }

    // theorem guarantee: when the inequality holds a nonzero solution exists
    i64 sum_a = 0, cost = 0;
    for (const auto& A : P.coeff_sets) sum_a += i64(A.size());
    for (size_t j = 0; j < P.targets.size(); ++j) {
        u128 qv = 1;
        for (int i = 0; i < P.exponents[j]; ++i) qv *= P.ring->residue_size();
        cost += i64(qv) - i64(P.targets[j].size());
    }
    const bool guaranteed = sum_a - cost > i64(P.coeff_sets.size());

    u128 total128 = 1;
    for (const auto& A : P.coeff_sets) {
        total128 *= A.size();
        if (total128 > kSpaceBudget)
            throw BudgetError("interpolant search budget exceeded", u128_str(total128));
    }
    const u64 total = u64(total128);

    std::vector<std::vector<RingElement>> values;
    for (const auto& x : P.nodes) {
        std::vector<RingElement> row;
        for (const auto& f : P.basis) row.push_back(f.eval(x));
        values.push_back(std::move(row));
    }
    const u64 p = P.ring->p();
    for (u64 idx = 0; idx < total; ++idx) {
        u64 t = idx;
        std::vector<RingElement> c;
        bool all_zero = true;
        for (size_t i = 0; i < P.coeff_sets.size(); ++i) {
            const RingElement& ci = P.coeff_sets[i].elements[size_t(t % P.coeff_sets[i].size())];
            t /= P.coeff_sets[i].size();
            all_zero = all_zero && ci.is_zero();
            c.push_back(ci);
        }
        if (all_zero) continue;
        bool ok = true;
        for (size_t j = 0; j < P.nodes.size() && ok; ++j) {
            RingElement sum = P.ring->zero();
            for (size_t i = 0; i < c.size(); ++i) sum = sum + c[i] * values[j][i];
            ok = false;
            for (const auto& b : P.targets[j].elements) {
                RingElement diff = sum - b;
                std::vector<u64> dc = diff.coeffs();
                u128 m = pow_u128(p, P.exponents[j], u128(1) << 64);
                bool div = true;
                for (u64 ci : dc) div = div && (u128(ci) % m == 0);
                if (div) {
                    ok = true;
                    break;
                }
            }
        }
        if (ok) return c;
    }
    if (guaranteed)
        throw std::logic_error("existence inequality holds but no nonzero interpolant found");
    return std::nullopt;
}

TroiZannierResult troi_zannier(const RingPtr& field, const std::vector<SubsetSpec>& targets) {
    if (field->length() != 1) throw std::invalid_argument("Troi-Zannier runs over a field");
    const u64 q = field->residue_size();
    if (q > 9) throw BudgetError("Troi-Zannier search limited to q <= 9", std::to_string(q));
    std::vector<RingElement> elems = all_elements(field);  // zero first, counter order
    if (targets.size() != size_t(q - 1))
        throw std::invalid_argument("one target set per nonzero field element required");
    for (const auto& B : targets) {
        bool zero = false;
        for (const auto& e : B.elements) zero = zero || e.is_zero();
        if (!zero) throw std::invalid_argument("every target must contain 0");
    }

    TroiZannierResult out;
    i64 sum_b = 0;
    for (const auto& B : targets) sum_b += i64(B.size());
    out.bound_numerator = BigInt(i64(q)) * (i64(q) - 1) - sum_b + 1;
    out.bound_denominator = i64(q) - 1;
    // least n with (n+1)(q-1) > (q-1) + q(q-1) - sum #B_x
    i64 rhs = (i64(q) - 1) + i64(q) * (i64(q) - 1) - sum_b;
    int n = 1;
    while ((i64(n) + 1) * (i64(q) - 1) <= rhs) ++n;
    out.criterion_degree = n;

    // exhaustive minimal degree; t^q - t always qualifies, so the search
    // terminates by degree q
    for (int deg = 1; deg <= int(q); ++deg) {
        u64 space = 1;
        for (int i = 0; i < deg; ++i) space *= q;
        std::optional<std::vector<RingElement>> witness;
        for (u64 idx = 0; idx < space && !witness; ++idx) {
            u64 t = idx;
            std::vector<RingElement> coeff;  // of t^1 .. t^deg
            for (int i = 0; i < deg; ++i) {
                coeff.push_back(elems[size_t(t % q)]);
                t /= q;
            }
            if (coeff.back().is_zero()) continue;  // degree must be exactly deg
            bool ok = true;
            for (u64 xi = 1; xi < q && ok; ++xi) {
                const RingElement& x = elems[size_t(xi)];
                RingElement value = field->zero();
                RingElement power = field->one();
                for (int i = 0; i < deg; ++i) {
                    power = power * x;
                    value = value + coeff[size_t(i)] * power;
                }
                ok = false;
                for (const auto& b : targets[size_t(xi - 1)].elements)
                    if (value == b) {
                        ok = true;
                        break;
                    }
            }
            if (ok) witness = coeff;
        }
        if (witness) {
            out.min_degree = deg;
            out.witness = *witness;
            return out;
        }
    }
    throw std::logic_error("no interpolant up to degree q; t^q - t should always qualify");
}

}  // namespace chainwarn
