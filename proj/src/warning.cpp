#include "chainwarn/warning.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace chainwarn {

namespace {

constexpr u128 kGridBudget = 100000000;  // ~1e8 grid points

std::vector<u64> reduce_coeffs(const RingElement& x, u64 p, int a) {
    u128 m = pow_u128(p, a, u128(1) << 64);
    std::vector<u64> c = x.coeffs();
    for (u64& ci : c) ci = u64(u128(ci) % m);
    return c;
}

/// Decode flat grid index into per-variable digits (first variable fastest).
void decode_point(u64 idx, const std::vector<SubsetSpec>& inputs, std::vector<RingElement>& point) {
    for (size_t i = 0; i < inputs.size(); ++i) {
        point[i] = inputs[i].elements[idx % inputs[i].size()];
        idx /= inputs[i].size();
    }
}

}  // namespace

RestrictedSystem::RestrictedSystem(RingPtr ring_, std::vector<SubsetSpec> inputs_,
                                   std::vector<MPoly> polys_, std::vector<int> exponents_,
                                   std::vector<SubsetSpec> outputs_)
    : ring(std::move(ring_)),
      inputs(std::move(inputs_)),
      polys(std::move(polys_)),
      exponents(std::move(exponents_)),
      outputs(std::move(outputs_)) {
    if (!ring) throw std::invalid_argument("system needs a ring");
    if (inputs.empty()) throw std::invalid_argument("system needs at least one input set");
    if (polys.empty()) throw std::invalid_argument("system needs at least one polynomial");
    if (polys.size() != exponents.size() || polys.size() != outputs.size())
        throw std::invalid_argument("polys, exponents and outputs must have equal length");
    for (const auto& A : inputs) {
        if (!A.elements.front().ring()->same_ring(*ring))
            throw std::invalid_argument("input set from a different ring");
        if (!check_condition(A, Condition::F))
            throw std::invalid_argument("input set fails Condition (F)");
    }
    for (const auto& B : outputs) {
        if (!B.elements.front().ring()->same_ring(*ring))
            throw std::invalid_argument("output set from a different ring");
        if (!check_condition(B, Condition::F))
            throw std::invalid_argument("output set fails Condition (F)");
    }
    for (const auto& f : polys) {
        if (!f.ring()->same_ring(*ring)) throw std::invalid_argument("polynomial from a different ring");
        if (f.nvars() != nvars()) throw std::invalid_argument("polynomial variable count mismatch");
    }
    for (int vj : exponents)
        if (vj < 1 || vj > ring->length())
            throw std::invalid_argument("modulus exponent out of [1, length]");
}

u128 RestrictedSystem::grid_size() const {
    u128 total = 1;
    for (const auto& A : inputs) total *= A.size();
    return total;
}

i64 c_budget(u64 qsize, int vj) {
    if (vj < 1) throw std::invalid_argument("vj must be >= 1");
    u128 sum = 0;
    u128 qpow = 1;
    for (int i = 1; i <= vj - 1; ++i) {
        qpow *= qsize;
        sum += qpow - 1;
        if (sum > (u128(1) << 40)) throw BudgetError("c(v) out of supported range", u128_str(sum));
    }
    return i64(sum);
}

/// Valuation of the canonical lift of x - y in a ring of length L: the
/// lifts are plain integer coefficient vectors, so this is the integer
/// p-adic valuation of the coefficient differences, saturated at L.
/// No length-L ring is materialized (its coefficient modulus p^L can
/// exceed word size).
static int lift_difference_valuation(const std::vector<u64>& x, const std::vector<u64>& y, u64 p,
                                     int saturation) {
    int best = saturation;
    for (size_t i = 0; i < x.size() && best > 0; ++i) {
        u64 d = x[i] >= y[i] ? x[i] - y[i] : y[i] - x[i];
        if (d == 0) continue;
        int ord = 0;
        while (ord < best && d % p == 0) {
            d /= p;
            ++ord;
        }
        best = std::min(best, ord);
    }
    return best;
}

AfkResult afk_valuation(const RingPtr& ring, const RingElement& x, int vj, const SubsetSpec& T) {
    if (vj < 1 || vj > ring->length())
        throw std::invalid_argument("vj out of [1, length]");
    if (!check_condition(T, Condition::F))
        throw std::invalid_argument("T fails Condition (F)");
    if (!x.ring()->same_ring(*ring)) throw std::invalid_argument("x from a different ring");

    const i64 c = c_budget(ring->residue_size(), vj);
    const i64 L64 = std::max<i64>(ring->length(), c + vj + 1);
    if (L64 > (1 << 20)) throw BudgetError("AFK valuation budget out of range", std::to_string(L64));
    const int L = int(L64);

    std::set<std::vector<u64>> tbar;
    for (const auto& t : T.elements) tbar.insert(reduce_coeffs(t, ring->p(), vj));

    bool flag = false;
    i64 val = 0;
    for (const auto& y : coset_representatives(ring, vj)) {
        int ord = lift_difference_valuation(x.coeffs(), y.coeffs(), ring->p(), L);
        if (tbar.count(y.coeffs())) {
            if (ord >= vj) flag = true;
            continue;
        }
        val += ord;
        if (val > L) val = L;
    }
    return AfkResult{int(std::min<i64>(val, L)), flag, L};
}

FatFactorization build_fat_target_polynomial(const RestrictedSystem& sys) {
    FatFactorization out;
    const u64 p = sys.ring->p();
    for (size_t j = 0; j < sys.polys.size(); ++j) {
        const int vj = sys.exponents[j];
        std::set<std::vector<u64>> bbar;
        for (const auto& b : sys.outputs[j].elements) bbar.insert(reduce_coeffs(b, p, vj));
        u64 excluded = 0;
        for (const auto& y : coset_representatives(sys.ring, vj)) {
            if (bbar.count(y.coeffs())) continue;
            out.factors.emplace_back(j, y);
            ++excluded;
        }
        auto deg = sys.polys[j].total_degree();
        out.formal_degree += BigInt(excluded) * BigInt(deg.value_or(0));
    }
    return out;
}

namespace {

/// Per-constraint membership tester: f_j(x) in B_j mod p^{v_j}, decided
/// by comparing canonical coefficients mod p^{v_j}.
struct MembershipTest {
    u128 digit_mod;
    std::set<std::vector<u64>> targets;
    bool contains(const RingElement& value) const {
        std::vector<u64> c = value.coeffs();
        for (u64& ci : c) ci = u64(u128(ci) % digit_mod);
        return targets.count(c) > 0;
    }
};

std::vector<MembershipTest> make_membership(const RestrictedSystem& sys) {
    std::vector<MembershipTest> tests;
    for (size_t j = 0; j < sys.polys.size(); ++j) {
        MembershipTest t;
        t.digit_mod = pow_u128(sys.ring->p(), sys.exponents[j], u128(1) << 64);
        for (const auto& b : sys.outputs[j].elements)
            t.targets.insert(reduce_coeffs(b, sys.ring->p(), sys.exponents[j]));
        tests.push_back(std::move(t));
    }
    return tests;
}

u64 checked_grid_total(const RestrictedSystem& sys) {
    u128 total = sys.grid_size();
    if (total > kGridBudget)
        throw BudgetError("solution-count enumeration budget exceeded", u128_str(total));
    return u64(total);
}

}  // namespace

BigInt count_restricted_solutions(const RestrictedSystem& sys, int workers) {
    const u64 total = checked_grid_total(sys);
    const auto tests = make_membership(sys);

    auto count_range = [&](u64 begin, u64 end) -> u64 {
        std::vector<RingElement> point(sys.inputs.size(), sys.ring->zero());
        u64 local = 0;
        for (u64 idx = begin; idx < end; ++idx) {
            decode_point(idx, sys.inputs, point);
            bool ok = true;
            for (size_t j = 0; j < sys.polys.size() && ok; ++j)
                ok = tests[j].contains(sys.polys[j].eval(point));
            if (ok) ++local;
        }
        return local;
    };

    if (workers <= 1 || total < 1024) return BigInt(count_range(0, total));

    const int w = std::min<u64>(workers, 64);
    std::vector<u64> partial(w, 0);
    std::vector<std::thread> threads;
    for (int k = 0; k < w; ++k) {
        u64 begin = total * k / w, end = total * (k + 1) / w;
        threads.emplace_back([&, k, begin, end] { partial[k] = count_range(begin, end); });
    }
    for (auto& t : threads) t.join();
    u64 sum = 0;
    for (u64 c : partial) sum += c;
    return BigInt(sum);
}

BigInt count_solutions_via_fat_polynomial(const RestrictedSystem& sys) {
    const u64 total = checked_grid_total(sys);

    i64 c = 0;
    for (int vj : sys.exponents) c += c_budget(sys.ring->residue_size(), vj);
    const int L = std::max<i64>(sys.ring->length(), c + 1);
    RingPtr big = (L == sys.ring->length()) ? sys.ring
                                            : make_chain_ring(sys.ring->p(), sys.ring->ell(), L);

    std::vector<MPoly> lifted;
    for (const auto& f : sys.polys) lifted.push_back(f.convert(big));
    // S(v_j) \ Bbar_j per constraint, in the long ring
    std::vector<std::vector<RingElement>> shifts(sys.polys.size());
    for (size_t j = 0; j < sys.polys.size(); ++j) {
        const int vj = sys.exponents[j];
        std::set<std::vector<u64>> bbar;
        for (const auto& b : sys.outputs[j].elements)
            bbar.insert(reduce_coeffs(b, sys.ring->p(), vj));
        for (const auto& y : coset_representatives(big, vj))
            if (!bbar.count(y.coeffs())) shifts[j].push_back(y);
    }

    std::vector<RingElement> point(sys.inputs.size(), big->zero());
    std::vector<RingElement> base_point(sys.inputs.size(), sys.ring->zero());
    u64 count = 0;
    for (u64 idx = 0; idx < total; ++idx) {
        decode_point(idx, sys.inputs, base_point);
        for (size_t i = 0; i < point.size(); ++i) point[i] = lift_element(big, base_point[i]);
        i64 val = 0;
        bool solution = true;
        for (size_t j = 0; j < lifted.size() && solution; ++j) {
            RingElement fx = lifted[j].eval(point);
            for (const auto& y : shifts[j]) {
                val += pi_valuation(fx - y);
                if (val > c) {  // rejection is decided; ord Q(x) already exceeds c
                    solution = false;
                    break;
                }
            }
        }
        if (solution) ++count;
    }
    return BigInt(count);
}

VerificationReport verify_main_theorem(const RestrictedSystem& sys, int workers) {
    VerificationReport rep;

    bool impossible_constant = false;
    const auto tests = make_membership(sys);
    i64 degree_cost = 0;
    for (size_t j = 0; j < sys.polys.size(); ++j) {
        auto deg = sys.polys[j].total_degree();
        if (!deg.has_value() || *deg == 0) {
            // constant constraint: in-target drops out, out-of-target
            // empties the solution set; either way no degree cost
            RingElement value = sys.polys[j].eval(
                std::vector<RingElement>(sys.inputs.size(), sys.ring->zero()));
            if (!tests[j].contains(value)) impossible_constant = true;
            continue;
        }
        u128 qv = 1;
        for (int i = 0; i < sys.exponents[j]; ++i) qv *= sys.ring->residue_size();
        degree_cost += i64(qv - sys.outputs[j].size()) * (*deg);
    }

    std::vector<i64> sizes;
    i64 size_sum = 0;
    for (const auto& A : sys.inputs) {
        sizes.push_back(i64(A.size()));
        size_sum += i64(A.size());
    }

    rep.count = impossible_constant ? BigInt(0) : count_restricted_solutions(sys, workers);
    rep.bound = m_bound_clamped(sizes, size_sum - degree_cost, &rep.vacuous);
    rep.holds = (rep.count == 0) || (rep.count >= rep.bound);
    return rep;
}

VerificationReport count_nonvanishing(const MPoly& f, const std::vector<SubsetSpec>& grid) {
    if (grid.empty()) throw std::invalid_argument("grid needs at least one set");
    for (const auto& A : grid) {
        if (!A.elements.front().ring()->same_ring(*f.ring()))
            throw std::invalid_argument("grid set from a different ring");
        if (!check_condition(A, Condition::D))
            throw std::invalid_argument("grid set fails Condition (D)");
    }
    if (int(grid.size()) != f.nvars())
        throw std::invalid_argument("grid dimension must match variable count");

    u128 total128 = 1;
    for (const auto& A : grid) total128 *= A.size();
    if (total128 > kGridBudget)
        throw BudgetError("nonvanishing enumeration budget exceeded", u128_str(total128));
    const u64 total = u64(total128);

    std::vector<i64> sizes;
    i64 size_sum = 0;
    for (const auto& A : grid) {
        sizes.push_back(i64(A.size()));
        size_sum += i64(A.size());
    }

    VerificationReport rep;
    auto deg = f.total_degree();
    if (!deg.has_value()) {  // the zero polynomial never evaluates nonzero
        rep.count = 0;
        rep.bound = 1;
        rep.holds = true;
        return rep;
    }

    u64 count = 0;
    std::vector<RingElement> point(grid.size(), f.ring()->zero());
    for (u64 idx = 0; idx < total; ++idx) {
        decode_point(idx, grid, point);
        if (!f.eval(point).is_zero()) ++count;
    }
    rep.count = count;
    rep.bound = m_bound_clamped(sizes, size_sum - *deg, &rep.vacuous);
    rep.holds = (rep.count == 0) || (rep.count >= rep.bound);
    return rep;
}

MPoly sharp_alon_furedi_instance(const std::vector<SubsetSpec>& grid, const std::vector<i64>& y) {
    if (grid.empty()) throw std::invalid_argument("grid needs at least one set");
    if (y.size() != grid.size()) throw std::invalid_argument("y length must match grid");
    const RingPtr ring = grid.front().elements.front().ring();
    for (size_t i = 0; i < grid.size(); ++i) {
        if (!check_condition(grid[i], Condition::D))
            throw std::invalid_argument("grid set fails Condition (D)");
        if (y[i] < 1 || y[i] > i64(grid[i].size()))
            throw std::invalid_argument("y_i out of [1, #A_i]");
    }
    const int n = int(grid.size());
    MPoly f = MPoly::constant(ring, n, ring->one());
    for (int i = 0; i < n; ++i) {
        std::vector<RingElement> sorted = grid[i].elements;
        std::sort(sorted.begin(), sorted.end());
        for (i64 k = 0; k < y[i]; ++k) {
            MPoly factor = MPoly::monomial(ring, n, ring->one(), i);
            factor.add_term(MPoly::ExpVec(n, 0), -sorted[size_t(k)]);
            f = f * factor;
        }
    }
    return f;
}

}  // namespace chainwarn
