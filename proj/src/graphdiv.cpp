#include "chainwarn/graphdiv.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "chainwarn/warning.hpp"

namespace chainwarn {

// --- hypergraphs ---

Hypergraph::Hypergraph(int ground, std::vector<std::vector<int>> s)
    : ground_size(ground), sets(std::move(s)) {
    if (sets.empty()) throw std::invalid_argument("hypergraph needs at least one set");
    for (auto& f : sets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int x : f)
            if (x < 0 || x >= ground_size)
                throw std::invalid_argument("hypergraph member outside ground set");
    }
}

int Hypergraph::max_degree() const {
    std::vector<int> deg(size_t(ground_size), 0);
    for (const auto& f : sets)
        for (int x : f) ++deg[size_t(x)];
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

BigInt hypergraph_count(const Hypergraph& H, i64 m, const std::vector<i64>& B) {
    const int n = H.length();
    if (n > 25) throw BudgetError("hypergraph enumeration limited to 25 sets", std::to_string(n));
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    std::set<i64> reduced;
    for (i64 b : B) reduced.insert(((b % m) + m) % m);
    if (reduced.empty()) throw std::invalid_argument("target set must be nonempty");

    u64 count = 0;
    std::vector<char> member(size_t(H.ground_size));
    for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
        std::fill(member.begin(), member.end(), 0);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1)
                for (int x : H.sets[size_t(i)]) member[size_t(x)] = 1;
        i64 size = std::count(member.begin(), member.end(), char(1));
        if (reduced.count(size % m)) ++count;
    }
    return BigInt(count);
}

MPoly union_size_polynomial(const Hypergraph& H, const RingPtr& ring) {
    const int n = H.length();
    // per ground element x: 1 - prod_{i: x in F_i} (1 - t_i); summing over
    // x gives the inclusion-exclusion union-size polynomial
    MPoly h(ring, n);
    for (int x = 0; x < H.ground_size; ++x) {
        std::vector<int> incident;
        for (int i = 0; i < n; ++i)
            if (std::binary_search(H.sets[size_t(i)].begin(), H.sets[size_t(i)].end(), x))
                incident.push_back(i);
        MPoly prod = MPoly::constant(ring, n, ring->one());
        for (int i : incident) {
            MPoly factor = MPoly::constant(ring, n, ring->one());
            factor.add_term([&] {
                MPoly::ExpVec e(n, 0);
                e[size_t(i)] = 1;
                return e;
            }(), -ring->one());
            prod = prod * factor;
        }
        h = h + (MPoly::constant(ring, n, ring->one()) - prod);
    }
    return h;
}

HypergraphReport hypergraph_count_checked(const Hypergraph& H, u64 p, int v,
                                          const std::vector<i64>& B) {
    const int n = H.length();
    u128 pv = pow_u128(p, v, u128(1) << 40);
    HypergraphReport rep;
    rep.count = hypergraph_count(H, i64(pv), B);

    RingPtr ring = make_chain_ring(p, 1, v);
    std::vector<RingElement> targets;
    std::set<std::vector<u64>> seen;
    for (i64 b : B) {
        RingElement e = ring->from_int(b);
        if (seen.insert(e.coeffs()).second) targets.push_back(e);
    }
    SubsetSpec target_set(targets);
    if (!check_condition(target_set, Condition::F))
        throw std::invalid_argument("targets must be pairwise incongruent mod p");

    std::vector<SubsetSpec> inputs;
    for (int i = 0; i < n; ++i)
        inputs.emplace_back(std::vector<RingElement>{ring->zero(), ring->one()});
    RestrictedSystem sys(ring, std::move(inputs), {union_size_polynomial(H, ring)}, {v},
                         {target_set});
    rep.cross_count = count_restricted_solutions(sys);

    const i64 d = H.max_degree();
    i64 exponent = n - d * (i64(pv) - i64(target_set.size()));
    rep.bound = exponent >= 0 ? BigInt(1) << unsigned(exponent) : BigInt(1);
    rep.holds = (rep.count == 0) || (rep.count >= rep.bound);
    return rep;
}

SchmittInstance schmitt_construction(i64 b, i64 d, i64 m, i64 a) {
    if (b < 1 || d < 1 || a < 1) throw std::invalid_argument("b, d, a must be >= 1");
    if (m <= b) throw std::invalid_argument("m must exceed b");
    if (std::gcd(a, m) != 1) throw std::invalid_argument("a must be coprime to m");

    // pairwise disjoint A_ij of size m and V_i of size a; family {A_ij u V_i}
    int ground = 0;
    std::vector<std::vector<int>> v_blocks;
    for (i64 i = 0; i < m - b; ++i) {
        std::vector<int> vi;
        for (i64 k = 0; k < a; ++k) vi.push_back(ground++);
        v_blocks.push_back(std::move(vi));
    }
    std::vector<std::vector<int>> family;
    for (i64 i = 0; i < m - b; ++i) {
        for (i64 j = 0; j < d; ++j) {
            std::vector<int> f = v_blocks[size_t(i)];
            for (i64 k = 0; k < m; ++k) f.push_back(ground++);
            family.push_back(std::move(f));
        }
    }
    SchmittInstance out{Hypergraph(ground, std::move(family)), {}, m};
    for (i64 j = 0; j < b; ++j) out.targets.push_back(((m - j * a) % m + m) % m);
    return out;
}

// --- multigraphs ---

MultiGraph::MultiGraph(int r_, std::vector<std::pair<int, int>> edges_, LoopConvention loops_)
    : r(r_), edges(std::move(edges_)), loops(loops_) {
    if (r < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > r) throw std::invalid_argument("edge endpoint outside vertex range");
    }
}

std::vector<i64> MultiGraph::incidence_column(int i) const {
    std::vector<i64> col(size_t(r), 0);
    auto [u, v] = edges[size_t(i)];
    if (u == v)
        col[size_t(u - 1)] = (loops == LoopConvention::topologist) ? 2 : 1;
    else {
        col[size_t(u - 1)] = 1;
        col[size_t(v - 1)] = 1;
    }
    return col;
}

DivisibilitySpec::DivisibilitySpec(std::vector<i64> q, std::vector<i64> g)
    : q_vector(std::move(q)), g_target(std::move(g)) {
    if (q_vector.empty()) throw std::invalid_argument("q vector must be nonempty");
    if (q_vector.front() <= 1) throw std::invalid_argument("q_1 must exceed 1");
    for (size_t j = 0; j + 1 < q_vector.size(); ++j)
        if (q_vector[j + 1] % q_vector[j] != 0)
            throw std::invalid_argument("q vector must form a divisibility chain");
    if (g_target.size() != q_vector.size())
        throw std::invalid_argument("target vector length must match q vector");
    for (size_t j = 0; j < g_target.size(); ++j)
        g_target[j] = ((g_target[j] % q_vector[j]) + q_vector[j]) % q_vector[j];
}

std::vector<i64> parity_iso(const std::vector<i64>& c, const std::vector<i64>& q_vector) {
    if (c.size() != q_vector.size()) throw std::invalid_argument("coordinate length mismatch");
    if (q_vector.empty() || q_vector[0] % 2 != 0)
        throw std::invalid_argument("parity reduction needs even q_1");
    const size_t r = q_vector.size();
    std::vector<i64> x(r, 0);
    // psi(c) = c_1 (2 e_1) + sum_{j >= 2} c_j (e_j - e_1)
    i64 first = 2 * c[0];
    for (size_t j = 1; j < r; ++j) {
        first -= c[j];
        x[j] = ((c[j] % q_vector[j]) + q_vector[j]) % q_vector[j];
    }
    x[0] = ((first % q_vector[0]) + q_vector[0]) % q_vector[0];
    return x;
}

std::vector<i64> parity_iso_inverse(const std::vector<i64>& x, const std::vector<i64>& q_vector) {
    if (x.size() != q_vector.size()) throw std::invalid_argument("coordinate length mismatch");
    if (q_vector.empty() || q_vector[0] % 2 != 0)
        throw std::invalid_argument("parity reduction needs even q_1");
    const size_t r = q_vector.size();
    i64 s = 0;
    for (i64 xi : x) s += xi;
    if (s % 2 != 0) throw std::invalid_argument("element outside the parity subgroup");
    std::vector<i64> c(r, 0);
    i64 half = q_vector[0] / 2;
    i64 first = x[0];
    for (size_t j = 1; j < r; ++j) {
        first += x[j];
        c[j] = x[j];
    }
    c[0] = ((first / 2) % half + half) % half;
    return c;
}

IncidenceReduction incidence_sequence(const MultiGraph& G, const std::vector<i64>& q_vector) {
    if (int(q_vector.size()) != G.r)
        throw std::invalid_argument("q vector length must equal vertex count");
    PGroup group(q_vector);
    if (group.rank() != int(q_vector.size()))
        throw std::invalid_argument("q vector entries must exceed 1");

    std::vector<std::vector<i64>> columns;
    for (int i = 0; i < G.nedges(); ++i) columns.push_back(G.incidence_column(i));
    GSequence seq(group, columns);

    IncidenceReduction out{std::move(seq), false, std::nullopt, std::nullopt};
    if (q_vector[0] % 2 == 0) {
        bool all_even = true;
        for (const auto& col : out.sequence.terms) {
            i64 s = 0;
            for (i64 xi : col) s += xi;
            if (s % 2 != 0) all_even = false;
        }
        out.parity_subgroup = all_even;
        if (all_even) {
            std::vector<i64> qprime = q_vector;
            qprime[0] /= 2;
            PGroup reduced(qprime);
            std::vector<std::vector<i64>> mapped;
            for (const auto& col : out.sequence.terms) {
                std::vector<i64> c = parity_iso_inverse(col, q_vector);
                std::vector<i64> kept;  // drop coordinates of trivial factors
                for (size_t j = 0; j < c.size(); ++j)
                    if (qprime[j] > 1) kept.push_back(c[j]);
                mapped.push_back(std::move(kept));
            }
            out.reduced_sequence = GSequence(reduced, std::move(mapped));
            out.reduced_group = std::move(reduced);
        }
    }
    return out;
}

DivisibleCount count_divisible_subgraphs(const MultiGraph& G, const DivisibilitySpec& spec) {
    if (int(spec.q_vector.size()) != G.r)
        throw std::invalid_argument("spec dimension must equal vertex count");
    const int n = G.nedges();

    std::vector<std::vector<i64>> weights = spec.edge_weights;
    if (weights.empty()) weights.assign(size_t(n), {0, 1});
    if (int(weights.size()) != n)
        throw std::invalid_argument("one weight set per edge required");

    std::vector<std::vector<i64>> targets = spec.vertex_targets;
    if (targets.empty()) {
        for (size_t j = 0; j < spec.q_vector.size(); ++j) targets.push_back({spec.g_target[j]});
    }
    if (targets.size() != spec.q_vector.size())
        throw std::invalid_argument("one target set per vertex required");

    u128 total128 = 1;
    for (const auto& A : weights) {
        if (A.empty()) throw std::invalid_argument("weight sets must be nonempty");
        total128 *= A.size();
        if (total128 > 100000000)
            throw BudgetError("weighted subgraph enumeration budget exceeded", u128_str(total128));
    }
    const u64 total = u64(total128);

    // direct: enumerate weightings, check weighted degrees per vertex
    std::vector<std::set<i64>> reduced(targets.size());
    for (size_t j = 0; j < targets.size(); ++j)
        for (i64 b : targets[j]) {
            i64 q = spec.q_vector[j];
            reduced[j].insert(((b % q) + q) % q);
        }
    std::vector<std::vector<i64>> columns;
    for (int i = 0; i < n; ++i) columns.push_back(G.incidence_column(i));

    u64 direct = 0;
    std::vector<i64> deg(size_t(G.r));
    for (u64 idx = 0; idx < total; ++idx) {
        std::fill(deg.begin(), deg.end(), 0);
        u64 t = idx;
        for (int i = 0; i < n; ++i) {
            i64 a = weights[size_t(i)][t % weights[size_t(i)].size()];
            t /= weights[size_t(i)].size();
            if (a != 0)
                for (int j = 0; j < G.r; ++j) deg[size_t(j)] += a * columns[size_t(i)][size_t(j)];
        }
        bool ok = true;
        for (int j = 0; j < G.r && ok; ++j) {
            i64 q = spec.q_vector[size_t(j)];
            ok = reduced[size_t(j)].count(((deg[size_t(j)] % q) + q) % q) > 0;
        }
        if (ok) ++direct;
    }

    // zero-sum route: the incidence columns as a sequence in G(q)
    IncidenceReduction red = incidence_sequence(G, spec.q_vector);
    DivisibleCount out;
    out.direct = direct;
    out.via_zerosum = count_weighted_sums_product(red.sequence, weights, targets);
    if (out.direct != out.via_zerosum)
        throw std::logic_error("subgraph count and zero-sum count disagree");
    return out;
}

i64 script_E(int r, i64 q) {
    if (r < 3) throw std::invalid_argument("script E is defined for r >= 3");
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (q % 2 == 1) return (q - 1) * r + 1;
    return (q - 1) * r - q / 2 + 1;
}

PGroup graph_group(int r, i64 q) {
    if (r < 3) throw std::invalid_argument("graph group is defined for r >= 3");
    std::vector<i64> factors;
    if (q % 2 == 1) {
        factors.assign(size_t(r), q);
    } else {
        factors.assign(size_t(r - 1), q);
        factors.push_back(q / 2);
    }
    return PGroup(factors);
}

namespace {

bool is_divisible_subgraph_possible(const std::vector<std::vector<i64>>& columns, int r, i64 q,
                                    u64 mask) {
    std::vector<i64> deg(size_t(r), 0);
    for (size_t i = 0; i < columns.size(); ++i)
        if ((mask >> i) & 1)
            for (int j = 0; j < r; ++j) deg[size_t(j)] += columns[i][size_t(j)];
    for (i64 d : deg)
        if (d % q != 0) return false;
    return true;
}

bool is_atomic(const MultiGraph& G, i64 q) {
    const int n = G.nedges();
    std::vector<std::vector<i64>> columns;
    for (int i = 0; i < n; ++i) columns.push_back(G.incidence_column(i));
    for (u64 mask = 1; mask < (u64(1) << n); ++mask)
        if (is_divisible_subgraph_possible(columns, G.r, q, mask)) return false;
    return true;
}

}  // namespace

std::optional<MultiGraph> search_atomic_graph(int r, i64 q, int n, LoopConvention loops) {
    if (r < 1 || q < 2 || n < 1) throw std::invalid_argument("need r >= 1, q >= 2, n >= 1");
    if (n > 20) throw BudgetError("atomic search limited to 20 edges", std::to_string(n));

    // edge types: loops (u,u) and pairs (u,v), u <= v
    std::vector<std::pair<int, int>> types;
    for (int u = 1; u <= r; ++u)
        for (int v = u; v <= r; ++v) types.emplace_back(u, v);
    const int ntypes = int(types.size());

    // multiplicity caps: q parallel edges always form a q-divisible
    // subgraph, and k parallel loops are divisible once q | 2k (topologist)
    // or q | k (algebraist)
    auto cap_for = [&](int u, int v) -> i64 {
        if (u != v) return q - 1;
        if (loops == LoopConvention::algebraist) return q - 1;
        return q / std::gcd<i64>(2, q) - 1;
    };

    // vertex-permutation canonicalization: keep only multiplicity vectors
    // that are lexicographically least in their orbit
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto type_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        // (u, v) with 1 <= u <= v <= r
        int idx = 0;
        for (int a = 1; a < u; ++a) idx += r - a + 1;
        return idx + (v - u);
    };

    std::vector<i64> mult(static_cast<size_t>(ntypes), 0);
    std::optional<MultiGraph> found;

    auto emit_candidate = [&]() -> bool {
        // canonical check
        std::vector<i64> image(static_cast<size_t>(ntypes));
        for (const auto& pm : perms) {
            for (int t = 0; t < ntypes; ++t) {
                auto [u, v] = types[size_t(t)];
                image[size_t(type_index(pm[size_t(u - 1)], pm[size_t(v - 1)]))] = mult[size_t(t)];
            }
            if (image < mult) return false;  // not canonical: a smaller orbit member exists
        }
        std::vector<std::pair<int, int>> edges;
        for (int t = 0; t < ntypes; ++t)
            for (i64 k = 0; k < mult[size_t(t)]; ++k) edges.push_back(types[size_t(t)]);
        MultiGraph g(r, std::move(edges), loops);
        if (is_atomic(g, q)) {
            found = std::move(g);
            return true;
        }
        return false;
    };

    // enumerate multiplicity vectors with sum n in lexicographic order,
    // so the first atomic hit is the least witness
    auto rec = [&](auto&& self, int t, i64 remaining) -> bool {
        if (t == ntypes) return remaining == 0 ? emit_candidate() : false;
        i64 cap = std::min<i64>(cap_for(types[size_t(t)].first, types[size_t(t)].second), remaining);
        for (i64 k = 0; k <= cap; ++k) {
            mult[size_t(t)] = k;
            if (self(self, t + 1, remaining - k)) return true;
        }
        mult[size_t(t)] = 0;
        return false;
    };
    rec(rec, 0, n);
    return found;
}

}  // namespace chainwarn
