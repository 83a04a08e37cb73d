#pragma once

#include <optional>
#include <vector>

#include "chainwarn/mpoly.hpp"
#include "chainwarn/util.hpp"
#include "chainwarn/zerosum.hpp"

namespace chainwarn {

/// A finite sequence of finite subsets of an abstract ground set
/// {0, ..., ground_size-1}; only cardinalities of unions matter.
struct Hypergraph {
    int ground_size = 0;
    std::vector<std::vector<int>> sets;
    Hypergraph(int ground, std::vector<std::vector<int>> s);
    int length() const { return int(sets.size()); }
    int max_degree() const;
};

/// N_F(m, B): subsets J (including the empty one) whose union size lies
/// in B mod m. Direct 2^n enumeration; n <= 25.
BigInt hypergraph_count(const Hypergraph& H, i64 m, const std::vector<i64>& B);

/// The inclusion-exclusion polynomial h with h(x) = #union of the sets
/// selected by a 0/1 vector x; degree <= max_degree. Built termwise per
/// ground element, so it stays sparse.
MPoly union_size_polynomial(const Hypergraph& H, const RingPtr& ring);

struct HypergraphReport {
    BigInt count = 0;        // direct enumeration
    BigInt cross_count = 0;  // via the restricted-solution reduction
    BigInt bound = 0;        // 2^(n - d (p^v - #B)), clamped to 1 below exponent 0
    bool holds = false;
};

/// Prime-power case m = p^v with B pairwise incongruent mod p: count,
/// the polynomial-reduction cross-count and the 2^(n-d(p^v-#B)) bound.
HypergraphReport hypergraph_count_checked(const Hypergraph& H, u64 p, int v,
                                          const std::vector<i64>& B);

/// The sharpness construction: d(m-b) sets A_ij union V_i with
/// #A_ij = m, #V_i = a, all disjoint, paired with the target
/// B = {0, -a, -2a, ..., -(b-1)a} mod m. No nonempty subfamily has
/// union size in B mod m.
struct SchmittInstance {
    Hypergraph hypergraph;
    std::vector<i64> targets;  // subset of Z/m
    i64 modulus = 0;
};
SchmittInstance schmitt_construction(i64 b, i64 d, i64 m, i64 a);

enum class LoopConvention { topologist, algebraist };

/// Multigraph on vertices 1..r; edges are unordered pairs, loops written
/// (u, u). Under the topologist convention a loop adds 2 to its vertex
/// degree, under the algebraist convention 1.
struct MultiGraph {
    int r = 0;
    std::vector<std::pair<int, int>> edges;
    LoopConvention loops = LoopConvention::topologist;
    MultiGraph(int r_, std::vector<std::pair<int, int>> edges_,
               LoopConvention loops_ = LoopConvention::topologist);
    int nedges() const { return int(edges.size()); }
    /// Incidence column of edge i as integer degree contributions per vertex.
    std::vector<i64> incidence_column(int i) const;
};

/// Per-vertex moduli 1 < q_1 | ... | q_r, a target degree vector g, and
/// optional weights/targets for the weighted theorems.
struct DivisibilitySpec {
    std::vector<i64> q_vector;
    std::vector<i64> g_target;                        // per vertex, mod q_j
    std::vector<std::vector<i64>> edge_weights;       // empty: plain subgraphs {0,1}
    std::vector<std::vector<i64>> vertex_targets;     // empty: {g_j} singletons
    DivisibilitySpec(std::vector<i64> q, std::vector<i64> g);
};

struct IncidenceReduction {
    GSequence sequence;                 // columns in G(q)
    bool parity_subgroup = false;       // every column lies in G'(q)
    std::optional<PGroup> reduced_group;        // G(q') when q_1 even, topologist
    std::optional<GSequence> reduced_sequence;  // columns mapped through G'(q) ~ G(q')
};

/// Incidence matrix columns as a sequence in G(q) = sum Z/q_j. With q_1
/// even under the topologist convention every column has even coordinate
/// sum, and the explicit isomorphism G'(q) ~ G(q') is returned alongside.
IncidenceReduction incidence_sequence(const MultiGraph& G, const std::vector<i64>& q_vector);

/// The isomorphism of the parity reduction, exposed for direct checks:
/// psi(c) = c_1 (2 e_1) + sum_{j>=2} c_j (e_j - e_1) from G(q') into G'(q),
/// and its inverse on the parity subgroup.
std::vector<i64> parity_iso(const std::vector<i64>& qprime_coords, const std::vector<i64>& q_vector);
std::vector<i64> parity_iso_inverse(const std::vector<i64>& q_coords, const std::vector<i64>& q_vector);

struct DivisibleCount {
    BigInt direct = 0;       // by edge-subset / weight enumeration
    BigInt via_zerosum = 0;  // by the incidence-sequence bijection
};

/// Number of subgraphs of type (q, g) (or of B-divisible A-weighted
/// subgraphs when the spec carries weights). Both the direct count and
/// the zero-sum count are computed; they must agree and both are
/// returned.
DivisibleCount count_divisible_subgraphs(const MultiGraph& G, const DivisibilitySpec& spec);

/// The closed form E(r, q) lower-bound value: (q-1)r + 1 for odd q,
/// (q-1)r - q/2 + 1 for even q. Defined for r >= 3.
i64 script_E(int r, i64 q);

/// The group G(r, q) whose Davenport constant bounds E(r, q).
PGroup graph_group(int r, i64 q);

/// Exhaustive search (up to vertex permutation) for a q-atomic multigraph
/// with n edges; returns the lexicographically least witness or nullopt
/// when none exists.
std::optional<MultiGraph> search_atomic_graph(int r, i64 q, int n,
                                              LoopConvention loops = LoopConvention::topologist);

}  // namespace chainwarn
