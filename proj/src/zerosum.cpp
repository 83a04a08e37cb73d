#include "chainwarn/zerosum.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace chainwarn {

// --- PGroup ---

PGroup::PGroup(std::vector<i64> factors) {
    for (i64 f : factors) {
        if (f < 1) throw std::invalid_argument("invariant factors must be >= 1");
        if (f > 1) invariants.push_back(f);
    }
    std::sort(invariants.begin(), invariants.end());
    for (size_t i = 0; i + 1 < invariants.size(); ++i)
        if (invariants[i + 1] % invariants[i] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
}

i64 PGroup::order() const {
    i64 o = 1;
    for (i64 n : invariants) {
        if (o > (i64(1) << 40) / n) throw BudgetError("group order out of range", "overflow");
        o *= n;
    }
    return o;
}

i64 PGroup::exponent() const { return invariants.empty() ? 1 : invariants.back(); }

std::optional<u64> PGroup::p_group_prime() const {
    if (invariants.empty()) return std::nullopt;
    i64 n = invariants.back();
    for (u64 p = 2; p * p <= u64(n); ++p) {
        if (n % i64(p) == 0) {
            i64 m = n;
            while (m % i64(p) == 0) m /= i64(p);
            if (m != 1) return std::nullopt;
            for (i64 f : invariants) {
                while (f % i64(p) == 0) f /= i64(p);
                if (f != 1) return std::nullopt;
            }
            return p;
        }
    }
    // n itself is prime
    for (i64 f : invariants)
        if (f != n) return std::nullopt;
    return u64(n);
}

i64 little_d(const PGroup& G) {
    i64 d = 1;
    for (i64 n : G.invariants) d += n - 1;
    return d;
}

// --- dense element tables (mixed radix: first coordinate fastest) ---

namespace {

constexpr int kMaxOrder = 256;

struct GroupTable {
    i64 order = 1;
    std::vector<i64> radix;
    std::vector<int> add;  // order x order
    std::vector<int> neg;

    explicit GroupTable(const PGroup& G) : radix(G.invariants) {
        order = G.order();
        if (order > kMaxOrder) throw BudgetError("group too large for dense tables", std::to_string(order));
        add.resize(size_t(order) * order);
        neg.resize(order);
        for (i64 a = 0; a < order; ++a) {
            for (i64 b = 0; b < order; ++b) {
                i64 x = a, y = b, out = 0, place = 1;
                for (i64 n : radix) {
                    out += ((x % n + y % n) % n) * place;
                    x /= n;
                    y /= n;
                    place *= n;
                }
                add[size_t(a) * order + b] = int(out);
            }
        }
        for (i64 a = 0; a < order; ++a) {
            i64 x = a, out = 0, place = 1;
            for (i64 n : radix) {
                out += ((n - x % n) % n) * place;
                x /= n;
                place *= n;
            }
            neg[a] = int(out);
        }
    }

    int encode(const std::vector<i64>& coords) const {
        if (coords.size() != radix.size()) throw std::invalid_argument("coordinate length mismatch");
        i64 out = 0, place = 1;
        for (size_t i = 0; i < radix.size(); ++i) {
            i64 c = coords[i] % radix[i];
            if (c < 0) c += radix[i];
            out += c * place;
            place *= radix[i];
        }
        return int(out);
    }

    std::vector<i64> decode(int idx) const {
        std::vector<i64> coords(radix.size());
        i64 x = idx;
        for (size_t i = 0; i < radix.size(); ++i) {
            coords[i] = x % radix[i];
            x /= radix[i];
        }
        return coords;
    }

    int scalar(i64 a, int g) const {
        i64 x = g, out = 0, place = 1;
        for (i64 n : radix) {
            i64 c = (a % n) * (x % n) % n;
            if (c < 0) c += n;
            out += c * place;
            x /= n;
            place *= n;
        }
        return int(out);
    }
};

struct Mask {
    std::array<u64, 4> w{};
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= u64(1) << (i & 63); }
    int count() const {
        int c = 0;
        for (u64 x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool operator==(const Mask& o) const { return w == o.w; }
};

struct MaskKey {
    Mask m;
    int min_key;
    bool operator==(const MaskKey& o) const { return min_key == o.min_key && m == o.m; }
};

struct MaskKeyHash {
    size_t operator()(const MaskKey& k) const {
        u64 h = 0x9e3779b97f4a7c15ULL * u64(k.min_key + 1);
        for (u64 x : k.m.w) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
        }
        return size_t(h);
    }
};

/// Exhaustive longest-zero-sum-free search over multisets in
/// nondecreasing key order, memoized on (min key, achievable-sum set).
/// The first element ranges over representatives of the cheap
/// automorphism orbits and the second over stabilizer orbits; deeper
/// levels are unrestricted.
class ZeroSumFreeSearch {
public:
    ZeroSumFreeSearch(i64 order, std::vector<int> add, std::vector<int> neg,
                      std::vector<std::vector<int>> aut_perms)
        : order_(order), add_(std::move(add)), neg_(std::move(neg)), aut_(std::move(aut_perms)) {}

    int longest() {
        // level-1 orbits of the automorphism group on nonzero elements
        std::vector<std::vector<int>> orbits = orbits_of(aut_);
        int best = 0;
        for (const auto& orbit : orbits) {
            const int root = orbit.front();
            // allowed elements: this orbit and later ones (earlier orbits
            // would contradict the root being in the minimal orbit present)
            std::vector<char> allowed(static_cast<size_t>(order_), 0);
            bool seen_root_orbit = false;
            for (const auto& o : orbits) {
                if (o.front() == root) seen_root_orbit = true;
                if (seen_root_orbit)
                    for (int g : o) allowed[size_t(g)] = 1;
            }
            // per-root key order: stabilizer orbits on the allowed set
            std::vector<std::vector<int>> stab;
            for (const auto& perm : aut_)
                if (perm[size_t(root)] == root) stab.push_back(perm);
            key_to_elem_.clear();
            std::vector<int> level2_starts;
            for (const auto& o : orbits_of(stab, &allowed)) {
                level2_starts.push_back(int(key_to_elem_.size()));
                for (int g : o) key_to_elem_.push_back(g);
            }
            memo_.clear();

            Mask s;
            s.set(root);
            best = std::max(best, 1);
            for (int k : level2_starts) {
                const int g = key_to_elem_[size_t(k)];
                if (s.test(neg_[size_t(g)])) continue;
                Mask next = grow(s, g);
                best = std::max(best, 2 + extend(k, next));
            }
        }
        return best;
    }

private:
    std::vector<std::vector<int>> orbits_of(const std::vector<std::vector<int>>& perms,
                                            const std::vector<char>* allowed = nullptr) const {
        std::vector<int> owner(static_cast<size_t>(order_), -1);
        std::vector<std::vector<int>> orbits;
        for (i64 g = 1; g < order_; ++g) {
            if (owner[size_t(g)] >= 0) continue;
            if (allowed && !(*allowed)[size_t(g)]) continue;
            std::vector<int> orbit{int(g)};
            owner[size_t(g)] = int(orbits.size());
            for (size_t head = 0; head < orbit.size(); ++head)
                for (const auto& perm : perms) {
                    int img = perm[size_t(orbit[head])];
                    if (owner[size_t(img)] < 0) {
                        owner[size_t(img)] = int(orbits.size());
                        orbit.push_back(img);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            orbits.push_back(std::move(orbit));
        }
        return orbits;
    }

    Mask grow(const Mask& sums, int g) const {
        Mask next = sums;
        next.set(g);
        const int* row = &add_[size_t(g) * order_];
        for (int word = 0; word < 4; ++word) {
            u64 bits = sums.w[word];
            while (bits) {
                int s = word * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                next.set(row[s]);
            }
        }
        return next;
    }

    int extend(int min_key, const Mask& sums) {
        int capacity = int(order_) - 1 - sums.count();
        if (capacity <= 0) return 0;
        MaskKey key{sums, min_key};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        int best = 0;
        for (size_t k = size_t(min_key); k < key_to_elem_.size(); ++k) {
            int g = key_to_elem_[k];
            if (sums.test(neg_[size_t(g)])) continue;  // adding g would close a zero sum
            best = std::max(best, 1 + extend(int(k), grow(sums, g)));
            if (best == capacity) break;  // cannot do better than the capacity bound
        }
        if (memo_.size() < kMemoCap) memo_.emplace(key, best);
        return best;
    }

    static constexpr size_t kMemoCap = 1u << 23;
    i64 order_;
    std::vector<int> add_;
    std::vector<int> neg_;
    std::vector<std::vector<int>> aut_;
    std::vector<int> key_to_elem_;
    std::unordered_map<MaskKey, int, MaskKeyHash> memo_;
};

int longest_zero_sum_free_of_table(i64 order, std::vector<int> add, std::vector<int> neg,
                                   std::vector<std::vector<int>> aut_perms) {
    ZeroSumFreeSearch search(order, std::move(add), std::move(neg), std::move(aut_perms));
    return search.longest();
}

namespace {

/// The subgroup of Aut(G) generated by per-coordinate unit scalings and
/// swaps of equal invariant factors, enumerated as element permutations
/// (identity first). Falls back to the trivial group if closure blows up.
std::vector<std::vector<int>> cheap_automorphisms(const GroupTable& T) {
    const i64 order = T.order;
    std::vector<int> identity(static_cast<size_t>(order));
    for (i64 g = 0; g < order; ++g) identity[size_t(g)] = int(g);

    std::vector<std::vector<int>> gens;
    for (size_t i = 0; i < T.radix.size(); ++i) {
        for (i64 u = 2; u < T.radix[i]; ++u) {
            if (std::gcd(u, T.radix[i]) != 1) continue;
            std::vector<int> perm(static_cast<size_t>(order));
            for (i64 g = 0; g < order; ++g) {
                auto c = T.decode(int(g));
                c[i] = c[i] * u % T.radix[i];
                perm[size_t(g)] = T.encode(c);
            }
            gens.push_back(std::move(perm));
        }
        if (i + 1 < T.radix.size() && T.radix[i] == T.radix[i + 1]) {
            std::vector<int> perm(static_cast<size_t>(order));
            for (i64 g = 0; g < order; ++g) {
                auto c = T.decode(int(g));
                std::swap(c[i], c[i + 1]);
                perm[size_t(g)] = T.encode(c);
            }
            gens.push_back(std::move(perm));
        }
    }

    std::set<std::vector<int>> closure{identity};
    std::vector<std::vector<int>> frontier{identity};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                std::vector<int> fg(static_cast<size_t>(order));
                for (i64 x = 0; x < order; ++x) fg[size_t(x)] = g[size_t(f[size_t(x)])];
                if (closure.insert(fg).second) {
                    if (closure.size() > 4096) return {identity};
                    next.push_back(std::move(fg));
                }
            }
        frontier = std::move(next);
    }
    return std::vector<std::vector<int>>(closure.begin(), closure.end());
}

}  // namespace

int longest_zero_sum_free(const PGroup& G, i64 order_budget) {
    if (G.order() > order_budget)
        throw BudgetError("Davenport search budget exceeded", std::to_string(G.order()));
    if (G.order() == 1) return 0;
    GroupTable table(G);
    return longest_zero_sum_free_of_table(table.order, table.add, table.neg,
                                          cheap_automorphisms(table));
}

int davenport(const PGroup& G, i64 order_budget) {
    return 1 + longest_zero_sum_free(G, order_budget);
}

int davenport_of_quotient(const PGroup& G, const std::vector<std::vector<i64>>& subgroup_elements,
                          i64 order_budget) {
    if (G.order() > order_budget)
        throw BudgetError("quotient Davenport budget exceeded", std::to_string(G.order()));
    GroupTable table(G);
    std::vector<char> in_h(size_t(table.order), 0);
    for (const auto& h : subgroup_elements) in_h[size_t(table.encode(h))] = 1;
    if (!in_h[0]) throw std::invalid_argument("subgroup must contain 0");
    for (i64 a = 0; a < table.order; ++a)
        for (i64 b = 0; b < table.order; ++b)
            if (in_h[size_t(a)] && in_h[size_t(b)] && !in_h[size_t(table.add[size_t(a) * table.order + b])])
                throw std::invalid_argument("subgroup is not closed under addition");

    // coset representatives: smallest element of each coset
    std::vector<int> rep(size_t(table.order), -1);
    std::vector<int> reps;
    for (i64 x = 0; x < table.order; ++x) {
        if (rep[size_t(x)] >= 0) continue;
        int r = int(x);
        for (i64 h = 0; h < table.order; ++h)
            if (in_h[size_t(h)]) rep[size_t(table.add[size_t(x) * table.order + h])] = r;
        reps.push_back(r);
    }
    std::vector<int> index_of(size_t(table.order), -1);
    for (size_t i = 0; i < reps.size(); ++i) index_of[size_t(reps[i])] = int(i);
    const i64 m = i64(reps.size());
    std::vector<int> add_q(size_t(m) * m);
    std::vector<int> neg_q(static_cast<size_t>(m));
    for (i64 i = 0; i < m; ++i) {
        for (i64 j = 0; j < m; ++j)
            add_q[size_t(i) * m + j] =
                index_of[size_t(rep[size_t(table.add[size_t(reps[size_t(i)]) * table.order +
                                                     reps[size_t(j)]])])];
        neg_q[size_t(i)] = index_of[size_t(rep[size_t(table.neg[size_t(reps[size_t(i)])])])];
    }
    if (m == 1) return 1;
    std::vector<int> identity(static_cast<size_t>(m));
    for (i64 i = 0; i < m; ++i) identity[size_t(i)] = int(i);
    return 1 + longest_zero_sum_free_of_table(m, std::move(add_q), std::move(neg_q), {identity});
}

// --- sequences and weighted counts ---

GSequence::GSequence(PGroup g, std::vector<std::vector<i64>> t) : group(std::move(g)), terms(std::move(t)) {
    for (auto& term : terms) {
        if (int(term.size()) != group.rank())
            throw std::invalid_argument("sequence term has wrong coordinate count");
        for (size_t i = 0; i < term.size(); ++i) {
            i64 n = group.invariants[i];
            term[i] %= n;
            if (term[i] < 0) term[i] += n;
        }
    }
}

namespace {

constexpr u128 kWeightBudget = 100000000;

u64 checked_weight_total(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets) {
    if (weight_sets.size() != g.terms.size())
        throw std::invalid_argument("one weight set per sequence term required");
    u128 total = 1;
    for (const auto& A : weight_sets) {
        if (A.empty()) throw std::invalid_argument("weight sets must be nonempty");
        if (std::set<i64>(A.begin(), A.end()).size() != A.size())
            throw std::invalid_argument("duplicate weight");
        total *= A.size();
        if (total > kWeightBudget)
            throw BudgetError("weight enumeration budget exceeded", u128_str(total));
    }
    return u64(total);
}

}  // namespace

std::vector<BigInt> weighted_sum_histogram(const GSequence& g,
                                           const std::vector<std::vector<i64>>& weight_sets) {
    GroupTable table(g.group);
    checked_weight_total(g, weight_sets);
    // one convolution pass per term
    std::vector<BigInt> counts(size_t(table.order), BigInt(0));
    counts[0] = 1;
    for (size_t i = 0; i < g.terms.size(); ++i) {
        int gi = table.encode(g.terms[i]);
        std::vector<BigInt> next(size_t(table.order), BigInt(0));
        for (i64 a : weight_sets[i]) {
            int ag = table.scalar(a, gi);
            for (i64 x = 0; x < table.order; ++x) {
                if (counts[size_t(x)] == 0) continue;
                next[size_t(table.add[size_t(x) * table.order + ag])] += counts[size_t(x)];
            }
        }
        counts = std::move(next);
    }
    return counts;
}

BigInt count_weighted_sums(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets,
                           const std::vector<std::vector<i64>>& target_elements) {
    GroupTable table(g.group);
    const u64 total = checked_weight_total(g, weight_sets);
    std::vector<bool> in_b(size_t(table.order), false);
    for (const auto& b : target_elements) in_b[size_t(table.encode(b))] = true;

    // direct odometer enumeration over weight vectors
    std::vector<std::vector<int>> products(g.terms.size());
    for (size_t i = 0; i < g.terms.size(); ++i) {
        int gi = table.encode(g.terms[i]);
        for (i64 a : weight_sets[i]) products[i].push_back(table.scalar(a, gi));
    }
    u64 count = 0;
    for (u64 idx = 0; idx < total; ++idx) {
        u64 t = idx;
        int sum = 0;
        for (size_t i = 0; i < products.size(); ++i) {
            sum = table.add[size_t(sum) * table.order + products[i][t % products[i].size()]];
            t /= products[i].size();
        }
        if (in_b[size_t(sum)]) ++count;
    }
    return BigInt(count);
}

BigInt count_weighted_sums_product(const GSequence& g,
                                   const std::vector<std::vector<i64>>& weight_sets,
                                   const std::vector<std::vector<i64>>& coordinate_targets) {
    if (int(coordinate_targets.size()) != g.group.rank())
        throw std::invalid_argument("one coordinate target per invariant factor required");
    GroupTable table(g.group);
    std::vector<std::set<i64>> reduced(coordinate_targets.size());
    for (size_t j = 0; j < coordinate_targets.size(); ++j) {
        for (i64 b : coordinate_targets[j]) {
            i64 n = g.group.invariants[j];
            reduced[j].insert(((b % n) + n) % n);
        }
        if (reduced[j].empty()) throw std::invalid_argument("coordinate targets must be nonempty");
    }
    std::vector<std::vector<i64>> elems;
    for (i64 x = 0; x < table.order; ++x) {
        auto c = table.decode(int(x));
        bool ok = true;
        for (size_t j = 0; j < reduced.size() && ok; ++j) ok = reduced[j].count(c[j]) > 0;
        if (ok) elems.push_back(c);
    }
    return count_weighted_sums(g, weight_sets, elems);
}

std::vector<bool> subset_sums(const GSequence& g) {
    GroupTable table(g.group);
    std::vector<bool> reach(size_t(table.order), false);
    reach[0] = true;
    for (const auto& term : g.terms) {
        int gi = table.encode(term);
        std::vector<bool> next = reach;
        for (i64 x = 0; x < table.order; ++x)
            if (reach[size_t(x)]) next[size_t(table.add[size_t(x) * table.order + gi])] = true;
        reach = std::move(next);
    }
    return reach;
}

// --- fat Davenport constant ---

namespace {

class FatDavenportSearch {
public:
    FatDavenportSearch(const PGroup& G, const std::vector<i64>& weight_set,
                       const std::vector<std::vector<i64>>& targets)
        : table_(G), weights_(weight_set) {
        for (const auto& b : targets) in_b_.set(table_.encode(b));
    }

    /// Longest sequence with no nonzero weighted sum in B. Terminates
    /// because the sum set strictly grows along every bad extension
    /// (a stalled sum set would allow unbounded bad repetition, which
    /// the pigeonhole argument with 0 in A, 0 in B rules out).
    int longest_bad() {
        Mask empty;
        return extend(0, empty);
    }

private:
    int extend(int min_elem, const Mask& sums) {
        int capacity = int(table_.order) - 1 - sums.count();  // 0 stays outside while bad
        if (capacity <= 0) return 0;
        MaskKey key{sums, min_elem};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        int best = 0;
        for (i64 g = min_elem; g < table_.order; ++g) {
            Mask next = sums;
            bool good = false;
            for (i64 a : weights_) {
                int ag = table_.scalar(a, int(g));
                if (a != 0) {
                    if (in_b_.test(ag)) {
                        good = true;
                        break;
                    }
                    next.set(ag);
                }
                for (int word = 0; word < 4 && !good; ++word) {
                    u64 bits = sums.w[word];
                    while (bits) {
                        int s = word * 64 + __builtin_ctzll(bits);
                        bits &= bits - 1;
                        int t = table_.add[size_t(s) * table_.order + ag];
                        if (in_b_.test(t)) {
                            good = true;
                            break;
                        }
                        next.set(t);
                    }
                }
                if (good) break;
            }
            if (good) continue;  // appending g makes every extension good
            best = std::max(best, 1 + extend(int(g), next));
            if (best == capacity) break;
        }
        if (memo_.size() < kMemoCap) memo_.emplace(key, best);
        return best;
    }

    static constexpr size_t kMemoCap = 1u << 21;
    GroupTable table_;
    std::vector<i64> weights_;
    Mask in_b_;
    std::unordered_map<MaskKey, int, MaskKeyHash> memo_;
};

}  // namespace

int fat_davenport(const PGroup& G, const std::vector<i64>& weight_set,
                  const std::vector<std::vector<i64>>& target_elements, i64 order_budget) {
    if (G.order() > order_budget)
        throw BudgetError("fat Davenport search budget exceeded", std::to_string(G.order()));
    if (std::find(weight_set.begin(), weight_set.end(), 0) == weight_set.end())
        throw std::invalid_argument("weight set must contain 0");
    bool has_live_weight = false;
    for (i64 a : weight_set)
        if (a % G.exponent() != 0) has_live_weight = true;
    if (!has_live_weight)
        throw std::invalid_argument("weight set needs an element not divisible by exp G");
    GroupTable table(G);
    bool zero_in_b = false;
    for (const auto& b : target_elements)
        if (table.encode(b) == 0) zero_in_b = true;
    if (!zero_in_b) throw std::invalid_argument("target set must contain 0");

    FatDavenportSearch search(G, weight_set, target_elements);
    return 1 + search.longest_bad();
}

// --- p-group bound verifications via the warning module ---

namespace {

struct PGroupShape {
    u64 p;
    int vmax;
    std::vector<int> vj;  // per invariant factor
};

PGroupShape p_group_shape(const PGroup& G) {
    auto p = G.p_group_prime();
    if (!p) throw std::invalid_argument("operation requires a nontrivial p-group");
    PGroupShape shape{*p, 0, {}};
    for (i64 n : G.invariants) {
        int v = 0;
        while (n > 1) {
            n /= i64(*p);
            ++v;
        }
        shape.vj.push_back(v);
        shape.vmax = std::max(shape.vmax, v);
    }
    return shape;
}

RestrictedSystem fat_bound_system(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets,
                                  const std::vector<std::vector<i64>>& coordinate_targets,
                                  const PGroupShape& shape) {
    RingPtr ring = make_chain_ring(shape.p, 1, shape.vmax);
    std::vector<SubsetSpec> inputs;
    for (const auto& A : weight_sets) {
        std::vector<RingElement> elems;
        for (i64 a : A) elems.push_back(ring->from_int(a));
        inputs.emplace_back(std::move(elems));
    }
    const int n = int(g.terms.size());
    std::vector<MPoly> polys;
    std::vector<int> exps;
    std::vector<SubsetSpec> outputs;
    for (int j = 0; j < g.group.rank(); ++j) {
        MPoly f(ring, n);
        for (int i = 0; i < n; ++i) {
            MPoly::ExpVec e(n, 0);
            e[i] = 1;
            f.add_term(e, ring->from_int(g.terms[i][j]));
        }
        polys.push_back(std::move(f));
        exps.push_back(shape.vj[j]);
        std::vector<RingElement> targ;
        for (i64 b : coordinate_targets[j]) targ.push_back(ring->from_int(b));
        outputs.emplace_back(std::move(targ));
    }
    return RestrictedSystem(ring, std::move(inputs), std::move(polys), std::move(exps),
                            std::move(outputs));
}

}  // namespace

FatBoundReport verify_fat_bound(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets,
                                const std::vector<std::vector<i64>>& coordinate_targets,
                                int workers) {
    if (g.terms.empty()) throw std::invalid_argument("sequence must be nonempty");
    if (int(coordinate_targets.size()) != g.group.rank())
        throw std::invalid_argument("one coordinate target per invariant factor required");
    const auto shape = p_group_shape(g.group);

    FatBoundReport out;
    out.report = verify_main_theorem(fat_bound_system(g, weight_sets, coordinate_targets, shape),
                                     workers);
    out.direct_count = count_weighted_sums_product(g, weight_sets, coordinate_targets);

    std::vector<i64> sizes;
    i64 size_sum = 0, cost = 0;
    for (const auto& A : weight_sets) {
        sizes.push_back(i64(A.size()));
        size_sum += i64(A.size());
    }
    for (int j = 0; j < g.group.rank(); ++j) {
        std::set<i64> bj;
        for (i64 b : coordinate_targets[j]) {
            i64 n = g.group.invariants[j];
            bj.insert(((b % n) + n) % n);
        }
        cost += g.group.invariants[j] - i64(bj.size());
    }
    bool vac = false;
    out.theorem_bound = m_bound_clamped(sizes, size_sum - cost, &vac);
    out.theorem_holds = (out.direct_count == 0) || (out.direct_count >= out.theorem_bound);
    return out;
}

VerificationReport egz_count(const GSequence& g, const std::vector<std::vector<i64>>& weight_sets,
                             const std::vector<std::vector<i64>>& coordinate_targets, int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    const auto shape = p_group_shape(g.group);
    for (const auto& A : weight_sets)
        if (std::find(A.begin(), A.end(), 0) == A.end())
            throw std::invalid_argument("every weight set must contain 0");
    GroupTable table(g.group);
    const u64 total = checked_weight_total(g, weight_sets);

    std::vector<std::set<i64>> reduced(coordinate_targets.size());
    if (int(coordinate_targets.size()) != g.group.rank())
        throw std::invalid_argument("one coordinate target per invariant factor required");
    for (size_t j = 0; j < coordinate_targets.size(); ++j)
        for (i64 b : coordinate_targets[j]) {
            i64 n = g.group.invariants[j];
            reduced[j].insert(((b % n) + n) % n);
        }

    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= i64(shape.p);

    u64 count = 0;
    for (u64 idx = 0; idx < total; ++idx) {
        u64 t = idx;
        std::vector<i64> coords(g.group.rank(), 0);
        int support = 0;
        for (size_t i = 0; i < g.terms.size(); ++i) {
            i64 a = weight_sets[i][t % weight_sets[i].size()];
            t /= weight_sets[i].size();
            if (a != 0) ++support;
            for (int j = 0; j < g.group.rank(); ++j) {
                i64 n = g.group.invariants[j];
                coords[j] = ((coords[j] + a * g.terms[i][j]) % n + n) % n;
            }
        }
        if (support % pk != 0) continue;
        bool ok = true;
        for (int j = 0; j < g.group.rank() && ok; ++j) ok = reduced[size_t(j)].count(coords[j]) > 0;
        if (ok) ++count;
    }

    std::vector<i64> sizes;
    i64 size_sum = 0, cost = 0, a_max = 0;
    for (const auto& A : weight_sets) {
        sizes.push_back(i64(A.size()));
        size_sum += i64(A.size());
        a_max = std::max(a_max, i64(A.size()));
    }
    for (int j = 0; j < g.group.rank(); ++j)
        cost += g.group.invariants[j] - i64(reduced[size_t(j)].size());

    VerificationReport rep;
    rep.count = count;
    rep.bound = m_bound_clamped(sizes, size_sum - cost - (a_max - 1) * (pk - 1), &rep.vacuous);
    rep.holds = (rep.count == 0) || (rep.count >= rep.bound);
    return rep;
}

}  // namespace chainwarn
