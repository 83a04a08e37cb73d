#include "chainwarn/driver.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "chainwarn/graphdiv.hpp"
#include "chainwarn/interp.hpp"
#include "chainwarn/mbound.hpp"
#include "chainwarn/parse.hpp"
#include "chainwarn/sweeps.hpp"
#include "chainwarn/warning.hpp"
#include "chainwarn/zerosum.hpp"

namespace chainwarn {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& b) {
    static const BigInt lo = std::numeric_limits<i64>::min();
    static const BigInt hi = std::numeric_limits<i64>::max();
    if (b >= lo && b <= hi) return i64(b);
    return b.str();
}

json report_to_json(const VerificationReport& r) {
    return json{{"count", big_to_json(r.count)},
                {"bound", big_to_json(r.bound)},
                {"vacuous", r.vacuous},
                {"holds", r.holds}};
}

RingPtr ring_from(const json& c) {
    return make_chain_ring(c.at("p").get<u64>(), c.value("ell", 1), c.value("v", 1));
}

RingElement element_from_json(const RingPtr& ring, const json& j) {
    if (j.is_number_integer()) return ring->from_int(j.get<i64>());
    if (j.is_string()) return parse_element(ring, j.get<std::string>());
    if (j.is_array()) return ring->element(j.get<std::vector<i64>>());
    throw std::invalid_argument("element literal must be an integer, string or array");
}

std::vector<SubsetSpec> subset_list_from_json(const RingPtr& ring, const json& j) {
    std::vector<SubsetSpec> out;
    for (const auto& set : j) {
        std::vector<RingElement> elems;
        for (const auto& e : set) elems.push_back(element_from_json(ring, e));
        out.emplace_back(std::move(elems));
    }
    return out;
}

std::vector<std::vector<i64>> int_sets_from_json(const json& j) {
    return j.get<std::vector<std::vector<i64>>>();
}

std::optional<std::pair<u64, int>> prime_power(i64 m) {
    if (m < 2) return std::nullopt;
    for (u64 p = 2; i64(p * p) <= m; ++p) {
        if (m % i64(p) == 0) {
            int v = 0;
            i64 t = m;
            while (t % i64(p) == 0) {
                t /= i64(p);
                ++v;
            }
            if (t == 1) return std::make_pair(p, v);
            return std::nullopt;
        }
    }
    return std::make_pair(u64(m), 1);
}

LoopConvention loops_from(const json& c) {
    std::string s = c.value("loops", "topologist");
    if (s == "topologist") return LoopConvention::topologist;
    if (s == "algebraist") return LoopConvention::algebraist;
    throw std::invalid_argument("loops must be topologist or algebraist");
}

json run_mbound(const json& c) {
    MBoundQuery q(c.at("a").get<std::vector<i64>>(), c.at("N").get<i64>());
    json out{{"value", big_to_json(m_bound(q))}};
    json witness = json::array();
    for (i64 y : m_bound_witness(q)) witness.push_back(y);
    out["witness"] = witness;
    return out;
}

json run_verify_main(const json& c, int workers, bool* violated) {
    RingPtr ring = ring_from(c);
    std::vector<MPoly> polys;
    const int n = int(c.at("A").size());
    for (const auto& s : c.at("polys")) polys.push_back(parse_poly(ring, n, s.get<std::string>()));
    RestrictedSystem sys(ring, subset_list_from_json(ring, c.at("A")), std::move(polys),
                         c.at("vj").get<std::vector<int>>(), subset_list_from_json(ring, c.at("B")));
    VerificationReport rep = verify_main_theorem(sys, workers);
    *violated = !rep.holds;
    json out = report_to_json(rep);
    out["budget_used"] = u128_str(sys.grid_size());
    return out;
}

json run_alon_furedi(const json& c, bool* violated) {
    RingPtr ring = ring_from(c);
    auto grid = subset_list_from_json(ring, c.at("A"));
    MPoly f = parse_poly(ring, int(grid.size()), c.at("poly").get<std::string>());
    VerificationReport rep = count_nonvanishing(f, grid);
    *violated = !rep.holds;
    return report_to_json(rep);
}

json run_afk_lemma(const json& c) {
    RingPtr ring = ring_from(c);
    RingElement x = element_from_json(ring, c.at("x"));
    std::vector<RingElement> t;
    for (const auto& e : c.at("T")) t.push_back(element_from_json(ring, e));
    const int vj = c.at("vj").get<int>();
    AfkResult r = afk_valuation(ring, x, vj, SubsetSpec(std::move(t)));
    return json{{"valuation", r.valuation},
                {"equality_case", r.equality_case},
                {"ring_length", r.ring_length},
                {"c", c_budget(ring->residue_size(), vj)}};
}

json run_davenport(const json& c) {
    PGroup g(c.at("group").get<std::vector<i64>>());
    return json{{"D", davenport(g, c.value("budget", i64(64)))}, {"d", little_d(g)}};
}

json run_fat_davenport(const json& c) {
    PGroup g(c.at("group").get<std::vector<i64>>());
    std::vector<std::vector<i64>> b;
    for (const auto& e : c.at("B")) {
        if (e.is_number_integer())
            b.push_back({e.get<i64>()});  // rank-1 shorthand
        else
            b.push_back(e.get<std::vector<i64>>());
    }
    int value = fat_davenport(g, c.at("A").get<std::vector<i64>>(), b, c.value("budget", i64(64)));
    return json{{"value", value}};
}

json run_nweighted(const json& c) {
    PGroup g(c.at("group").get<std::vector<i64>>());
    GSequence seq(g, int_sets_from_json(c.at("seq")));
    BigInt count = count_weighted_sums(seq, int_sets_from_json(c.at("A")),
                                       int_sets_from_json(c.at("B")));
    return json{{"count", big_to_json(count)}};
}

json run_egz(const json& c, bool* violated) {
    PGroup g(c.at("group").get<std::vector<i64>>());
    GSequence seq(g, int_sets_from_json(c.at("seq")));
    VerificationReport rep = egz_count(seq, int_sets_from_json(c.at("A")),
                                       int_sets_from_json(c.at("B")), c.at("k").get<int>());
    *violated = !rep.holds;
    return report_to_json(rep);
}

json run_hypergraph(const json& c, bool* violated) {
    std::vector<std::vector<int>> sets;
    if (c.at("sets").is_string())
        sets = parse_set_family(c.at("sets").get<std::string>());
    else
        sets = c.at("sets").get<std::vector<std::vector<int>>>();
    int ground = 0;
    for (const auto& s : sets)
        for (int x : s) ground = std::max(ground, x + 1);
    Hypergraph h(ground, std::move(sets));
    const i64 m = c.at("m").get<i64>();
    const auto b = c.at("B").get<std::vector<i64>>();

    json out{{"count", big_to_json(hypergraph_count(h, m, b))},
             {"length", h.length()},
             {"max_degree", h.max_degree()}};
    if (auto pv = prime_power(m)) {
        try {
            HypergraphReport rep = hypergraph_count_checked(h, pv->first, pv->second, b);
            out["cross_count"] = big_to_json(rep.cross_count);
            out["bound"] = big_to_json(rep.bound);
            out["holds"] = rep.holds;
            *violated = !rep.holds;
        } catch (const std::invalid_argument&) {
            // targets not pairwise incongruent mod p: no bound applies
        }
    }
    return out;
}

json run_schmitt(const json& c) {
    SchmittInstance inst = schmitt_construction(c.at("b").get<i64>(), c.at("d").get<i64>(),
                                                c.at("m").get<i64>(), c.at("a").get<i64>());
    // atomic <=> only the empty subfamily lands in B (0 = m - 0a is in B)
    BigInt hits = hypergraph_count(inst.hypergraph, inst.modulus, inst.targets);
    json out{{"length", inst.hypergraph.length()},
             {"modulus", inst.modulus},
             {"targets", inst.targets},
             {"atomic", hits == 1}};
    return out;
}

json run_divisible(const json& c) {
    std::vector<std::pair<int, int>> edges;
    if (c.at("graph").is_string())
        edges = parse_edge_list(c.at("graph").get<std::string>());
    else
        for (const auto& e : c.at("graph")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    int r = c.value("r", 0);
    for (const auto& [u, v] : edges) r = std::max({r, u, v});
    MultiGraph graph(r, std::move(edges), loops_from(c));

    std::vector<i64> q;
    if (c.at("q").is_number_integer())
        q.assign(size_t(r), c.at("q").get<i64>());
    else
        q = c.at("q").get<std::vector<i64>>();
    std::vector<i64> g(size_t(r), 0);
    if (c.contains("g")) g = c.at("g").get<std::vector<i64>>();

    DivisibilitySpec spec(q, g);
    if (c.contains("A")) spec.edge_weights = int_sets_from_json(c.at("A"));
    if (c.contains("B")) spec.vertex_targets = int_sets_from_json(c.at("B"));
    DivisibleCount count = count_divisible_subgraphs(graph, spec);
    return json{{"direct", big_to_json(count.direct)},
                {"via_zerosum", big_to_json(count.via_zerosum)}};
}

json run_atomic_search(const json& c) {
    auto found = search_atomic_graph(c.at("r").get<int>(), c.at("q").get<i64>(),
                                     c.at("n").get<int>(), loops_from(c));
    json out{{"found", found.has_value()}};
    if (found) {
        json edges = json::array();
        for (const auto& [u, v] : found->edges) edges.push_back(json::array({u, v}));
        out["edges"] = edges;
    }
    return out;
}

json run_script_e(const json& c) {
    return json{{"E", script_E(c.at("r").get<int>(), c.at("q").get<i64>())}};
}

json run_interp(const json& c, int workers, bool* violated) {
    RingPtr ring = ring_from(c);
    const int nvars = c.value("nvars", 1);
    std::vector<MPoly> basis;
    for (const auto& s : c.at("basis")) basis.push_back(parse_poly(ring, nvars, s.get<std::string>()));
    std::vector<std::vector<RingElement>> nodes;
    for (const auto& node : c.at("nodes")) {
        std::vector<RingElement> x;
        for (const auto& e : node) x.push_back(element_from_json(ring, e));
        nodes.push_back(std::move(x));
    }
    InterpolationProblem prob(ring, std::move(basis), subset_list_from_json(ring, c.at("A")),
                              std::move(nodes), c.at("vj").get<std::vector<int>>(),
                              subset_list_from_json(ring, c.at("B")));
    VerificationReport rep = interp_count(prob, workers);
    *violated = !rep.holds;
    json out = report_to_json(rep);
    out["direct_count"] = big_to_json(interp_count_direct(prob));
    return out;
}

json run_troi_zannier(const json& c) {
    const i64 q = c.at("q").get<i64>();
    auto pv = prime_power(q);
    if (!pv) throw std::invalid_argument("q must be a prime power");
    RingPtr field = make_chain_ring(pv->first, pv->second, 1);
    std::vector<RingElement> elems = all_elements(field);

    // targets: {"1": [0,1], "2": [0]} or compact "1:0,1;2:0"
    std::vector<std::vector<RingElement>> by_index(size_t(q - 1));
    auto assign = [&](const std::string& key, const std::vector<RingElement>& vals) {
        RingElement x = parse_element(field, key);
        for (u64 i = 1; i < u64(q); ++i)
            if (elems[size_t(i)] == x) {
                by_index[size_t(i - 1)] = vals;
                return;
            }
        throw std::invalid_argument("target key is not a nonzero field element");
    };
    if (c.at("B").is_string()) {
        std::string spec = c.at("B").get<std::string>();
        size_t pos = 0;
        while (pos < spec.size()) {
            size_t colon = spec.find(':', pos);
            size_t semi = spec.find(';', pos);
            if (semi == std::string::npos) semi = spec.size();
            if (colon == std::string::npos || colon > semi)
                throw std::invalid_argument("target entries look like x:b1,b2");
            std::vector<RingElement> vals;
            for (i64 b : parse_int_list(spec.substr(colon + 1, semi - colon - 1)))
                vals.push_back(field->from_int(b));
            assign(spec.substr(pos, colon - pos), vals);
            pos = semi + (semi < spec.size() ? 1 : 0);
        }
    } else {
        for (const auto& [key, val] : c.at("B").items()) {
            std::vector<RingElement> vals;
            for (const auto& e : val) vals.push_back(element_from_json(field, e));
            assign(key, vals);
        }
    }
    std::vector<SubsetSpec> targets;
    for (auto& vals : by_index) {
        if (vals.empty()) throw std::invalid_argument("every nonzero element needs a target set");
        targets.emplace_back(std::move(vals));
    }

    TroiZannierResult r = troi_zannier(field, targets);
    json witness = json::array();
    for (const auto& e : r.witness) witness.push_back(e.str());
    return json{{"bound_numerator", big_to_json(r.bound_numerator)},
                {"bound_denominator", r.bound_denominator},
                {"criterion_degree", r.criterion_degree},
                {"min_degree", r.min_degree},
                {"witness", witness}};
}

json run_sweep(const json& c, bool* violated) {
    const std::string name = c.at("sweep").get<std::string>();
    const u64 seed = c.value("seed", u64(42));
    sweeps::Outcome out;
    if (name == "mbound-equivalence") {
        out = sweeps::mbound_equivalence(c.value("max_n", 4), c.value("max_a", 4));
    } else if (name == "mbound-identities") {
        out = sweeps::mbound_identities(c.value("max_n", 4), c.value("max_a", 4),
                                        c.value("max_binary_n", 12));
    } else if (name == "afk-lemma") {
        out = sweeps::afk_lemma_exhaustive(seed, c.value("spot_checks", 200));
    } else if (name == "main-theorem") {
        out = sweeps::main_theorem_random(seed, c.value("instances", u64(1000)));
    } else if (name == "warning-sharpness") {
        out = sweeps::warning_sharpness(seed, c.value("samples", u64(50)));
    } else if (name == "alon-furedi") {
        out = sweeps::alon_furedi(seed, c.value("instances", u64(500)), c.value("max_n", 3),
                                  c.value("max_a", 3));
    } else if (name == "davenport") {
        out = sweeps::davenport_suite();
    } else if (name == "ncount") {
        out = sweeps::ncount_suite(c.value("max_order", 8), c.value("max_len", 8));
    } else if (name == "graph") {
        out = sweeps::graph_suite(seed, c.value("samples", u64(1000)));
    } else if (name == "hypergraph") {
        out = sweeps::hypergraph_suite(seed, c.value("samples", u64(200)));
    } else if (name == "interpolation") {
        out = sweeps::interpolation_suite(seed, c.value("samples", u64(100)));
    } else {
        throw std::invalid_argument("unknown sweep '" + name + "'");
    }
    *violated = !out.pass();
    json failures = json::array();
    for (const auto& f : out.failures) failures.push_back(f);
    return json{{"instances", out.instances}, {"failures", failures}, {"pass", out.pass()}};
}

}  // namespace

RunResult run_config(const json& config, int workers) {
    RunResult result;
    const auto start = std::chrono::steady_clock::now();
    json payload;
    bool violated = false;
    try {
        if (!config.contains("kind") || !config.at("kind").is_string()) {
            result.exit_code = kExitBadKind;
            payload = json{{"error", "missing kind"}};
        } else {
            const std::string kind = config.at("kind").get<std::string>();
            if (kind == "mbound")
                payload = run_mbound(config);
            else if (kind == "verify-main")
                payload = run_verify_main(config, workers, &violated);
            else if (kind == "alon-furedi")
                payload = run_alon_furedi(config, &violated);
            else if (kind == "afk-lemma")
                payload = run_afk_lemma(config);
            else if (kind == "davenport")
                payload = run_davenport(config);
            else if (kind == "fat-davenport")
                payload = run_fat_davenport(config);
            else if (kind == "nweighted")
                payload = run_nweighted(config);
            else if (kind == "egz")
                payload = run_egz(config, &violated);
            else if (kind == "hypergraph")
                payload = run_hypergraph(config, &violated);
            else if (kind == "schmitt")
                payload = run_schmitt(config);
            else if (kind == "divisible")
                payload = run_divisible(config);
            else if (kind == "atomic-search")
                payload = run_atomic_search(config);
            else if (kind == "script-e")
                payload = run_script_e(config);
            else if (kind == "interp")
                payload = run_interp(config, workers, &violated);
            else if (kind == "troi-zannier")
                payload = run_troi_zannier(config);
            else if (kind == "sweep")
                payload = run_sweep(config, &violated);
            else {
                result.exit_code = kExitBadKind;
                payload = json{{"error", "unknown kind '" + kind + "'"}};
            }
            if (result.exit_code == 0 && violated) result.exit_code = kExitBoundViolated;
        }
    } catch (const BudgetError& e) {
        result.exit_code = kExitBudget;
        payload = json{{"error", e.what()}, {"budget", e.size}};
    } catch (const nlohmann::json::exception& e) {
        result.exit_code = kExitBadParams;
        payload = json{{"error", e.what()}};
    } catch (const std::invalid_argument& e) {
        result.exit_code = kExitBadParams;
        payload = json{{"error", e.what()}};
    }
    const auto end = std::chrono::steady_clock::now();
    result.report = json{
        {"config", config},
        {"result", payload},
        {"timing_ms", std::chrono::duration<double, std::milli>(end - start).count()},
    };
    return result;
}

}  // namespace chainwarn
