#include "toruscolor/alon_tarsi.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace toruscolor {

Orientation::Orientation(Graph g, std::vector<std::pair<int, int>> arcs) : g_(std::move(g)) {
    std::map<std::pair<int, int>, std::pair<int, int>> by_edge; // {u<v} -> arc
    for (auto [t, h] : arcs) {
        if (!g_.has_edge(t, h)) throw input_error("arc " + std::to_string(t) + ">" + std::to_string(h) +
                                                  " is not an edge of the graph");
        auto key = std::minmax(t, h);
        if (by_edge.count({key.first, key.second}))
            throw input_error("edge oriented twice: " + std::to_string(t) + ">" + std::to_string(h));
        by_edge[{key.first, key.second}] = {t, h};
    }
    if (static_cast<int>(by_edge.size()) != g_.num_edges())
        throw input_error("orientation does not cover every edge");
    arcs_.reserve(by_edge.size());
    for (auto& [e, arc] : by_edge) arcs_.push_back(arc);
}

int Orientation::out_degree(int v) const {
    if (!g_.has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
    int d = 0;
    for (auto [t, h] : arcs_)
        if (t == v) ++d;
    return d;
}

int Orientation::max_out_degree() const {
    std::vector<int> out(g_.universe(), 0);
    for (auto [t, h] : arcs_) ++out[t];
    int m = 0;
    for (int v : g_.vertices()) m = std::max(m, out[v]);
    return m;
}

Orientation Orientation::induced(const std::vector<int>& vs) const {
    Graph sub = g_.induced(vs);
    std::vector<std::pair<int, int>> arcs;
    for (auto [t, h] : arcs_)
        if (sub.has_vertex(t) && sub.has_vertex(h)) arcs.emplace_back(t, h);
    return Orientation(std::move(sub), std::move(arcs));
}

namespace {

struct Census {
    const std::vector<std::pair<int, int>>& arcs;
    std::vector<int> bal, remaining;
    BigInt even = 0, odd = 0;

    Census(const std::vector<std::pair<int, int>>& a, int universe)
        : arcs(a), bal(universe, 0), remaining(universe, 0) {
        for (auto [t, h] : arcs) {
            ++remaining[t];
            ++remaining[h];
        }
    }

    void run(size_t i, int picked) {
        if (i == arcs.size()) {
            (picked % 2 == 0 ? even : odd) += 1;
            return;
        }
        auto [t, h] = arcs[i];
        --remaining[t];
        --remaining[h];
        // skip arc i
        if (std::abs(bal[t]) <= remaining[t] && std::abs(bal[h]) <= remaining[h]) run(i + 1, picked);
        // take arc i
        ++bal[t];
        --bal[h];
        if (std::abs(bal[t]) <= remaining[t] && std::abs(bal[h]) <= remaining[h]) run(i + 1, picked + 1);
        --bal[t];
        ++bal[h];
        ++remaining[t];
        ++remaining[h];
    }
};

} // namespace

DiffResult eulerian_census(const Orientation& d, int arc_bound) {
    if (static_cast<int>(d.arcs().size()) > arc_bound)
        throw bound_exceeded("census limited to " + std::to_string(arc_bound) + " arcs (got " +
                             std::to_string(d.arcs().size()) + ")");
    Census c(d.arcs(), d.graph().universe());
    c.run(0, 0);
    return DiffResult{c.even, c.odd, c.even - c.odd};
}

bool is_at_orientation(const Orientation& d, int arc_bound) {
    return eulerian_census(d, arc_bound).diff != 0;
}

namespace {

// First orientation (edges in lexicographic order, forward direction tried first)
// with out-degrees <= cap and nonzero diff.
std::optional<Orientation> search_at_orientation(const Graph& g, int cap,
                                                 const std::vector<std::pair<int, int>>& edges,
                                                 std::vector<std::pair<int, int>>& arcs,
                                                 std::vector<int>& out, size_t i) {
    if (i == edges.size()) {
        Orientation d(g, arcs);
        if (eulerian_census(d).diff != 0) return d;
        return std::nullopt;
    }
    auto [u, v] = edges[i];
    for (auto [t, h] : {std::pair{u, v}, std::pair{v, u}}) {
        if (out[t] + 1 > cap) continue;
        ++out[t];
        arcs.push_back({t, h});
        if (auto r = search_at_orientation(g, cap, edges, arcs, out, i + 1)) return r;
        arcs.pop_back();
        --out[t];
    }
    return std::nullopt;
}

} // namespace

std::pair<int, Orientation> alon_tarsi_number_witness(const Graph& g, int edge_bound) {
    if (g.num_edges() > edge_bound)
        throw bound_exceeded("orientation search limited to " + std::to_string(edge_bound) +
                             " edges (got " + std::to_string(g.num_edges()) + ")");
    if (g.num_edges() == 0) return {1, Orientation(g, {})};
    auto edges = g.edges();
    // an acyclic orientation along a degeneracy order has diff 1, so k <= degeneracy + 1
    for (int k = 2;; ++k) {
        std::vector<std::pair<int, int>> arcs;
        std::vector<int> out(g.universe(), 0);
        if (auto r = search_at_orientation(g, k - 1, edges, arcs, out, 0)) return {k, *r};
    }
}

int alon_tarsi_number(const Graph& g, int edge_bound) {
    return alon_tarsi_number_witness(g, edge_bound).first;
}

bool lemma_L_check(const Orientation& d, const std::vector<int>& x1, const std::vector<int>& x2) {
    const Graph& g = d.graph();
    std::vector<int> side(g.universe(), -1);
    for (int v : x1) {
        if (!g.has_vertex(v) || side[v] != -1) throw input_error("x1/x2 is not a partition");
        side[v] = 1;
    }
    for (int v : x2) {
        if (!g.has_vertex(v) || side[v] != -1) throw input_error("x1/x2 is not a partition");
        side[v] = 2;
    }
    for (int v : g.vertices())
        if (side[v] == -1) throw input_error("x1/x2 is not a partition");
    for (auto [t, h] : d.arcs())
        if (side[t] == 2 && side[h] == 1)
            throw input_error("cross arc " + std::to_string(t) + ">" + std::to_string(h) +
                              " runs against the cut");
    bool whole = is_at_orientation(d);
    bool parts = is_at_orientation(d.induced(x1)) && is_at_orientation(d.induced(x2));
    return whole == parts;
}

ReducibleOrientation reducible_orientation(ConfigurationId id) {
    switch (id) {
    case ConfigurationId::FIG1_K5MM:
        return {id, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}, {0, 4}, {2, 4}, {3, 4}}, {0, 2, 0, 1, 1}};
    case ConfigurationId::FIG2_KITE:
        return {id, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, {1, 2, 1, 2}};
    case ConfigurationId::FIG3_HOUSE:
        return {id, {{0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 0}}, {1, 1, 2, 2, 2}};
    }
    throw input_error("unknown configuration id");
}

bool verify_reducible_orientation(const ReducibleOrientation& r) {
    Graph pattern = configuration_graph(r.config);
    Orientation d(pattern, r.arcs); // validates the arc set against the pattern
    if (static_cast<int>(r.stubs.size()) != pattern.universe())
        throw input_error("stub list size does not match the configuration");
    for (int v = 0; v < pattern.universe(); ++v) {
        if (r.stubs[v] != 4 - pattern.degree(v))
            throw input_error("stub count at vertex " + std::to_string(v) +
                              " is not 4 - interior degree");
        if (d.out_degree(v) + r.stubs[v] > 3) return false;
    }
    return eulerian_census(d).diff != 0;
}

namespace {

bool extend_iso(const Graph& pattern, const Graph& host, const std::vector<int>& gamma,
                std::vector<int>& map, std::vector<char>& used, int next) {
    if (next == pattern.universe()) return true;
    for (int h : gamma) {
        if (used[h]) continue;
        bool ok = true;
        for (int p = 0; p < next && ok; ++p)
            if (pattern.has_edge(p, next) != host.has_edge(map[p], h)) ok = false;
        if (!ok) continue;
        map[next] = h;
        used[h] = 1;
        if (extend_iso(pattern, host, gamma, map, used, next + 1)) return true;
        used[h] = 0;
    }
    return false;
}

} // namespace

Orientation extend_at_orientation(const Graph& g, const std::vector<int>& gamma,
                                  const Orientation& d_rest, const ReducibleOrientation& r) {
    Graph pattern = configuration_graph(r.config);
    std::vector<char> in_gamma(g.universe(), 0);
    for (int v : gamma) {
        if (!g.has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
        if (in_gamma[v]) throw input_error("duplicate vertex in gamma");
        in_gamma[v] = 1;
    }
    if (static_cast<int>(gamma.size()) != pattern.universe())
        throw input_error("gamma size does not match the configuration");
    std::vector<int> map(pattern.universe(), -1);
    std::vector<char> used(g.universe(), 0);
    if (!extend_iso(pattern, g, gamma, map, used, 0))
        throw input_error("gamma does not induce the configuration");

    std::vector<int> rest;
    for (int v : g.vertices())
        if (!in_gamma[v]) rest.push_back(v);
    const Graph& rg = d_rest.graph();
    Graph expect = g.induced(rest);
    if (rg.vertices() != expect.vertices() || rg.edges() != expect.edges())
        throw input_error("d_rest is not an orientation of g minus gamma");

    std::vector<std::pair<int, int>> arcs;
    for (auto [p, q] : r.arcs) arcs.emplace_back(map[p], map[q]);
    for (auto [u, v] : g.edges()) {
        if (in_gamma[u] && !in_gamma[v]) arcs.emplace_back(u, v);
        else if (!in_gamma[u] && in_gamma[v]) arcs.emplace_back(v, u);
    }
    for (auto arc : d_rest.arcs()) arcs.push_back(arc);
    return Orientation(g, std::move(arcs));
}

} // namespace toruscolor
