#include "toruscolor/weak_degeneracy.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace toruscolor {

namespace {

void check_f(const Graph& g, const DegFunction& f) {
    if (static_cast<int>(f.size()) < g.universe())
        throw input_error("degree function shorter than vertex universe");
}

} // namespace

std::optional<std::pair<Graph, DegFunction>> apply_delete(const Graph& g, const DegFunction& f, int u) {
    check_f(g, f);
    if (!g.has_vertex(u)) throw input_error("unknown vertex " + std::to_string(u));
    DegFunction f2 = f;
    for (int w : g.neighbors(u)) {
        if (--f2[w] < 0) return std::nullopt;
    }
    return std::make_pair(g.without_vertex(u), std::move(f2));
}

std::optional<std::pair<Graph, DegFunction>> apply_delete_save(const Graph& g, const DegFunction& f,
                                                               int u, int w) {
    check_f(g, f);
    if (!g.has_vertex(u)) throw input_error("unknown vertex " + std::to_string(u));
    if (!g.has_vertex(w)) throw input_error("unknown vertex " + std::to_string(w));
    if (!g.has_edge(u, w)) throw input_error("deletesave endpoints not adjacent");
    if (!(f[u] > f[w])) return std::nullopt;
    DegFunction f2 = f;
    for (int x : g.neighbors(u)) {
        if (x == w) continue;
        if (--f2[x] < 0) return std::nullopt;
    }
    return std::make_pair(g.without_vertex(u), std::move(f2));
}

namespace {

// Search state key: which vertices remain plus their current f values.
struct StateKey {
    uint64_t mask;
    std::vector<int> f;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        size_t h = std::hash<uint64_t>{}(k.mask);
        for (int x : k.f) h = h * 1000003u + static_cast<size_t>(x + 1);
        return h;
    }
};

struct WdSearch {
    std::unordered_set<StateKey, StateKeyHash> dead;
    OperationTrace trace;

    bool run(const Graph& g, const DegFunction& f) {
        if (g.num_vertices() == 0) return true;
        StateKey key{0, {}};
        for (int v : g.vertices()) {
            key.mask |= uint64_t{1} << v;
            key.f.push_back(f[v]);
        }
        if (dead.count(key)) return false;
        for (int u : g.vertices()) {
            if (auto next = apply_delete(g, f, u)) {
                trace.push_back({OpKind::Delete, u, -1});
                if (run(next->first, next->second)) return true;
                trace.pop_back();
            }
            for (int w : g.neighbors(u)) {
                if (!(f[u] > f[w])) continue;
                if (auto next = apply_delete_save(g, f, u, w)) {
                    trace.push_back({OpKind::DeleteSave, u, w});
                    if (run(next->first, next->second)) return true;
                    trace.pop_back();
                }
            }
        }
        dead.insert(std::move(key));
        return false;
    }
};

} // namespace

std::optional<OperationTrace> is_weakly_f_degenerate(const Graph& g, const DegFunction& f,
                                                     int vertex_bound) {
    check_f(g, f);
    if (g.num_vertices() > vertex_bound)
        throw bound_exceeded("weak degeneracy search limited to " + std::to_string(vertex_bound) +
                             " vertices (got " + std::to_string(g.num_vertices()) + ")");
    if (g.universe() > 64) throw bound_exceeded("vertex ids beyond 64 unsupported in search");
    WdSearch s;
    if (s.run(g, f)) return s.trace;
    return std::nullopt;
}

int weak_degeneracy(const Graph& g, int vertex_bound) {
    for (int d = 0;; ++d) {
        DegFunction f(std::max(g.universe(), 1), d);
        if (is_weakly_f_degenerate(g, f, vertex_bound)) return d;
    }
}

int degeneracy(const Graph& g) {
    Graph h = g;
    int best = 0;
    while (h.num_vertices() > 0) {
        int pick = -1, dmin = 0;
        for (int v : h.vertices())
            if (pick == -1 || h.degree(v) < dmin) {
                pick = v;
                dmin = h.degree(v);
            }
        best = std::max(best, dmin);
        h = h.without_vertex(pick);
    }
    return best;
}

bool verify_trace(const Graph& g, const DegFunction& f, const OperationTrace& t) {
    if (static_cast<int>(f.size()) < g.universe()) return false;
    Graph cur = g;
    DegFunction fcur = f;
    for (const auto& op : t) {
        if (!cur.has_vertex(op.u)) return false;
        std::optional<std::pair<Graph, DegFunction>> next;
        if (op.kind == OpKind::Delete) {
            next = apply_delete(cur, fcur, op.u);
        } else {
            if (!cur.has_vertex(op.w) || !cur.has_edge(op.u, op.w)) return false;
            next = apply_delete_save(cur, fcur, op.u, op.w);
        }
        if (!next) return false;
        cur = std::move(next->first);
        fcur = std::move(next->second);
    }
    return cur.num_vertices() == 0;
}

bool gallai_weak_check(const Graph& g, const DegFunction& h, const std::vector<int>& u_set) {
    check_f(g, h);
    for (int u : u_set) {
        if (!g.has_vertex(u)) throw input_error("unknown vertex " + std::to_string(u));
        if (g.degree(u) != h[u])
            throw input_error("vertex " + std::to_string(u) + " does not satisfy degree(u) == h(u)");
    }
    Graph sub = g.induced(u_set);
    std::vector<char> seen(sub.universe(), 0);
    for (int s : sub.vertices()) {
        if (seen[s]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : sub.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
        }
        if (!is_gdp_tree(sub.induced(comp))) return false;
    }
    return true;
}

} // namespace toruscolor
