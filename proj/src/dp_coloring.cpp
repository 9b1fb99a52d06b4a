#include "toruscolor/dp_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

namespace toruscolor {

void Cover::validate() const {
    if (static_cast<int>(list_sizes.size()) < base.universe())
        throw input_error("list_sizes shorter than vertex universe");
    for (int v : base.vertices())
        if (list_sizes[v] < 0) throw input_error("negative list size");
    std::set<std::pair<int, int>> seen_edges;
    for (const auto& m : matchings) {
        auto [u, v] = m.edge;
        if (!base.has_edge(u, v)) throw input_error("matching on a non-edge");
        auto key = std::minmax(u, v);
        if (!seen_edges.insert({key.first, key.second}).second)
            throw input_error("two matchings on one edge");
        std::set<int> left, right;
        for (auto [i, j] : m.pairs) {
            if (i < 0 || i >= list_sizes[u] || j < 0 || j >= list_sizes[v])
                throw input_error("matching pair out of list range");
            if (!left.insert(i).second || !right.insert(j).second)
                throw input_error("matching is not a partial matching");
        }
    }
}

bool Cover::conflicts(int u, int i, int v, int j) const {
    for (const auto& m : matchings) {
        if (m.edge == std::pair{u, v}) {
            for (auto [a, b] : m.pairs)
                if (a == i && b == j) return true;
            return false;
        }
        if (m.edge == std::pair{v, u}) {
            for (auto [a, b] : m.pairs)
                if (a == j && b == i) return true;
            return false;
        }
    }
    return false;
}

namespace {

bool dp_dfs(const Cover& c, const std::vector<int>& order, std::vector<int>& choice, size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int i = 0; i < c.list_sizes[v]; ++i) {
        bool ok = true;
        for (size_t q = 0; q < pos && ok; ++q) {
            int u = order[q];
            if (c.base.has_edge(u, v) && c.conflicts(u, choice[u], v, i)) ok = false;
        }
        if (!ok) continue;
        choice[v] = i;
        if (dp_dfs(c, order, choice, pos + 1)) return true;
    }
    choice[v] = -1;
    return false;
}

} // namespace

std::optional<std::vector<int>> dp_color(const Cover& c) {
    c.validate();
    std::vector<int> choice(c.base.universe(), -1);
    if (dp_dfs(c, c.base.vertices(), choice, 0)) return choice;
    return std::nullopt;
}

bool transversal_independent(const Cover& c, const std::vector<int>& choice) {
    for (int v : c.base.vertices())
        if (choice[v] < 0 || choice[v] >= c.list_sizes[v]) return false;
    for (auto [u, v] : c.base.edges())
        if (c.conflicts(u, choice[u], v, choice[v])) return false;
    return true;
}

bool strictly_f_degenerate_choice(const Cover& c, const CoverDegFunction& f,
                                  const std::vector<int>& choice) {
    // greedy peel: a vertex removable once is removable forever
    std::vector<int> alive = c.base.vertices();
    std::vector<char> gone(c.base.universe(), 0);
    bool progress = true;
    while (progress && !alive.empty()) {
        progress = false;
        for (size_t i = 0; i < alive.size(); ++i) {
            int v = alive[i];
            int deg = 0;
            for (int u : c.base.neighbors(v))
                if (!gone[u] && c.conflicts(u, choice[u], v, choice[v])) ++deg;
            if (deg < f[v][choice[v]]) {
                gone[v] = 1;
                alive.erase(alive.begin() + i);
                progress = true;
                break;
            }
        }
    }
    return alive.empty();
}

namespace {

bool sfd_dfs(const Cover& c, const CoverDegFunction& f, const std::vector<int>& order,
             std::vector<int>& choice, size_t pos) {
    if (pos == order.size()) return strictly_f_degenerate_choice(c, f, choice);
    int v = order[pos];
    for (int i = 0; i < c.list_sizes[v]; ++i) {
        choice[v] = i;
        if (sfd_dfs(c, f, order, choice, pos + 1)) return true;
    }
    choice[v] = -1;
    return false;
}

} // namespace

std::optional<std::vector<int>> strictly_f_degenerate_transversal(const Cover& c,
                                                                  const CoverDegFunction& f) {
    c.validate();
    for (int v : c.base.vertices()) {
        if (static_cast<int>(f.size()) <= v || static_cast<int>(f[v].size()) != c.list_sizes[v])
            throw input_error("cover degree function does not match the lists");
        for (int x : f[v])
            if (x < 0 || x > 2) throw input_error("cover degree values must lie in {0, 1, 2}");
    }
    std::vector<int> choice(c.base.universe(), -1);
    if (sfd_dfs(c, f, c.base.vertices(), choice, 0)) return choice;
    return std::nullopt;
}

namespace {

bool lcol_dfs(const Graph& g, const std::vector<std::vector<int>>& lists,
              std::vector<int>& col, const std::vector<int>& order, size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int color : lists[v]) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (col[u] == color && u != v) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[v] = color;
        if (lcol_dfs(g, lists, col, order, pos + 1)) return true;
    }
    col[v] = INT32_MIN;
    return false;
}

} // namespace

std::optional<std::vector<int>> is_L_colorable(const Graph& g,
                                               const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) < g.universe())
        throw input_error("list assignment shorter than vertex universe");
    std::vector<int> col(g.universe(), INT32_MIN);
    if (lcol_dfs(g, lists, col, g.vertices(), 0)) return col;
    return std::nullopt;
}

namespace {

bool part_is_forest(const Graph& g, const std::vector<int>& assign, int part, int until_pos,
                    const std::vector<int>& order) {
    std::vector<int> vs;
    for (int q = 0; q <= until_pos; ++q)
        if (assign[order[q]] == part) vs.push_back(order[q]);
    Graph sub = g.induced(vs);
    // acyclic iff |E| = |V| - #components
    int comps = 0;
    std::vector<char> seen(sub.universe(), 0);
    for (int s : sub.vertices())
        if (!seen[s]) {
            ++comps;
            std::vector<int> st{s};
            seen[s] = 1;
            while (!st.empty()) {
                int v = st.back();
                st.pop_back();
                for (int w : sub.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        st.push_back(w);
                    }
            }
        }
    return sub.num_edges() == sub.num_vertices() - comps;
}

bool va_dfs(const Graph& g, int k, const std::vector<int>& order, std::vector<int>& assign,
            int pos, int used) {
    if (pos == static_cast<int>(order.size())) return true;
    int v = order[pos];
    int limit = std::min(k - 1, used); // symmetry breaking: at most one fresh part
    for (int p = 0; p <= limit; ++p) {
        assign[v] = p;
        if (part_is_forest(g, assign, p, pos, order) &&
            va_dfs(g, k, order, assign, pos + 1, std::max(used, p + 1)))
            return true;
    }
    assign[v] = -1;
    return false;
}

} // namespace

std::optional<std::vector<std::vector<int>>> vertex_arboricity_at_most(const Graph& g, int k) {
    if (k < 0) throw input_error("negative part count");
    if (g.num_vertices() == 0) return std::vector<std::vector<int>>{};
    if (k == 0) return std::nullopt;
    std::vector<int> assign(g.universe(), -1);
    if (!va_dfs(g, k, g.vertices(), assign, 0, 0)) return std::nullopt;
    int used = 0;
    for (int v : g.vertices()) used = std::max(used, assign[v] + 1);
    std::vector<std::vector<int>> parts(used);
    for (int v : g.vertices()) parts[assign[v]].push_back(v);
    return parts;
}

namespace {

bool kcol_dfs(const Graph& g, int k, std::vector<int>& col, const std::vector<int>& order,
              size_t pos, int used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (col[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[v] = c;
        if (kcol_dfs(g, k, col, order, pos + 1, std::max(used, c + 1))) return true;
    }
    col[v] = -1;
    return false;
}

} // namespace

int chromatic_number(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(g.universe(), -1);
        if (kcol_dfs(g, k, col, g.vertices(), 0, 0)) return k;
    }
}

Cover straight_cover(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) < g.universe())
        throw input_error("list assignment shorter than vertex universe");
    Cover c;
    c.base = g;
    c.list_sizes.assign(g.universe(), 0);
    for (int v : g.vertices()) {
        std::set<int> distinct(lists[v].begin(), lists[v].end());
        if (distinct.size() != lists[v].size())
            throw input_error("duplicate color in a list");
        c.list_sizes[v] = static_cast<int>(lists[v].size());
    }
    for (auto [u, v] : g.edges()) {
        CoverMatching m;
        m.edge = {u, v};
        for (int i = 0; i < static_cast<int>(lists[u].size()); ++i)
            for (int j = 0; j < static_cast<int>(lists[v].size()); ++j)
                if (lists[u][i] == lists[v][j]) m.pairs.push_back({i, j});
        c.matchings.push_back(std::move(m));
    }
    return c;
}

namespace {

// every cover with uniform list size k and one perfect matching per edge has a
// transversal?  (partial matchings are dominated by perfect ones)
bool all_k_covers_colorable(const Graph& g, int k) {
    auto edges = g.edges();
    std::vector<std::vector<int>> perms(edges.size());
    std::vector<int> base(k);
    std::iota(base.begin(), base.end(), 0);

    Cover c;
    c.base = g;
    c.list_sizes.assign(std::max(g.universe(), 1), k);
    c.matchings.resize(edges.size());
    for (size_t e = 0; e < edges.size(); ++e) c.matchings[e].edge = edges[e];

    // iterate the product of permutations per edge
    std::vector<std::vector<int>> sigma(edges.size(), base);
    while (true) {
        for (size_t e = 0; e < edges.size(); ++e) {
            c.matchings[e].pairs.clear();
            for (int i = 0; i < k; ++i) c.matchings[e].pairs.push_back({i, sigma[e][i]});
        }
        if (!dp_color(c)) return false;
        size_t e = 0;
        while (e < edges.size() && !std::next_permutation(sigma[e].begin(), sigma[e].end())) ++e;
        if (e == edges.size()) break;
    }
    return true;
}

double factorial(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

int dp_chromatic_number(const Graph& g, int max_k) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1; k <= max_k; ++k) {
        double covers = std::pow(factorial(k), g.num_edges());
        if (covers > 2e6)
            throw bound_exceeded("dp chromatic oracle: too many covers at list size " +
                                 std::to_string(k));
        if (all_k_covers_colorable(g, k)) return k;
    }
    throw bound_exceeded("dp chromatic oracle: exceeded list size " + std::to_string(max_k));
}

namespace {

bool choosable_dfs(const Graph& g, int k, int universe, std::vector<std::vector<int>>& lists,
                   int v) {
    if (v == g.universe()) return is_L_colorable(g, lists).has_value();
    if (!g.has_vertex(v)) return choosable_dfs(g, k, universe, lists, v + 1);
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        lists[v] = pick;
        if (!choosable_dfs(g, k, universe, lists, v + 1)) return false;
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == universe - k + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int q = pos + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
    return true;
}

} // namespace

bool is_k_choosable(const Graph& g, int k) {
    if (k < 0) throw input_error("negative list size");
    int n = g.num_vertices();
    if (n == 0) return true;
    int universe = k * n;
    double total = 1;
    for (int i = 0; i < n; ++i) {
        double c = 1;
        for (int j = 0; j < k; ++j) c = c * (universe - j) / (j + 1);
        total *= c;
        if (total > 2e6) throw bound_exceeded("choosability oracle: instance too large");
    }
    std::vector<std::vector<int>> lists(g.universe());
    return choosable_dfs(g, k, universe, lists, 0);
}

} // namespace toruscolor
