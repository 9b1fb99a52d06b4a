#include "toruscolor/graph.hpp"

#include <algorithm>
#include <string>

namespace toruscolor {

Graph::Graph(int n) {
    if (n < 0) throw input_error("negative vertex count");
    present_.assign(n, 1);
    adj_.assign(n, {});
    verts_.resize(n);
    for (int i = 0; i < n; ++i) verts_[i] = i;
    nv_ = n;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (!has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(ne_);
    for (int u : verts_)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) throw input_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++ne_;
}

Graph Graph::without_vertex(int u) const {
    check_vertex(u);
    Graph h(*this);
    h.ne_ -= h.degree(u);
    for (int w : h.adj_[u]) {
        auto& a = h.adj_[w];
        a.erase(std::lower_bound(a.begin(), a.end(), u));
    }
    h.adj_[u].clear();
    h.present_[u] = 0;
    h.verts_.erase(std::lower_bound(h.verts_.begin(), h.verts_.end(), u));
    --h.nv_;
    return h;
}

Graph Graph::induced(const std::vector<int>& vs) const {
    std::vector<char> keep(universe(), 0);
    for (int v : vs) {
        check_vertex(v);
        keep[v] = 1;
    }
    Graph h(*this);
    for (int v : verts_)
        if (!keep[v]) h = h.without_vertex(v);
    return h;
}

bool Graph::connected() const {
    if (nv_ <= 1) return true;
    std::vector<char> seen(universe(), 0);
    std::vector<int> stack{verts_[0]};
    seen[verts_[0]] = 1;
    int cnt = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++cnt;
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return cnt == nv_;
}

int Graph::min_degree() const {
    if (nv_ == 0) throw input_error("min_degree of empty graph");
    int d = degree(verts_[0]);
    for (int v : verts_) d = std::min(d, degree(v));
    return d;
}

bool contains_k5_minus(const Graph& g) {
    std::vector<int> cand;
    for (int v : g.vertices())
        if (g.degree(v) >= 3) cand.push_back(v); // every K5^- vertex has >= 3 inside edges
    int n = static_cast<int>(cand.size());
    if (n < 5) return false;
    std::vector<int> pick(5);
    // choose 5 of cand by index, count induced edges
    std::vector<int> idx{0, 1, 2, 3, 4};
    while (true) {
        int edges = 0;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                if (g.has_edge(cand[idx[a]], cand[idx[b]])) ++edges;
        if (edges >= 9) return true;
        int pos = 4;
        while (pos >= 0 && idx[pos] == n - 5 + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < 5; ++q) idx[q] = idx[q - 1] + 1;
    }
    return false;
}

namespace {

bool cycle_dfs(const Graph& g, int start, int v, int depth, int k, std::vector<char>& used) {
    if (depth == k) return g.has_edge(v, start);
    for (int w : g.neighbors(v)) {
        if (w <= start || used[w]) continue;
        used[w] = 1;
        if (cycle_dfs(g, start, w, depth + 1, k, used)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool has_cycle_of_length(const Graph& g, int k) {
    if (k < 3 || k > 8) throw input_error("cycle length must be in [3, 8]");
    std::vector<char> used(g.universe(), 0);
    for (int s : g.vertices()) {
        used[s] = 1;
        if (cycle_dfs(g, s, s, 1, k, used)) return true;
        used[s] = 0;
    }
    return false;
}

namespace {

struct BlockDfs {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockDfs(const Graph& gg)
        : g(gg), num(gg.universe(), -1), low(gg.universe(), 0), is_cut(gg.universe(), 0) {}

    void pop_block(int u, int v) {
        std::vector<char> in(g.universe(), 0);
        std::vector<int> vs;
        while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            for (int x : {a, b})
                if (!in[x]) {
                    in[x] = 1;
                    vs.push_back(x);
                }
            if (a == u && b == v) break;
        }
        std::sort(vs.begin(), vs.end());
        blocks.push_back(std::move(vs));
    }

    void dfs(int v, int parent) {
        const bool root = parent < 0;
        num[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            if (num[w] == -1) {
                estack.emplace_back(v, w);
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    if (!root || children > 1) is_cut[v] = 1;
                    pop_block(v, w);
                }
            } else if (num[w] < num[v]) {
                estack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }
};

} // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    BlockDfs b(g);
    for (int v : g.vertices())
        if (b.num[v] == -1) {
            b.dfs(v, -1);
            if (g.degree(v) == 0) b.blocks.push_back({v});
        }
    std::sort(b.blocks.begin(), b.blocks.end(),
              [](const auto& x, const auto& y) { return x.front() != y.front() ? x.front() < y.front() : x < y; });
    BlockDecomposition out;
    out.blocks = std::move(b.blocks);
    for (int v : g.vertices())
        if (b.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

namespace {

bool block_is_cycle_or_complete(const Graph& g, const std::vector<int>& block) {
    int k = static_cast<int>(block.size());
    if (k <= 2) return true; // K1, K2
    int edges = 0;
    bool all_deg2 = true;
    for (int a = 0; a < k; ++a) {
        int d = 0;
        for (int b = 0; b < k; ++b)
            if (a != b && g.has_edge(block[a], block[b])) ++d;
        edges += d;
        if (d != 2) all_deg2 = false;
    }
    edges /= 2;
    if (edges == k * (k - 1) / 2) return true;       // complete
    return all_deg2 && edges == k;                    // cycle
}

} // namespace

bool is_gdp_tree(const Graph& g) {
    if (g.num_vertices() == 0) return false;
    if (!g.connected()) return false;
    for (const auto& block : block_decomposition(g).blocks)
        if (!block_is_cycle_or_complete(g, block)) return false;
    return true;
}

} // namespace toruscolor
