#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace toruscolor::fixtures {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph star_graph(int leaves) { return complete_bipartite_graph(1, leaves); }

Graph wheel_graph(int rim) {
    Graph g(rim + 1);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(1 + i, 1 + (i + 1) % rim);
    }
    return g;
}

Graph book_graph(int pages) {
    Graph g(2 + pages);
    g.add_edge(0, 1);
    for (int i = 0; i < pages; ++i) {
        g.add_edge(0, 2 + i);
        g.add_edge(1, 2 + i);
    }
    return g;
}

Graph fan_graph(int rim) {
    Graph g(rim + 2);
    for (int i = 0; i <= rim; ++i) g.add_edge(0, 1 + i);
    for (int i = 0; i < rim; ++i) g.add_edge(1 + i, 2 + i);
    return g;
}

Graph theta_graph() {
    return Graph(6, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph cube_graph() {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
    return g;
}

Graph octahedron_graph() {
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    return g;
}

Graph bowtie_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

Graph house_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
}

Graph kite_graph() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

Graph fig1_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 2}, {2, 0}, {0, 3}});
}

namespace {

// verified genus-1 rotation of the wheel host (32 triangles + 8 octagons)
const std::vector<std::vector<int>> kWheelHostRot = {
    {4, 3, 2, 1},     {0, 2, 21, 4},    {0, 3, 26, 1},    {0, 4, 31, 2},    {0, 1, 36, 3},
    {6, 7, 8, 9},     {5, 9, 27, 7},    {5, 6, 32, 8},    {5, 7, 37, 9},    {5, 8, 22, 6},
    {14, 13, 12, 11}, {10, 12, 33, 14}, {10, 13, 38, 11}, {10, 14, 23, 12}, {10, 11, 28, 13},
    {16, 17, 18, 19}, {15, 19, 39, 17}, {15, 16, 24, 18}, {15, 17, 29, 19}, {15, 18, 34, 16},
    {24, 23, 22, 21}, {20, 22, 1, 24},  {20, 23, 9, 21},  {20, 24, 13, 22}, {20, 21, 17, 23},
    {26, 27, 28, 29}, {25, 29, 2, 27},  {25, 26, 6, 28},  {25, 27, 14, 29}, {25, 28, 18, 26},
    {34, 33, 32, 31}, {30, 32, 3, 34},  {30, 33, 7, 31},  {30, 34, 11, 32}, {30, 31, 19, 33},
    {36, 37, 38, 39}, {35, 39, 4, 37},  {35, 36, 8, 38},  {35, 37, 12, 39}, {35, 38, 16, 36},
};

} // namespace

EmbeddedGraph wheel_host_embedded() {
    RotationSystem rot;
    rot.n = static_cast<int>(kWheelHostRot.size());
    rot.rot = kWheelHostRot;
    return trace_faces(rot);
}

Graph wheel_host_graph() { return wheel_host_embedded().g; }

EmbeddedGraph k7_torus() {
    RotationSystem rot;
    rot.n = 7;
    rot.rot.resize(7);
    for (int i = 0; i < 7; ++i)
        for (int d : {1, 3, 2, 6, 4, 5}) rot.rot[i].push_back((i + d) % 7);
    Graph g(7);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) g.add_edge(i, j);
    return trace_faces(g, rot);
}

EmbeddedGraph c4xc4_torus() {
    auto vid = [](int i, int j) { return 4 * ((i % 4 + 4) % 4) + ((j % 4 + 4) % 4); };
    RotationSystem rot;
    rot.n = 16;
    rot.rot.resize(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rot.rot[vid(i, j)] = {vid(i, j + 1), vid(i + 1, j), vid(i, j - 1), vid(i - 1, j)};
    return trace_faces(rot);
}

EmbeddedGraph embed_search(const Graph& g, const std::function<bool(const EmbeddedGraph&)>& pred,
                           long long cap) {
    const std::vector<int>& vs = g.vertices();
    std::vector<std::vector<std::vector<int>>> options;
    long long total = 1;
    for (int v : vs) {
        std::vector<int> nb = g.neighbors(v);
        std::vector<std::vector<int>> opts;
        if (nb.size() <= 2) {
            opts.push_back(nb);
        } else {
            std::vector<int> rest(nb.begin() + 1, nb.end());
            do {
                std::vector<int> r = {nb[0]};
                r.insert(r.end(), rest.begin(), rest.end());
                opts.push_back(std::move(r));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        total *= static_cast<long long>(opts.size());
        if (total > cap) throw std::runtime_error("rotation search space exceeds cap");
        options.push_back(std::move(opts));
    }
    std::vector<size_t> idx(vs.size(), 0);
    while (true) {
        RotationSystem rot;
        rot.n = g.universe();
        rot.rot.assign(g.universe(), {});
        for (size_t i = 0; i < vs.size(); ++i) rot.rot[vs[i]] = options[i][idx[i]];
        EmbeddedGraph e = trace_faces(g, rot);
        if (pred(e)) return e;
        size_t p = 0;
        while (p < idx.size() && ++idx[p] == options[p].size()) idx[p++] = 0;
        if (p == idx.size()) break;
    }
    throw std::runtime_error("no rotation satisfies the predicate");
}

EmbeddedGraph embed_genus_le(const Graph& g, int max_genus) {
    return embed_search(g, [max_genus](const EmbeddedGraph& e) { return e.genus <= max_genus; });
}

bool cyclic_window(const std::vector<int>& pattern, const std::vector<int>& window) {
    const int d = static_cast<int>(pattern.size());
    const int l = static_cast<int>(window.size());
    if (d < l) return false;
    for (int s = 0; s < d; ++s)
        for (int dir : {1, -1}) {
            bool ok = true;
            for (int i = 0; i < l && ok; ++i)
                if (pattern[((s + dir * i) % d + d) % d] != window[i]) ok = false;
            if (ok) return true;
        }
    return false;
}

bool cyclic_equal(const std::vector<int>& pattern, const std::vector<int>& target) {
    return pattern.size() == target.size() && cyclic_window(pattern, target);
}

namespace {

using Pred = std::function<bool(const EmbeddedGraph&)>;

Pred planar_with_pattern(int v, std::vector<int> target) {
    return [v, target = std::move(target)](const EmbeddedGraph& e) {
        return e.genus == 0 && cyclic_equal(vertex_face_pattern(e, v), target);
    };
}

EmbeddedGraph fixture_i() { return embed_search(wheel_graph(5), planar_with_pattern(0, {3, 3, 3, 3, 3})); }

EmbeddedGraph fixture_ii() {
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}});
    return embed_genus_le(g, 0);
}

EmbeddedGraph fixture_iii() { return embed_genus_le(kite_graph(), 0); }

EmbeddedGraph fixture_iv() { return embed_genus_le(cycle_graph(6), 0); }

EmbeddedGraph fixture_v() { return embed_genus_le(cube_graph(), 0); }

EmbeddedGraph fixture_vi() {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}, {2, 5}, {5, 3}});
    return embed_search(g, planar_with_pattern(0, {3, 4, 3, 6}));
}

EmbeddedGraph fixture_vii() {
    Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}, {2, 5}, {5, 6}, {6, 3}});
    return embed_search(g, planar_with_pattern(0, {3, 5, 3, 7}));
}

EmbeddedGraph fixture_viii() {
    Graph g(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 5}, {5, 4}, {4, 6}, {6, 7}, {7, 1}});
    return embed_search(g, planar_with_pattern(0, {3, 3, 4, 5}));
}

EmbeddedGraph fixture_ix() {
    Graph g(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {6, 2}, {2, 7}, {7, 3}, {3, 4}, {4, 8}, {8, 5}});
    return embed_search(g, [](const EmbeddedGraph& e) {
        return e.genus == 0 && cyclic_window(vertex_face_pattern(e, 0), {4, 4, 3, 4});
    });
}

EmbeddedGraph fixture_x() {
    Graph g(7, {{0, 1}, {1, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 2}, {0, 5}, {2, 5}, {1, 6}, {2, 6}});
    return embed_search(g, [](const EmbeddedGraph& e) {
        return e.genus == 0 && classify_4_vertex(e, 0) == VertexClass::SPECIAL &&
               classify_4_vertex(e, 1) == VertexClass::SPECIAL;
    });
}

EmbeddedGraph fixture_xi() {
    Graph g(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 5}, {5, 3}, {4, 7}, {7, 8}, {8, 3},
                 {1, 6}, {6, 4}, {3, 9}, {9, 5}, {9, 10}, {10, 5}});
    return embed_search(g, [](const EmbeddedGraph& e) {
        return e.genus == 0 && cyclic_equal(vertex_face_pattern(e, 0), {3, 4, 5, 4}) &&
               classify_4_vertex(e, 5) == VertexClass::SPECIAL;
    });
}

EmbeddedGraph fixture_xii() { return embed_genus_le(octahedron_graph(), 0); }

EmbeddedGraph fixture_xiii() { return embed_search(fan_graph(3), planar_with_pattern(0, {3, 3, 3, 5})); }

EmbeddedGraph fixture_xvi() {
    Graph g(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 5}, {5, 3}, {3, 6}, {6, 4}, {4, 7}, {7, 8}, {8, 1}});
    return embed_search(g, planar_with_pattern(0, {3, 4, 4, 5}));
}

EmbeddedGraph fixture_xvii() {
    Graph g(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 5}, {5, 6}, {6, 4}, {4, 7}, {7, 8}, {8, 1}});
    return embed_search(g, planar_with_pattern(0, {3, 3, 5, 5}));
}

EmbeddedGraph fixture_xviii() {
    Graph g(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 5}, {5, 3}, {4, 7}, {7, 8}, {8, 3},
                 {1, 6}, {6, 4}, {3, 9}, {9, 5}});
    return embed_search(g, [](const EmbeddedGraph& e) {
        if (e.genus != 0 || !cyclic_equal(vertex_face_pattern(e, 0), {3, 4, 5, 4})) return false;
        std::vector<int> p3 = vertex_face_pattern(e, 3);
        return std::find(p3.begin(), p3.end(), 3) != p3.end();
    });
}

EmbeddedGraph fixture_house() { return embed_genus_le(complete_graph(5), 1); }

} // namespace

EmbeddedGraph lemma_fixture(const std::string& item) {
    if (item == "i") return fixture_i();
    if (item == "ii") return fixture_ii();
    if (item == "iii") return fixture_iii();
    if (item == "iv") return fixture_iv();
    if (item == "v" || item == "xv") return fixture_v();
    if (item == "vi") return fixture_vi();
    if (item == "vii") return fixture_vii();
    if (item == "viii") return fixture_viii();
    if (item == "ix") return fixture_ix();
    if (item == "x") return fixture_x();
    if (item == "xi") return fixture_xi();
    if (item == "xii" || item == "xiv" || item == "xix") return fixture_xii();
    if (item == "xiii") return fixture_xiii();
    if (item == "xvi") return fixture_xvi();
    if (item == "xvii") return fixture_xvii();
    if (item == "xviii") return fixture_xviii();
    if (item == "L3.1") return fixture_house();
    throw std::runtime_error("no fixture for item " + item);
}

const std::vector<std::string>& lemma_fixture_items() {
    static const std::vector<std::string> items = {
        "i",  "ii",  "iii", "iv",   "v",    "vi",    "vii", "viii", "ix",   "x",
        "xi", "xii", "xiii", "xiv", "xv",   "xvi",   "xvii", "xviii", "xix", "L3.1"};
    return items;
}

std::vector<std::pair<std::string, EmbeddedGraph>> discharging_corpus() {
    std::vector<std::pair<std::string, EmbeddedGraph>> out;
    out.emplace_back("k7-torus", k7_torus());
    out.emplace_back("grid-torus", c4xc4_torus());
    out.emplace_back("wheel-host", wheel_host_embedded());
    out.emplace_back("k5-torus", embed_genus_le(complete_graph(5), 1));
    out.emplace_back("k4", embed_genus_le(complete_graph(4), 0));
    out.emplace_back("c5", embed_genus_le(cycle_graph(5), 0));
    out.emplace_back("c6", embed_genus_le(cycle_graph(6), 0));
    out.emplace_back("cube", embed_genus_le(cube_graph(), 0));
    out.emplace_back("octahedron", embed_genus_le(octahedron_graph(), 0));
    out.emplace_back("wheel4", embed_genus_le(wheel_graph(4), 0));
    out.emplace_back("wheel5", embed_genus_le(wheel_graph(5), 0));
    out.emplace_back("fan3", embed_genus_le(fan_graph(3), 0));
    out.emplace_back("book3", embed_genus_le(book_graph(3), 0));
    out.emplace_back("kite", embed_genus_le(kite_graph(), 0));
    out.emplace_back("bowtie", embed_genus_le(bowtie_graph(), 0));
    out.emplace_back("house", embed_genus_le(house_graph(), 0));
    return out;
}

namespace {

Graph with_pendant(Graph g, int at) {
    int n = g.universe();
    Graph h(n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(at, n);
    return h;
}

Graph spider(const std::vector<int>& legs) {
    int n = 1;
    for (int l : legs) n += l;
    Graph g(n);
    int next = 1;
    for (int l : legs) {
        int prev = 0;
        for (int i = 0; i < l; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph caterpillar() {
    Graph g = path_graph(5);
    Graph h(8);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(1, 5);
    h.add_edge(2, 6);
    h.add_edge(3, 7);
    return h;
}

Graph double_star() {
    Graph g(8);
    g.add_edge(0, 1);
    for (int i = 2; i < 5; ++i) g.add_edge(0, i);
    for (int i = 5; i < 8; ++i) g.add_edge(1, i);
    return g;
}

} // namespace

std::vector<TheoremCase> theorem_corpus() {
    std::vector<TheoremCase> out;
    auto add = [&out](const std::string& name, const Graph& g,
                      const std::string& expected = "MIN_DEGREE_LE_3") {
        out.push_back({name, embed_genus_le(g, 1), expected});
    };
    for (int n = 2; n <= 10; ++n) add("path-" + std::to_string(n), path_graph(n));
    for (int k = 3; k <= 9; ++k) add("star-" + std::to_string(k), star_graph(k));
    add("spider-2-2-2", spider({2, 2, 2}));
    add("spider-3-3-3", spider({3, 3, 3}));
    add("spider-2-2-2-2", spider({2, 2, 2, 2}));
    add("caterpillar", caterpillar());
    add("double-star", double_star());
    add("broom", spider({4, 1, 1, 1}));
    for (int n : {3, 4, 5, 7, 8, 9, 10}) add("cycle-" + std::to_string(n), cycle_graph(n));
    add("triangle-tail", with_pendant(with_pendant(cycle_graph(3), 0), 3));
    add("c4-pendant", with_pendant(cycle_graph(4), 0));
    add("c5-pendant", with_pendant(cycle_graph(5), 0));
    add("c7-pendant", with_pendant(cycle_graph(7), 0));
    add("c8-two-pendants", with_pendant(with_pendant(cycle_graph(8), 0), 4));
    add("c10-pendant", with_pendant(cycle_graph(10), 0));
    add("k4", complete_graph(4));
    add("wheel4", wheel_graph(4));
    add("book3", book_graph(3));
    add("book4", book_graph(4));
    add("book5", book_graph(5));
    add("bowtie", bowtie_graph());
    add("house", house_graph());
    add("kite", kite_graph());
    add("k5-minus-two-edges", fig1_graph());
    add("k23", complete_bipartite_graph(2, 3));
    add("k24", complete_bipartite_graph(2, 4));
    add("fan3", fan_graph(3));
    add("theta", theta_graph());
    add("k4-pendant", with_pendant(complete_graph(4), 0));
    add("wheel4-pendant", with_pendant(wheel_graph(4), 1));
    add("house-pendant", with_pendant(house_graph(), 2));
    add("kite-pendant", with_pendant(kite_graph(), 1));
    add("bowtie-pendant", with_pendant(bowtie_graph(), 1));
    out.push_back({"wheel-host", wheel_host_embedded(), "CONFIG_FIG2"});
    return out;
}

} // namespace toruscolor::fixtures
