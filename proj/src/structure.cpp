#include "toruscolor/structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "toruscolor/errors.hpp"

namespace toruscolor {

std::string outcome_name(TheoremOutcomeKind k) {
    switch (k) {
    case TheoremOutcomeKind::MIN_DEGREE_LE_3: return "MIN_DEGREE_LE_3";
    case TheoremOutcomeKind::CONFIG_FIG1: return "CONFIG_FIG1";
    case TheoremOutcomeKind::CONFIG_FIG2: return "CONFIG_FIG2";
    case TheoremOutcomeKind::CONFIG_FIG3: return "CONFIG_FIG3";
    case TheoremOutcomeKind::COUNTEREXAMPLE: return "COUNTEREXAMPLE";
    }
    return "";
}

std::vector<std::string> hypothesis_violations(const EmbeddedGraph& e, bool include_min_degree) {
    std::vector<std::string> out;
    if (!e.g.connected()) out.push_back("graph is not connected");
    if (e.genus > 1) out.push_back("embedding genus exceeds 1");
    if (contains_k5_minus(e.g)) out.push_back("graph contains K5 minus an edge");
    if (has_cycle_of_length(e.g, 6)) out.push_back("graph contains a 6-cycle");
    if (include_min_degree && e.g.num_vertices() > 0 && e.g.min_degree() < 4)
        out.push_back("minimum degree below 4");
    return out;
}

TheoremOutcome check_theorem(const EmbeddedGraph& e, bool verify_hypotheses) {
    if (verify_hypotheses) {
        auto bad = hypothesis_violations(e, false);
        if (!bad.empty()) throw hypothesis_error(bad);
    }
    TheoremOutcome out;
    for (int v : e.g.vertices())
        if (e.g.degree(v) <= 3) {
            out.kind = TheoremOutcomeKind::MIN_DEGREE_LE_3;
            out.witness_vertex = v;
            return out;
        }
    const std::array<std::pair<ConfigurationId, TheoremOutcomeKind>, 3> probes = {{
        {ConfigurationId::FIG1_K5MM, TheoremOutcomeKind::CONFIG_FIG1},
        {ConfigurationId::FIG2_KITE, TheoremOutcomeKind::CONFIG_FIG2},
        {ConfigurationId::FIG3_HOUSE, TheoremOutcomeKind::CONFIG_FIG3},
    }};
    for (auto [id, kind] : probes)
        if (auto m = find_induced_configuration(e.g, id)) {
            out.kind = kind;
            out.witness_mapping = *m;
            return out;
        }
    out.kind = TheoremOutcomeKind::COUNTEREXAMPLE;
    return out;
}

bool operator==(const LemmaViolation& a, const LemmaViolation& b) {
    return a.item == b.item && a.witness_vertices == b.witness_vertices &&
           a.witness_faces == b.witness_faces;
}

namespace {

constexpr int kAny = 1 << 28;

const std::vector<std::string> kRoman = {"i",    "ii",  "iii", "iv",  "v",     "vi",  "vii",
                                         "viii", "ix",  "x",   "xi",  "xii",   "xiii", "xiv",
                                         "xv",   "xvi", "xvii", "xviii", "xix", "L3.1"};

int item_rank(const std::string& item) {
    for (size_t i = 0; i < kRoman.size(); ++i)
        if (kRoman[i] == item) return static_cast<int>(i);
    return static_cast<int>(kRoman.size());
}

// consecutive corner positions around v whose face degrees fit the slots;
// both traversal directions, all starts
std::vector<std::vector<int>> corner_alignments(const EmbeddedGraph& e, int v,
                                                const std::vector<std::pair<int, int>>& slots,
                                                bool exact_degree) {
    std::vector<int> pat = vertex_face_pattern(e, v);
    const int d = static_cast<int>(pat.size());
    const int l = static_cast<int>(slots.size());
    std::vector<std::vector<int>> out;
    if (exact_degree ? d != l : d < l) return out;
    for (int s = 0; s < d; ++s)
        for (int dir : {1, -1}) {
            std::vector<int> pos(l);
            bool ok = true;
            for (int i = 0; i < l && ok; ++i) {
                int p = ((s + dir * i) % d + d) % d;
                pos[i] = p;
                ok = slots[i].first <= pat[p] && pat[p] <= slots[i].second;
            }
            if (ok) out.push_back(pos);
        }
    return out;
}

int face_at_corner(const EmbeddedGraph& e, int v, int pos) {
    return e.face_of_arc(v, e.rot.rot[v][pos]);
}

// corner pos of v lies between these two neighbors in the rotation
std::pair<int, int> corner_neighbors(const EmbeddedGraph& e, int v, int pos) {
    const auto& r = e.rot.rot[v];
    int d = static_cast<int>(r.size());
    return {r[(pos - 1 + d) % d], r[pos]};
}

int shared_neighbor(const EmbeddedGraph& e, int v, int corner_a, int corner_b) {
    int d = static_cast<int>(e.rot.rot[v].size());
    if ((corner_a + 1) % d == corner_b) return e.rot.rot[v][corner_a];
    if ((corner_b + 1) % d == corner_a) return e.rot.rot[v][corner_b];
    throw input_error("corners are not cyclically adjacent");
}

int other_face_at_edge(const EmbeddedGraph& e, int face, int a, int b) {
    auto [f1, f2] = e.faces_at_edge(a, b);
    return f1 == face ? f2 : f1;
}

std::vector<int> face_tails(const Face& f) {
    std::vector<int> out;
    out.reserve(f.arcs.size());
    for (const auto& [t, _] : f.arcs) out.push_back(t);
    return out;
}

struct Scan {
    const EmbeddedGraph& e;
    const EmbeddingStats& st;
    std::vector<LemmaViolation> found;

    void emit(const std::string& item, std::vector<int> vs, std::vector<int> fs) {
        found.push_back({item, std::move(vs), std::move(fs)});
    }

    std::vector<int> sorted_faces(int v, const std::vector<int>& positions) {
        std::vector<int> fs;
        for (int p : positions) fs.push_back(face_at_corner(e, v, p));
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        return fs;
    }

    // (i): no vertex of degree >= 5 has four consecutive triangle corners
    void item_i() {
        std::vector<std::pair<int, int>> slots = {{3, 3}, {3, 3}, {3, 3}, {3, 3}, {3, kAny}};
        for (int v : e.g.vertices())
            for (const auto& a : corner_alignments(e, v, slots, false))
                emit("i", {v}, sorted_faces(v, {a[0], a[1], a[2], a[3]}));
    }

    // (ii): a 3-face on edge (w_j, w_{j+1}) of a 5-face has third vertex w_{j+3}
    void item_ii() {
        for (size_t fi = 0; fi < e.faces.size(); ++fi) {
            const Face& f = e.faces[fi];
            if (f.degree() != 5) continue;
            auto w = face_tails(f);
            for (int j = 0; j < 5; ++j) {
                int a = w[j], b = w[(j + 1) % 5];
                int ti = e.face_of_arc(b, a);
                if (ti == static_cast<int>(fi) || e.faces[ti].degree() != 3) continue;
                int expected = w[(j + 3) % 5];
                for (int x : face_tails(e.faces[ti]))
                    if (x != a && x != b && x != expected)
                        emit("ii", {x}, {static_cast<int>(fi), ti});
            }
        }
    }

    // (iii): an adjacent 3-face / 4-face pair must be normally adjacent
    void item_iii() {
        for (size_t t = 0; t < e.faces.size(); ++t) {
            if (e.faces[t].degree() != 3) continue;
            for (size_t q = 0; q < e.faces.size(); ++q) {
                if (e.faces[q].degree() != 4) continue;
                if (faces_adjacency(e, static_cast<int>(t), static_cast<int>(q)) ==
                    FaceAdjacencyKind::ADJACENT)
                    emit("iii", {}, {static_cast<int>(t), static_cast<int>(q)});
            }
        }
    }

    // (iv): a 6-face boundary consists of two triangles; a once-visited middle
    // vertex forces the chord between its walk neighbors
    void item_iv() {
        for (size_t fi = 0; fi < e.faces.size(); ++fi) {
            const Face& f = e.faces[fi];
            if (f.degree() != 6) continue;
            auto w = face_tails(f);
            bool two_triangles = false;
            for (int j = 0; j < 6 && !two_triangles; ++j) {
                if (w[j] != w[(j + 3) % 6]) continue;
                std::set<int> t1 = {w[j], w[(j + 1) % 6], w[(j + 2) % 6]};
                std::set<int> t2 = {w[(j + 3) % 6], w[(j + 4) % 6], w[(j + 5) % 6]};
                if (t1.size() == 3 && t2.size() == 3) two_triangles = true;
            }
            if (!two_triangles) emit("iv", {}, {static_cast<int>(fi)});
            for (int j = 0; j < 6; ++j) {
                int y = w[j];
                if (std::count(w.begin(), w.end(), y) != 1) continue;
                int x = w[(j + 5) % 6], z = w[(j + 1) % 6];
                if (x != z && !e.g.has_edge(x, z)) {
                    std::vector<int> vs = {x, y, z};
                    std::sort(vs.begin(), vs.end());
                    emit("iv", vs, {static_cast<int>(fi)});
                }
            }
        }
    }

    // (v): 4-faces [a b x3 x4], [a b y3 y4] on a shared edge overlap in exactly
    // one of {x3, x4} vs {y3, y4}; a fresh y4 forces y3 = x4
    void item_v() {
        for (auto [a, b] : e.g.edges()) {
            int fa = e.face_of_arc(a, b), fb = e.face_of_arc(b, a);
            if (fa == fb) continue;
            if (e.faces[fa].degree() != 4 || e.faces[fb].degree() != 4) continue;
            std::vector<int> vs = {a, b};
            std::vector<int> fs = {std::min(fa, fb), std::max(fa, fb)};
            for (int inst = 0; inst < 2; ++inst) {
                int u = inst == 0 ? a : b, w = inst == 0 ? b : a;
                int fx = e.face_of_arc(u, w), fy = e.face_of_arc(w, u);
                auto tx = face_tails(e.faces[fx]);
                auto ty = face_tails(e.faces[fy]);
                int i = 0, j = 0;
                while (i < 4 && !(tx[i] == u && tx[(i + 1) % 4] == w)) ++i;
                while (j < 4 && !(ty[j] == w && ty[(j + 1) % 4] == u)) ++j;
                if (i == 4 || j == 4) throw input_error("face walk lost its own arc");
                int x3 = tx[(i + 2) % 4], x4 = tx[(i + 3) % 4];
                int y3 = ty[(j + 3) % 4], y4 = ty[(j + 2) % 4];
                if (inst == 0) {
                    int common = (x3 == y3 || x3 == y4) + (x4 == y3 || x4 == y4);
                    if (common != 1) emit("v", vs, fs);
                }
                if (y4 != u && y4 != w && y4 != x3 && y4 != x4 && y3 != x4) emit("v", vs, fs);
            }
        }
    }

    void forbidden_window(const std::string& item,
                          const std::vector<std::pair<int, int>>& slots, bool exact) {
        for (int v : e.g.vertices())
            for (const auto& a : corner_alignments(e, v, slots, exact))
                emit(item, {v}, sorted_faces(v, a));
    }

    // (x): a 4-face carries at most one special corner
    void item_x() {
        for (size_t fi = 0; fi < e.faces.size(); ++fi) {
            if (e.faces[fi].degree() != 4 || st.s[fi] <= 1) continue;
            std::vector<int> vs;
            for (int t : face_tails(e.faces[fi]))
                if (st.vclass[t] == VertexClass::SPECIAL) vs.push_back(t);
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            emit("x", vs, {static_cast<int>(fi)});
        }
    }

    // (xi): around a (3,4,5+,4)-vertex neither 4-face has a special corner
    void item_xi() {
        std::vector<std::pair<int, int>> slots = {{3, 3}, {4, 4}, {5, kAny}, {4, 4}};
        for (int v : e.g.vertices())
            for (const auto& a : corner_alignments(e, v, slots, true))
                for (int p : {a[1], a[3]}) {
                    int fi = face_at_corner(e, v, p);
                    for (int t : face_tails(e.faces[fi]))
                        if (st.vclass[t] == VertexClass::SPECIAL) emit("xi", {v, t}, {fi});
                }
    }

    // (xii): every triangle corner of a (3,3,3,3)-vertex meets a 7+-face
    // across its outer edge
    void item_xii() {
        std::vector<std::pair<int, int>> slots(4, {3, 3});
        for (int v : e.g.vertices()) {
            if (corner_alignments(e, v, slots, true).empty()) continue;
            for (int c = 0; c < 4; ++c) {
                int fi = face_at_corner(e, v, c);
                auto [a, b] = corner_neighbors(e, v, c);
                int other = other_face_at_edge(e, fi, a, b);
                if (e.faces[other].degree() < 7) emit("xii", {v}, {fi, other});
            }
        }
    }

    // (xiii): a (3,3,3,k)-vertex with k >= 4 needs k >= 6, outer edges of its
    // triangles on 6+-faces, and on 7+-faces when k = 6
    void item_xiii() {
        std::vector<std::pair<int, int>> slots = {{3, 3}, {3, 3}, {3, 3}, {4, kAny}};
        for (int v : e.g.vertices())
            for (const auto& a : corner_alignments(e, v, slots, true)) {
                int k = e.faces[face_at_corner(e, v, a[3])].degree();
                if (k < 6) emit("xiii", {v}, {face_at_corner(e, v, a[3])});
                for (int idx = 0; idx < 3; ++idx) {
                    int fi = face_at_corner(e, v, a[idx]);
                    auto [x, y] = corner_neighbors(e, v, a[idx]);
                    int other = other_face_at_edge(e, fi, x, y);
                    int need = k == 6 ? 7 : 6;
                    if (e.faces[other].degree() < need)
                        emit("xiii", {v, std::min(x, y), std::max(x, y)}, {fi, other});
                }
            }
    }

    // (xiv): no two adjacent bad vertices
    void item_xiv() {
        for (auto [u, v] : e.g.edges())
            if (st.vclass[u] == VertexClass::BAD && st.vclass[v] == VertexClass::BAD)
                emit("xiv", {u, v}, {});
    }

    // (xvi): a (3,k,4,l)-vertex with k,l >= 4 has k,l != 5 and max >= 6; when
    // k = 4 neither 4-face has a special corner
    void item_xvi() {
        std::vector<std::pair<int, int>> slots = {{3, 3}, {4, kAny}, {4, 4}, {4, kAny}};
        for (int v : e.g.vertices())
            for (const auto& a : corner_alignments(e, v, slots, true)) {
                int fk = face_at_corner(e, v, a[1]), fl = face_at_corner(e, v, a[3]);
                int k = e.faces[fk].degree(), l = e.faces[fl].degree();
                if (k == 5) emit("xvi", {v}, {fk});
                if (l == 5) emit("xvi", {v}, {fl});
                if (std::max(k, l) < 6)
                    emit("xvi", {v}, {std::min(fk, fl), std::max(fk, fl)});
                if (k == 4)
                    for (int fi : {fk, face_at_corner(e, v, a[2])})
                        for (int t : face_tails(e.faces[fi]))
                            if (st.vclass[t] == VertexClass::SPECIAL) emit("xvi", {v, t}, {fi});
            }
    }

    // (xvii): a (3,3,5,k)-vertex with k >= 5 needs k >= 7; without an induced
    // fig1 the 5-face carries a 5+-vertex
    void item_xvii(bool has_fig1) {
        std::vector<std::pair<int, int>> slots = {{3, 3}, {3, 3}, {5, 5}, {5, kAny}};
        for (int v : e.g.vertices())
            for (const auto& a : corner_alignments(e, v, slots, true)) {
                int fk = face_at_corner(e, v, a[3]);
                if (e.faces[fk].degree() < 7) emit("xvii", {v}, {fk});
                if (has_fig1) continue;
                int f5 = face_at_corner(e, v, a[2]);
                bool has5 = false;
                for (int t : face_tails(e.faces[f5]))
                    if (e.g.degree(t) >= 5) has5 = true;
                if (!has5) emit("xvii", {v}, {f5});
            }
    }

    // (xviii): for a (3,4,5,4)-vertex, a degree-4 vertex shared by the 4-face
    // and the 5-face has no triangle corner at all
    void item_xviii() {
        std::vector<std::pair<int, int>> slots = {{3, 3}, {4, 4}, {5, 5}, {4, 4}};
        for (int v : e.g.vertices())
            for (const auto& a : corner_alignments(e, v, slots, true)) {
                int v3 = shared_neighbor(e, v, a[1], a[2]);
                if (e.g.degree(v3) != 4) continue;
                bool all4 = true;
                for (int d : vertex_face_pattern(e, v3))
                    if (d < 4) all4 = false;
                if (!all4)
                    emit("xviii", {v, v3},
                         {face_at_corner(e, v, a[1]), face_at_corner(e, v, a[2])});
            }
    }

    // (xix): 6+-face corners of v at least cover its bad neighbors
    void item_xix() {
        for (int v : e.g.vertices())
            if (st.m_at_least(v, 6) < st.n4b[v]) emit("xix", {v}, {});
    }
};

bool subgraph_dfs(const Graph& pattern, const Graph& host, const std::vector<int>& cands,
                  std::vector<int>& image, size_t pos) {
    if (pos == static_cast<size_t>(pattern.universe())) return true;
    for (int h : cands) {
        if (std::find(image.begin(), image.begin() + pos, h) != image.begin() + pos) continue;
        bool ok = true;
        for (size_t q = 0; q < pos && ok; ++q)
            if (pattern.has_edge(static_cast<int>(q), static_cast<int>(pos)) &&
                !host.has_edge(image[q], h))
                ok = false;
        if (!ok) continue;
        image[pos] = h;
        if (subgraph_dfs(pattern, host, cands, image, pos + 1)) return true;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_house_subgraph(const Graph& g) {
    Graph pattern = configuration_graph(ConfigurationId::FIG3_HOUSE);
    std::vector<int> cands;
    for (int v : g.vertices())
        if (g.degree(v) == 4) cands.push_back(v);
    std::vector<int> image(pattern.universe(), -1);
    if (subgraph_dfs(pattern, g, cands, image, 0)) return image;
    return std::nullopt;
}

std::vector<LemmaViolation> lemma_scan(const EmbeddedGraph& e, bool verify_hypotheses) {
    if (verify_hypotheses) {
        auto bad = hypothesis_violations(e, true);
        if (!bad.empty()) throw hypothesis_error(bad);
    }
    EmbeddingStats st = embedding_stats(e);
    Scan scan{e, st, {}};

    scan.item_i();
    scan.item_ii();
    scan.item_iii();
    scan.item_iv();
    scan.item_v();
    scan.forbidden_window("vi", {{3, 3}, {4, 4}, {3, 3}}, false);
    scan.forbidden_window("vii", {{3, 3}, {5, 5}, {3, 3}}, false);
    scan.forbidden_window("viii", {{3, 3}, {3, 3}, {4, 4}, {3, 5}}, false);
    scan.forbidden_window("ix", {{4, 4}, {4, 4}, {3, 3}, {4, 4}, {3, kAny}}, true);
    scan.item_x();
    scan.item_xi();
    scan.item_xii();
    scan.item_xiii();
    scan.item_xiv();
    scan.forbidden_window("xv", {{4, 4}, {4, 4}, {4, 4}}, false);
    scan.item_xvi();
    bool has_fig1 = find_induced_configuration(e.g, ConfigurationId::FIG1_K5MM).has_value();
    scan.item_xvii(has_fig1);
    scan.item_xviii();
    scan.item_xix();

    bool any_config = has_fig1 ||
                      find_induced_configuration(e.g, ConfigurationId::FIG2_KITE).has_value() ||
                      find_induced_configuration(e.g, ConfigurationId::FIG3_HOUSE).has_value();
    if (!any_config)
        if (auto house = find_house_subgraph(e.g)) scan.emit("L3.1", *house, {});

    auto& out = scan.found;
    std::sort(out.begin(), out.end(), [](const LemmaViolation& a, const LemmaViolation& b) {
        int ra = item_rank(a.item), rb = item_rank(b.item);
        if (ra != rb) return ra < rb;
        if (a.witness_vertices != b.witness_vertices)
            return a.witness_vertices < b.witness_vertices;
        return a.witness_faces < b.witness_faces;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace toruscolor
