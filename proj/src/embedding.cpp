#include "toruscolor/embedding.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace toruscolor {

int EmbeddedGraph::face_of_arc(int u, int v) const {
    auto it = arc_face.find({u, v});
    if (it == arc_face.end())
        throw input_error("no arc " + std::to_string(u) + "->" + std::to_string(v));
    return it->second;
}

std::pair<int, int> EmbeddedGraph::faces_at_edge(int u, int v) const {
    return {face_of_arc(u, v), face_of_arc(v, u)};
}

int EmbeddedGraph::rotation_position(int v, int u) const {
    const auto& r = rot.rot[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == u) return i;
    throw input_error("vertex " + std::to_string(u) + " not in rotation of " + std::to_string(v));
}

namespace {

void canonical_rotate(Face& f) {
    auto best = std::min_element(f.arcs.begin(), f.arcs.end());
    std::rotate(f.arcs.begin(), best, f.arcs.end());
}

} // namespace

EmbeddedGraph trace_faces(const Graph& g, const RotationSystem& rot) {
    if (rot.n != g.universe() || static_cast<int>(rot.rot.size()) != g.universe())
        throw input_error("rotation system size does not match the graph");
    for (int v : g.vertices()) {
        std::vector<int> a = rot.rot[v], b = g.neighbors(v);
        std::sort(a.begin(), a.end());
        if (a != b)
            throw input_error("rotation at vertex " + std::to_string(v) +
                              " is not a permutation of its neighbors");
    }
    if (!g.connected()) throw input_error("embedding requires a connected graph");

    EmbeddedGraph e;
    e.g = g;
    e.rot = rot;

    std::map<std::pair<int, int>, std::pair<int, int>> next; // arc -> successor arc
    for (int v : g.vertices()) {
        const auto& r = rot.rot[v];
        int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i)
            next[{r[i], v}] = {v, r[(i + 1) % d]};
    }

    std::set<std::pair<int, int>> seen;
    std::vector<Face> faces;
    for (const auto& [arc, succ] : next) {
        if (seen.count(arc)) continue;
        Face f;
        auto cur = arc;
        do {
            f.arcs.push_back(cur);
            seen.insert(cur);
            cur = next.at(cur);
        } while (cur != arc);
        canonical_rotate(f);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.arcs < b.arcs; });
    e.faces = std::move(faces);

    for (int i = 0; i < static_cast<int>(e.faces.size()); ++i)
        for (auto arc : e.faces[i].arcs) e.arc_face[arc] = i;

    int euler = g.num_vertices() - g.num_edges() + static_cast<int>(e.faces.size());
    if ((2 - euler) % 2 != 0 || euler > 2)
        throw input_error("rotation system traces to a non-orientable characteristic");
    e.genus = (2 - euler) / 2;
    return e;
}

EmbeddedGraph trace_faces(const RotationSystem& rot) {
    Graph g(rot.n);
    for (int v = 0; v < rot.n; ++v)
        for (int u : rot.rot[v]) {
            if (u < 0 || u >= rot.n) throw input_error("rotation mentions unknown vertex");
            if (v < u) g.add_edge(v, u);
        }
    return trace_faces(g, rot);
}

std::vector<int> vertex_face_pattern(const EmbeddedGraph& e, int v) {
    if (!e.g.has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
    std::vector<int> pat;
    for (int u : e.rot.rot[v]) pat.push_back(e.faces[e.face_of_arc(v, u)].degree());
    return pat;
}

namespace {

// slots are (lo, hi) bounds; all rotations and both directions
bool pattern_window(const std::vector<int>& pat, const std::vector<std::pair<int, int>>& slots) {
    int n = static_cast<int>(pat.size());
    int k = static_cast<int>(slots.size());
    if (n < k) return false;
    for (int dir : {1, -1})
        for (int s = 0; s < n; ++s) {
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int x = pat[((s + dir * j) % n + n) % n];
                if (x < slots[j].first || x > slots[j].second) ok = false;
            }
            if (ok) return true;
        }
    return false;
}

constexpr int kInf = 1 << 28;

} // namespace

VertexClass classify_pattern(const std::vector<int>& pattern) {
    if (pattern.size() != 4) return VertexClass::NOT_A_4_VERTEX;
    if (pattern_window(pattern, {{3, 3}, {3, 3}, {3, 3}, {3, kInf}})) return VertexClass::BAD;
    if (pattern_window(pattern, {{3, 3}, {3, 3}, {4, 4}, {6, kInf}})) return VertexClass::SPECIAL;
    return VertexClass::GOOD;
}

VertexClass classify_4_vertex(const EmbeddedGraph& e, int v) {
    if (e.g.degree(v) != 4) return VertexClass::NOT_A_4_VERTEX;
    return classify_pattern(vertex_face_pattern(e, v));
}

FaceAdjacencyKind faces_adjacency(const EmbeddedGraph& e, int f1, int f2) {
    int nf = static_cast<int>(e.faces.size());
    if (f1 < 0 || f1 >= nf || f2 < 0 || f2 >= nf) throw input_error("face index out of range");
    if (f1 == f2) return FaceAdjacencyKind::NOT_ADJACENT;
    std::set<std::pair<int, int>> e1, e2;
    std::set<int> v1, v2;
    for (auto [u, v] : e.faces[f1].arcs) {
        e1.insert(std::minmax(u, v));
        v1.insert(u);
    }
    for (auto [u, v] : e.faces[f2].arcs) {
        e2.insert(std::minmax(u, v));
        v2.insert(u);
    }
    std::vector<std::pair<int, int>> shared_edges;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                          std::back_inserter(shared_edges));
    if (shared_edges.empty()) return FaceAdjacencyKind::NOT_ADJACENT;
    std::vector<int> shared_verts;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                          std::back_inserter(shared_verts));
    if (shared_edges.size() == 1 && shared_verts.size() == 2)
        return FaceAdjacencyKind::NORMALLY_ADJACENT;
    return FaceAdjacencyKind::ADJACENT;
}

int EmbeddingStats::m_at_least(int v, int i) const {
    int total = 0;
    for (const auto& [deg, cnt] : m[v])
        if (deg >= i) total += cnt;
    return total;
}

EmbeddingStats embedding_stats(const EmbeddedGraph& e) {
    int nu = e.g.universe();
    int nf = static_cast<int>(e.faces.size());
    EmbeddingStats st;
    st.m.resize(nu);
    st.n.resize(nf);
    st.s.assign(nf, 0);
    st.n4.assign(nf, 0);
    st.n5p.assign(nf, 0);
    st.n4b.assign(nu, 0);
    st.vclass.assign(nu, VertexClass::NOT_A_4_VERTEX);

    for (int v : e.g.vertices()) {
        st.vclass[v] = classify_4_vertex(e, v);
        for (int deg : vertex_face_pattern(e, v)) ++st.m[v][deg];
    }
    for (int i = 0; i < nf; ++i) {
        int fd = e.faces[i].degree();
        (void)fd;
        for (auto [u, v] : e.faces[i].arcs) {
            int d = e.g.degree(u);
            ++st.n[i][d];
            if (d == 4) ++st.n4[i];
            if (d >= 5) ++st.n5p[i];
            if (st.vclass[u] == VertexClass::SPECIAL) ++st.s[i];
        }
    }
    for (int v : e.g.vertices())
        for (int w : e.g.neighbors(v))
            if (st.vclass[w] == VertexClass::BAD) ++st.n4b[v];
    return st;
}

} // namespace toruscolor
