#pragma once

#include <map>
#include <utility>
#include <vector>

#include "toruscolor/graph.hpp"

namespace toruscolor {

// Cyclic neighbor order around every vertex (combinatorial embedding on an
// orientable surface).
struct RotationSystem {
    int n = 0;
    std::vector<std::vector<int>> rot;
};

// Closed boundary walk, stored as arcs (tail, head). degree = walk length;
// every occurrence of a vertex on the walk is one corner of that vertex.
struct Face {
    std::vector<std::pair<int, int>> arcs;
    int degree() const { return static_cast<int>(arcs.size()); }
};

class EmbeddedGraph {
  public:
    Graph g;
    RotationSystem rot;
    std::vector<Face> faces; // canonical deterministic order
    int genus = 0;

    int face_of_arc(int u, int v) const; // face owning the arc u->v
    // faces on the two sides of edge {u, v} (may coincide)
    std::pair<int, int> faces_at_edge(int u, int v) const;
    int rotation_position(int v, int u) const; // index of u in rot[v]

    std::map<std::pair<int, int>, int> arc_face; // filled by trace_faces
};

// Walks every arc once: the successor of arc (u, v) is (v, next neighbor after
// u in the rotation at v). Validates the rotation against the adjacency lists,
// requires a connected graph, derives the genus from the Euler formula.
EmbeddedGraph trace_faces(const Graph& g, const RotationSystem& rot);

// Convenience: adjacency implied by the rotation lists themselves.
EmbeddedGraph trace_faces(const RotationSystem& rot);

// Face degrees at the corners of v, in rotation order: entry j is the degree of
// the face containing the arc (v, rot[v][j]).
std::vector<int> vertex_face_pattern(const EmbeddedGraph& e, int v);

enum class VertexClass { BAD, SPECIAL, GOOD, NOT_A_4_VERTEX };

// BAD: pattern (3,3,3,3+); SPECIAL: pattern (3,3,4,6+); both up to rotation and
// reflection. GOOD: any other 4-vertex.
VertexClass classify_pattern(const std::vector<int>& pattern);
VertexClass classify_4_vertex(const EmbeddedGraph& e, int v);

enum class FaceAdjacencyKind { NOT_ADJACENT, ADJACENT, NORMALLY_ADJACENT };

// ADJACENT: boundaries share an edge. NORMALLY_ADJACENT: the boundary subgraphs
// intersect in exactly one edge and its two endpoints.
FaceAdjacencyKind faces_adjacency(const EmbeddedGraph& e, int f1, int f2);

struct EmbeddingStats {
    // m[v][i]: corners of v on i-faces (faces counted with corner multiplicity)
    std::vector<std::map<int, int>> m;
    // n[f][j]: occurrences of degree-j vertices on the boundary walk of face f
    std::vector<std::map<int, int>> n;
    std::vector<int> s;    // special-vertex occurrences per face
    std::vector<int> n4;   // 4-vertex occurrences per face
    std::vector<int> n5p;  // 5+-vertex occurrences per face
    std::vector<int> n4b;  // bad 4-vertices adjacent to v (graph adjacency)
    std::vector<VertexClass> vclass;

    int m_at_least(int v, int i) const; // sum of m[v][j] for j >= i
};

EmbeddingStats embedding_stats(const EmbeddedGraph& e);

} // namespace toruscolor
