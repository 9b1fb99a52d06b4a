#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toruscolor/errors.hpp"

namespace toruscolor {

// Simple undirected graph over the fixed id universe [0, universe()).
// Vertices can be removed (ids stay stable, so deletion traces keep meaning);
// vertices() is the sorted list of ids still present.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int universe() const { return static_cast<int>(present_.size()); }
    int num_vertices() const { return nv_; }
    int num_edges() const { return ne_; }
    const std::vector<int>& vertices() const { return verts_; }
    bool has_vertex(int v) const { return v >= 0 && v < universe() && present_[v]; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic

    void add_edge(int u, int v);
    Graph without_vertex(int u) const;
    Graph induced(const std::vector<int>& vs) const;

    bool connected() const; // vacuously true when empty
    int min_degree() const; // error on the empty graph

  private:
    void check_vertex(int v) const;
    std::vector<char> present_;
    std::vector<std::vector<int>> adj_; // sorted
    std::vector<int> verts_;            // sorted present ids
    int nv_ = 0;
    int ne_ = 0;
};

// True iff some 5 vertices induce at least 9 edges (K5 minus at most one edge).
bool contains_k5_minus(const Graph& g);

// Cycle of exactly k distinct vertices, 3 <= k <= 8.
bool has_cycle_of_length(const Graph& g, int k);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks; // vertex sets, sorted; blocks ordered by smallest id
    std::vector<int> cut_vertices;        // sorted
};
BlockDecomposition block_decomposition(const Graph& g);

// Connected and every block induces a cycle or a complete graph.
bool is_gdp_tree(const Graph& g);

} // namespace toruscolor
