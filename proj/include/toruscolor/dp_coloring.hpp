#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toruscolor/graph.hpp"

namespace toruscolor {

// Partial matching between the lists of the two ends of a base edge.
struct CoverMatching {
    std::pair<int, int> edge;                  // base edge (u, v), u < v
    std::vector<std::pair<int, int>> pairs;    // (i, j): (u, i) matched to (v, j); 0-based
};

// Lists L(v) = {(v, 0), ..., (v, s_v - 1)} plus one matching per base edge.
struct Cover {
    Graph base;
    std::vector<int> list_sizes;               // indexed by vertex id
    std::vector<CoverMatching> matchings;

    void validate() const;                     // input_error on malformed matchings
    // conflict lookup: chosen (u, i) and (v, j) clash iff matched on edge {u, v}
    bool conflicts(int u, int i, int v, int j) const;
};

// f values on cover vertices, each in {0, 1, 2}; f[v][i] for cover vertex (v, i).
using CoverDegFunction = std::vector<std::vector<int>>;

// Transversal: one chosen index per base vertex. Independent transversal of the
// cover, lexicographically least, or none.
std::optional<std::vector<int>> dp_color(const Cover& c);

bool transversal_independent(const Cover& c, const std::vector<int>& choice);

// Chosen cover vertices induce (via matching edges) a strictly f-degenerate
// subgraph: every nonempty subgraph has a vertex with internal degree < f.
bool strictly_f_degenerate_choice(const Cover& c, const CoverDegFunction& f,
                                  const std::vector<int>& choice);

std::optional<std::vector<int>> strictly_f_degenerate_transversal(const Cover& c,
                                                                  const CoverDegFunction& f);

// Proper coloring with colors from the given lists, lexicographically least.
std::optional<std::vector<int>> is_L_colorable(const Graph& g,
                                               const std::vector<std::vector<int>>& lists);

// Partition into at most k parts, each inducing a forest; none if impossible.
std::optional<std::vector<std::vector<int>>> vertex_arboricity_at_most(const Graph& g, int k);

// Exact small-scale oracles.
int chromatic_number(const Graph& g);
// Exhausts covers with the given uniform list size, one perfect matching per
// edge (partial matchings are dominated by perfect ones). Tiny graphs only.
int dp_chromatic_number(const Graph& g, int max_k = 6);
bool is_k_choosable(const Graph& g, int k); // exhausts lists over a k*n color universe

// The cover whose matchings identify equal colors of the given lists.
Cover straight_cover(const Graph& g, const std::vector<std::vector<int>>& lists);

} // namespace toruscolor
