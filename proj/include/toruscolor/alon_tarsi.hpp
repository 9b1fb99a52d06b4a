#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toruscolor/configs.hpp"
#include "toruscolor/graph.hpp"
#include "toruscolor/rational.hpp"

namespace toruscolor {

// An orientation of every edge of the underlying graph.
struct Orientation {
    Orientation() = default;
    Orientation(Graph g, std::vector<std::pair<int, int>> arcs);

    const Graph& graph() const { return g_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int out_degree(int v) const;
    int max_out_degree() const;
    Orientation induced(const std::vector<int>& vs) const;

  private:
    Graph g_;
    std::vector<std::pair<int, int>> arcs_; // one per edge, sorted by underlying edge
};

struct DiffResult {
    BigInt ee;   // even spanning Eulerian sub-digraphs (the empty set counts)
    BigInt oe;   // odd ones
    BigInt diff; // ee - oe
};

// Exhaustive arc-subset census with balance pruning.
DiffResult eulerian_census(const Orientation& d, int arc_bound = 24);

bool is_at_orientation(const Orientation& d, int arc_bound = 24);

// Least k admitting an orientation with max out-degree <= k-1 and diff != 0.
int alon_tarsi_number(const Graph& g, int edge_bound = 16);
std::pair<int, Orientation> alon_tarsi_number_witness(const Graph& g, int edge_bound = 16);

// Requires {x1, x2} to partition the vertices with every cross arc running x1 -> x2.
// Returns whether is_at(d) agrees with is_at(d[x1]) && is_at(d[x2]).
bool lemma_L_check(const Orientation& d, const std::vector<int>& x1, const std::vector<int>& x2);

// Orientation of a configuration's interior plus reserved out-arc stubs toward
// the rest of a host graph (stub count = 4 - degree inside the configuration).
struct ReducibleOrientation {
    ConfigurationId config;
    std::vector<std::pair<int, int>> arcs; // on pattern vertex ids
    std::vector<int> stubs;                // per pattern vertex
};

// The shipped constants for the three configurations.
ReducibleOrientation reducible_orientation(ConfigurationId id);

// diff != 0 on the interior and out_degree + stubs <= 3 at every pattern vertex.
bool verify_reducible_orientation(const ReducibleOrientation& r);

// Host orientation: gamma must induce the configuration of r (induced isomorphism,
// no degree constraint here); interior arcs follow r through the first such
// isomorphism, all gamma/rest edges run gamma -> rest, the rest follows d_rest.
Orientation extend_at_orientation(const Graph& g, const std::vector<int>& gamma,
                                  const Orientation& d_rest, const ReducibleOrientation& r);

} // namespace toruscolor
