#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "toruscolor/embedding.hpp"
#include "toruscolor/graph.hpp"

namespace toruscolor::fixtures {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph star_graph(int leaves);
Graph wheel_graph(int rim);
Graph book_graph(int pages);
Graph fan_graph(int rim); // hub 0 plus a path on rim+1 vertices, all spokes
Graph theta_graph();      // hubs 0,1 joined by paths through 2, 3, and 4-5
Graph petersen_graph();
Graph cube_graph();
Graph octahedron_graph();
Graph bowtie_graph();
Graph house_graph(); // 4-cycle 0-1-2-3 plus apex 4 adjacent to 0,1
Graph kite_graph();  // 4-cycle 0-1-2-3 plus chord 0-2
Graph fig1_graph();  // 5-cycle plus chords {4,2}, {2,0}, {0,3}

// 4-regular, 40 vertices: eight 4-wheels, rims cross-wired so the graph has
// no 6-cycle and no five vertices inducing 9+ edges; hub of wheel w is 5w
Graph wheel_host_graph();
// genus-1 rotation of the wheel host: 32 triangles and 8 octagons
EmbeddedGraph wheel_host_embedded();

EmbeddedGraph k7_torus();    // 14 triangles, genus 1
EmbeddedGraph c4xc4_torus(); // 4x4 grid on the torus, 16 quadrilaterals

// first rotation in odometer order (rot[v][0] pinned to the least neighbor)
// whose traced embedding satisfies pred; throws when the space exceeds cap
// or no rotation qualifies
EmbeddedGraph embed_search(const Graph& g,
                           const std::function<bool(const EmbeddedGraph&)>& pred,
                           long long cap = 2'000'000);
EmbeddedGraph embed_genus_le(const Graph& g, int max_genus);

bool cyclic_window(const std::vector<int>& pattern, const std::vector<int>& window);
bool cyclic_equal(const std::vector<int>& pattern, const std::vector<int>& target);

// embedded graph whose detectors-only scan contains the given item
EmbeddedGraph lemma_fixture(const std::string& item);
const std::vector<std::string>& lemma_fixture_items(); // "i".."xix", "L3.1"

std::vector<std::pair<std::string, EmbeddedGraph>> discharging_corpus();

struct TheoremCase {
    std::string name;
    EmbeddedGraph embedded;
    std::string expected_outcome;
};
std::vector<TheoremCase> theorem_corpus(); // valid inputs only, >= 50

} // namespace toruscolor::fixtures
