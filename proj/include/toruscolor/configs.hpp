#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toruscolor/graph.hpp"

namespace toruscolor {

enum class ConfigurationId { FIG1_K5MM, FIG2_KITE, FIG3_HOUSE };

// Pattern vertex numbering (fixed, used by reducible orientations too):
//   FIG1_K5MM: 5-cycle 0-1-2-3-4 plus chords {4,2}, {2,0}, {0,3}.
//   FIG2_KITE: 4-cycle 0-1-2-3 plus chord {0,2}.
//   FIG3_HOUSE: 4-cycle 0-1-2-3 plus apex 4 adjacent to 0 and 1.
Graph configuration_graph(ConfigurationId id);

std::string configuration_name(ConfigurationId id); // "fig1" / "fig2" / "fig3"
std::optional<ConfigurationId> configuration_from_name(const std::string& name);

// Lexicographically least mapping pattern-vertex -> host-vertex such that the
// image is an induced copy of the pattern and every image vertex has host
// degree exactly 4. none if no such mapping exists.
std::optional<std::vector<int>> find_induced_configuration(const Graph& g, ConfigurationId id);

} // namespace toruscolor
