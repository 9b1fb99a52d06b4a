#pragma once

#include <istream>
#include <optional>
#include <string>

#include "json.hpp"
#include "toruscolor/alon_tarsi.hpp"
#include "toruscolor/dp_coloring.hpp"
#include "toruscolor/embedding.hpp"
#include "toruscolor/graph.hpp"
#include "toruscolor/weak_degeneracy.hpp"

namespace toruscolor {

// Edge-list text: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::istream& in);
std::string edge_list_string(const Graph& g);

// graph6, optionally prefixed by ">>graph6<<". Vertex counts up to 62.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// Sniffs the ">>graph6<<" header; force_graph6 skips the sniff.
Graph read_graph_file(const std::string& path, bool force_graph6 = false);

// JSON {"n": int, "rotations": [[neighbor ids in cyclic order], ...]}
RotationSystem read_rotation_file(const std::string& path);
RotationSystem parse_rotation_json(const nlohmann::json& j);

// JSON list of {"op": "delete"|"deletesave", "u": int, "w": int?}
OperationTrace parse_trace_json(const nlohmann::json& j);
OperationTrace read_trace_file(const std::string& path);
nlohmann::ordered_json trace_to_json(const OperationTrace& t);

// First line "n m", then m lines "u > v" meaning the arc u -> v.
Orientation parse_orientation(std::istream& in);
Orientation read_orientation_file(const std::string& path);
std::string orientation_string(const Orientation& d);

// JSON {"lists": [sizes], "matchings": [{"edge": [u,v], "pairs": [[i,j],...]}],
// "f": [[...], ...] optional}. The base graph supplies the edges.
struct CoverFile {
    Cover cover;
    std::optional<CoverDegFunction> f;
};
CoverFile parse_cover_json(const nlohmann::json& j, const Graph& base);
CoverFile read_cover_file(const std::string& path, const Graph& base);

std::string read_text_file(const std::string& path); // input_error when unreadable

} // namespace toruscolor
