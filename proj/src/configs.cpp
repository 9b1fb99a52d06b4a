#include "toruscolor/configs.hpp"

#include <algorithm>

namespace toruscolor {

Graph configuration_graph(ConfigurationId id) {
    switch (id) {
    case ConfigurationId::FIG1_K5MM:
        return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 2}, {2, 0}, {0, 3}});
    case ConfigurationId::FIG2_KITE:
        return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    case ConfigurationId::FIG3_HOUSE:
        return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
    }
    throw input_error("unknown configuration id");
}

std::string configuration_name(ConfigurationId id) {
    switch (id) {
    case ConfigurationId::FIG1_K5MM: return "fig1";
    case ConfigurationId::FIG2_KITE: return "fig2";
    case ConfigurationId::FIG3_HOUSE: return "fig3";
    }
    throw input_error("unknown configuration id");
}

std::optional<ConfigurationId> configuration_from_name(const std::string& name) {
    if (name == "fig1") return ConfigurationId::FIG1_K5MM;
    if (name == "fig2") return ConfigurationId::FIG2_KITE;
    if (name == "fig3") return ConfigurationId::FIG3_HOUSE;
    return std::nullopt;
}

namespace {

// Backtracking over pattern vertices in id order; host candidates ascending,
// so the first complete assignment is the lexicographically least mapping.
bool extend_mapping(const Graph& pattern, const Graph& host, const std::vector<int>& cand,
                    std::vector<int>& map, std::vector<char>& used, int next) {
    if (next == pattern.universe()) return true;
    for (int h : cand) {
        if (used[h]) continue;
        bool ok = true;
        for (int p = 0; p < next && ok; ++p)
            if (pattern.has_edge(p, next) != host.has_edge(map[p], h)) ok = false;
        if (!ok) continue;
        map[next] = h;
        used[h] = 1;
        if (extend_mapping(pattern, host, cand, map, used, next + 1)) return true;
        used[h] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_induced_configuration(const Graph& g, ConfigurationId id) {
    Graph pattern = configuration_graph(id);
    std::vector<int> cand;
    for (int v : g.vertices())
        if (g.degree(v) == 4) cand.push_back(v);
    if (static_cast<int>(cand.size()) < pattern.universe()) return std::nullopt;
    std::vector<int> map(pattern.universe(), -1);
    std::vector<char> used(g.universe(), 0);
    if (extend_mapping(pattern, g, cand, map, used, 0)) return map;
    return std::nullopt;
}

} // namespace toruscolor
