#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toruscolor/configs.hpp"
#include "toruscolor/embedding.hpp"

namespace toruscolor {

enum class TheoremOutcomeKind {
    MIN_DEGREE_LE_3,
    CONFIG_FIG1,
    CONFIG_FIG2,
    CONFIG_FIG3,
    COUNTEREXAMPLE,
};

std::string outcome_name(TheoremOutcomeKind k);

struct TheoremOutcome {
    TheoremOutcomeKind kind = TheoremOutcomeKind::COUNTEREXAMPLE;
    int witness_vertex = -1;          // a minimum-degree vertex, when that outcome fires
    std::vector<int> witness_mapping; // pattern images, when a configuration fires
};

// Named failures of: connected, genus <= 1, no K5 minus an edge, no 6-cycle.
// include_min_degree adds the minimum-degree-4 requirement of the local lemmas.
std::vector<std::string> hypothesis_violations(const EmbeddedGraph& e,
                                               bool include_min_degree = false);

// Outcomes probed in a fixed order: minimum degree <= 3, then the three
// configurations. COUNTEREXAMPLE only when everything else fails, which the
// structure theorem rules out on inputs satisfying its hypotheses.
// Hypothesis failures throw hypothesis_error, they are not outcomes.
TheoremOutcome check_theorem(const EmbeddedGraph& e, bool verify_hypotheses = true);

struct LemmaViolation {
    std::string item; // "i".."xix" or "L3.1"
    std::vector<int> witness_vertices;
    std::vector<int> witness_faces;
};

bool operator==(const LemmaViolation& a, const LemmaViolation& b);

// Runs every local-structure detector and returns all violations, sorted by
// item then witnesses. Empty on inputs satisfying the lemma's hypotheses.
std::vector<LemmaViolation> lemma_scan(const EmbeddedGraph& e, bool verify_hypotheses = true);

// Not-necessarily-induced embedding of the house pattern with every image of
// degree exactly 4; lexicographically least image tuple.
std::optional<std::vector<int>> find_house_subgraph(const Graph& g);

} // namespace toruscolor
