#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toruscolor/graph.hpp"

namespace toruscolor {

// f is indexed by vertex id over g.universe(); entries for removed ids are ignored.
using DegFunction = std::vector<int>;

enum class OpKind { Delete, DeleteSave };

struct Operation {
    OpKind kind;
    int u;
    int w = -1; // DeleteSave target, -1 for Delete
    bool operator==(const Operation&) const = default;
};

using OperationTrace = std::vector<Operation>;

// Remove u, decrement f on its neighbors; legal iff the result stays nonnegative.
std::optional<std::pair<Graph, DegFunction>> apply_delete(const Graph& g, const DegFunction& f, int u);

// Remove u sparing neighbor w; legal iff f(u) > f(w) and the result stays nonnegative.
std::optional<std::pair<Graph, DegFunction>> apply_delete_save(const Graph& g, const DegFunction& f,
                                                               int u, int w);

// Exhaustive memoized search. Returns the lexicographically least witness trace
// under the canonical branch order (by u, then Delete before DeleteSave, then w),
// or none. Instances above vertex_bound raise bound_exceeded.
std::optional<OperationTrace> is_weakly_f_degenerate(const Graph& g, const DegFunction& f,
                                                     int vertex_bound = 14);

// Least d such that the constant function d admits a removal trace.
int weak_degeneracy(const Graph& g, int vertex_bound = 14);

// Classic peeling number (repeatedly remove a minimum-degree vertex, smallest id first).
int degeneracy(const Graph& g);

// Replays t from (g, f); true iff every op is legal and the graph ends empty.
bool verify_trace(const Graph& g, const DegFunction& f, const OperationTrace& t);

// Precondition: every u in u_set has degree_g(u) == h(u) (error otherwise).
// True iff every component of g[u_set] is a GDP-tree.
bool gallai_weak_check(const Graph& g, const DegFunction& h, const std::vector<int>& u_set);

} // namespace toruscolor
