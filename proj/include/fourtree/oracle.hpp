#pragma once

#include <optional>
#include <vector>

#include "fourtree/graph.hpp"

namespace fourtree {

// Exhaustive reference searches, used to cross-check the solver. All of
// them enumerate connected induced subgraphs anchored at the smallest
// required vertex (each candidate set visited exactly once), pruned by
// the size of the best candidate so far.

// Smallest vertex set containing every required vertex such that it
// induces a tree; nullopt if none exists. At most max_extra vertices
// beyond the required ones are allowed. Graphs over 24 vertices are
// refused. The one-argument-less overload places no extra-vertex cap.
std::optional<InducedTree> brute_force_tree(const Graph& g, const std::vector<Vertex>& required,
                                            int max_extra);
std::optional<InducedTree> brute_force_tree(const Graph& g, const std::vector<Vertex>& required);

// Same search, but the tree may contain at most one vertex of
// tree-degree >= 3. Limit: 20 vertices.
std::optional<InducedTree> brute_force_centered_tree(const Graph& g,
                                                     const std::vector<Vertex>& required);

// A vertex set inducing a cycle through both x and y (x != y), or
// nullopt. Limit: 20 vertices.
std::optional<VertexSet> brute_force_two_in_cycle(const Graph& g, Vertex x, Vertex y);

}  // namespace fourtree
