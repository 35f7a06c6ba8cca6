#pragma once

#include <array>

#include "fourtree/graph.hpp"

namespace fourtree {

// Claw view of a minimal induced tree whose three covered vertices have
// degree 1 in the graph: the unique degree-3 center plus the three
// paths from it to the covered vertices. Legs share only the center;
// legs[i] runs center -> i-th query vertex.
struct ClawDecomposition {
    Vertex center;
    std::array<Path, 3> legs;
};

// Induced tree covering a, b, c in a connected triangle-free graph.
// The result is inclusion-minimal (no vertex can be dropped without
// breaking tree-ness or coverage) but not necessarily minimum-size.
// Throws if the three vertices are not in one component or if the
// graph has a triangle.
InducedTree tree_covering_three(const Graph& g, Vertex a, Vertex b, Vertex c);

// Same, restricted to the induced subgraph on `allowed` (which must
// contain a, b, c). Triangle-freeness is required of that subgraph only.
InducedTree tree_covering_three(const Graph& g, Vertex a, Vertex b, Vertex c,
                                const VertexSet& allowed);

// Repeatedly deletes the lowest-id deletable leaf (a tree vertex of
// tree-degree <= 1 that is not required) until none remains. Matches a
// scan in increasing id order that restarts after every removal.
InducedTree minimalize_tree(const Graph& g, const InducedTree& t);

// Splits a minimal tree over three degree-1 query vertices into its
// center and legs. Throws if the tree has no branch vertex (a path), or
// more than one, or a vertex of degree > 3: all impossible when the
// preconditions hold, so any of them signals caller error.
ClawDecomposition decompose_claw(const Graph& g, const InducedTree& t, Vertex x1, Vertex x2,
                                 Vertex x3);

}  // namespace fourtree
