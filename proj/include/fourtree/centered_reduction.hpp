#pragma once

#include <array>

#include "fourtree/graph.hpp"

namespace fourtree {

// Output of the cycle-to-centered-tree transformation. Old vertices are
// renumbered to close the two gaps left by deleting x and y; the five
// new vertices take the top ids, center first, then the terminals.
struct CenteredInstance {
    Graph graph;
    std::array<Vertex, 4> terminals;  // x1..x4
    Vertex center;                    // c
    std::vector<Vertex> to_original;  // new id -> old id; -1 for added vertices
};

// Deletes x and y (both of degree exactly 2, distinct, nonadjacent) and
// adds c, x1..x4 with edges c-x1, c-x2, c-x' , c-x'' (x', x'' the old
// neighbors of x) and x3-y', x4-y'' (y's old neighbors). The result has
// an induced tree covering x1..x4 with at most one vertex of degree
// above two exactly when the input has an induced cycle through x and
// y. Throws invalid_argument on degree != 2, x == y, or adjacent x, y.
CenteredInstance build_centered_instance(const Graph& g, Vertex x, Vertex y);

// Cross-checks the transformation on one instance with the exhaustive
// searches on both sides; true iff the two answers agree. Bound by the
// oracle size limits.
bool check_reduction(const Graph& g, Vertex x, Vertex y);

}  // namespace fourtree
