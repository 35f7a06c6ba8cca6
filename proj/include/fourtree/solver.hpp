#pragma once

#include <array>
#include <utility>

#include "fourtree/cubic.hpp"
#include "fourtree/graph.hpp"
#include "fourtree/square.hpp"

namespace fourtree {

// The four pendant vertices the solver works with, one per query
// vertex (duplicate queries get separate pendants).
struct Terminals {
    std::array<Vertex, 4> x;  // pendants in the working graph, degree 1
    std::array<Vertex, 4> y;  // the original query vertices
};

// Working graph plus its terminals: vertex g.n+i is a new pendant
// attached to ys[i]. Pendants never create triangles.
std::pair<Graph, Terminals> attach_terminals(const Graph& g, const std::array<Vertex, 4>& ys);

// Drops the pendants from a covering tree of the working graph. The
// result lives in the original graph and covers the query vertices.
InducedTree strip_terminals(const InducedTree& tree, const Terminals& t);

// First solving step on a connected working graph: grow a minimal tree
// over three terminals, walk the fourth one in, and either finish a
// covering tree or seed a four-part split from the meeting point.
struct InitialResult {
    enum class Kind { FoundTree, GrewSquare } kind;
    InducedTree tree;    // FoundTree
    SquareSplit square;  // GrewSquare
    VertexSet domain;    // GrewSquare: the vertices the split covers
};
InitialResult initial_phase(const Graph& g, const Terminals& t);

// Full solve: an induced tree through the four query vertices, or a
// machine-checked certificate that none exists. Certificates partition
// the whole working graph; Disconnected wins when the queries do not
// even share a component.
struct SolveResult {
    enum class Kind { FoundTree, SquareCertificate, CubicCertificate, Disconnected } kind;
    InducedTree tree;     // FoundTree: vertices of the input graph
    SquareSplit square;   // SquareCertificate, over the working graph
    CubicSplit cubic;     // CubicCertificate, over the working graph
    VertexSet component;  // Disconnected: component of the first query
    Graph working;        // input graph plus the four pendants
    Terminals terminals;
};

// Decides the four-vertex induced-tree problem on a triangle-free
// graph. Throws invalid_argument on a triangle (with a witness in the
// message) or on query ids out of range.
SolveResult four_in_a_tree(const Graph& g, const std::array<Vertex, 4>& ys);

}  // namespace fourtree
