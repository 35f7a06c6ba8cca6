#pragma once

#include <array>
#include <string>
#include <vector>

#include "fourtree/cubic.hpp"
#include "fourtree/graph.hpp"

namespace fourtree {

// Partition of a domain into A1..A4, S1..S4 and R around four
// terminals (0-indexed arrays). The axioms, as the validator numbers
// them:
//   1  parts cover the domain          2  parts pairwise disjoint
//   3  terminal i lies in a[i]         4  every s[i] a stable set
//   5  every s[i] nonempty             6  s[i] complete to s[i+1 mod 4]
//   7  s[0] anticomplete to s[2], s[1] anticomplete to s[3]
//   8  N(a[i]) = s[i] exactly          9  N(R) inside s[0]u..us[3]
//   10 each G[a[i]] connected
// Neighborhoods are taken within the domain.
struct SquareSplit {
    std::array<VertexSet, 4> a;
    std::array<VertexSet, 4> s;
    VertexSet r;
    std::array<Vertex, 4> terminals;
};

std::vector<Violation> validate_square(const Graph& g, const SquareSplit& split,
                                       const VertexSet& domain);

// Shortest path from s to terminal i whose interior lies in a[i]; s
// must be in s[i] or a[i]. Ends at terminals[i].
Path path_to_terminal(const Graph& g, const SquareSplit& split, int i, Vertex s);

struct SquareAugmentTrace {
    Vertex v = -1;
    Vertex anchor = -1;       // a1 after normalization (global vertex id)
    int anchor_index = -1;    // original index of the part it was found in
    std::string branch;
    Path q_path;              // v .. w, the walk that left R
    VertexSet complete_set;   // C: the vertices of R+v complete to s2 u s4
    VertexSet y, y1, y2, y3;
    std::array<int, 4> symmetry{0, 1, 2, 3};  // normalized index -> original index
};

struct SquareAugmentResult {
    enum class Kind { FoundTree, BecameCubic, GrewSquare } kind;
    InducedTree tree;    // FoundTree
    SquareSplit square;  // GrewSquare
    CubicSplit cubic;    // BecameCubic
    VertexSet domain;    // GrewSquare: old+v; BecameCubic: may be smaller
    SquareAugmentTrace trace;
};

// One augmentation step: an induced tree covering the terminals inside
// domain+v, or a square split of domain+v, or a cubic split over a
// subset of domain+v (the caller re-queues what fell out). Input split
// must validate; v outside the domain; graph triangle-free. Every
// outcome is re-checked before returning.
SquareAugmentResult augment_square(const Graph& g, const SquareSplit& split,
                                   const VertexSet& domain, Vertex v);

}  // namespace fourtree
