#pragma once

#include <array>
#include <string>
#include <vector>

#include "fourtree/graph.hpp"

namespace fourtree {

// One failed structure axiom: which numbered item broke plus a witness.
struct Violation {
    int item;
    std::string message;
};

// Partition of a domain into A1..A4, B1..B4, S1..S8 and R around four
// terminals. Arrays are 0-indexed: s[i] and s[i+4] (i in 0..3) form the
// paired classes. The axioms, numbered as the validator reports them:
//   1  parts cover the domain          2  parts pairwise disjoint
//   3  terminal i lies in a[i]         4  every s[] is a stable set
//   5  s[0..3] nonempty                6  at most one of s[4..7] empty
//   7  s[i] complete to (s[4]..s[7]) minus s[i+4]
//   8  s[i] anticomplete to s[i+4]     9  s[0..3] pairwise anticomplete
//   10 s[4..7] pairwise anticomplete   11 N(a[i]) = s[i] exactly
//   12 N(b[i]) inside s[i] plus the S-vertices adjacent to s[i]
//   13 N(R) inside s[4] u s[5] u s[6] u s[7]
//   14 each G[a[i]] connected
// Neighborhoods are always taken within the domain.
struct CubicSplit {
    std::array<VertexSet, 4> a;
    std::array<VertexSet, 4> b;
    std::array<VertexSet, 8> s;
    VertexSet r;
    std::array<Vertex, 4> terminals;
};

std::vector<Violation> validate_cubic(const Graph& g, const CubicSplit& split,
                                      const VertexSet& domain);

// Shortest path from s to terminal i with interior inside a[i]; s must
// lie in s[i] or a[i].
Path cubic_path_to_terminal(const Graph& g, const CubicSplit& split, int i, Vertex s);

struct CubicAugmentTrace {
    Vertex v = -1;
    std::string branch;
    Path q_path;
    VertexSet complete_set;          // C
    VertexSet y, y1, y2, y3;
    std::array<int, 4> symmetry{0, 1, 2, 3};  // normalized index -> original index
};

struct CubicAugmentResult {
    enum class Kind { FoundTree, GrewCubic } kind;
    InducedTree tree;    // FoundTree
    CubicSplit split;    // GrewCubic
    VertexSet domain;    // GrewCubic: old domain plus v
    CubicAugmentTrace trace;
};

// One augmentation step: either an induced tree covering the terminals
// inside domain+v, or a cubic split of domain+v. The input split must
// validate; v must be outside the domain; the graph must be
// triangle-free. Every outcome is re-checked before returning.
CubicAugmentResult augment_cubic(const Graph& g, const CubicSplit& split, const VertexSet& domain,
                                 Vertex v);

}  // namespace fourtree
