#pragma once

#include <array>
#include <cstdint>

#include "fourtree/cubic.hpp"
#include "fourtree/graph.hpp"
#include "fourtree/square.hpp"

namespace fourtree {

// Erdos-Renyi sample from which one edge of every triangle (the
// lexicographically smallest edge of the smallest triangle) is deleted
// until none remains. Deterministic per seed.
Graph gen_triangle_free(int n, double p, uint64_t seed);

// Random bipartite graph: sides of size n/2 and n - n/2, m distinct
// cross edges sampled uniformly. Bipartite, hence triangle-free.
Graph gen_bipartite(int n, long long m, uint64_t seed);

// Part sizes for a generated four-part split. Every side class and
// every anchor part needs at least one vertex.
struct SquareSizes {
    std::array<int, 4> a{1, 1, 1, 1};
    std::array<int, 4> s{1, 1, 1, 1};
    int r = 0;
};

struct GeneratedSquare {
    Graph graph;
    std::array<Vertex, 4> terminals;
    SquareSplit split;
};

// Random graph admitting the given split: side classes first (blocks
// S1..S4), then anchor parts A1..A4, then R. Anchor parts are random
// trees plus bipartition-respecting extra edges at rate inner_p; all
// mandatory completeness edges are present; each side vertex reaches
// its anchor part; R vertices attach only to side classes. The output
// passes validate_square over all vertices and has no triangle.
GeneratedSquare gen_square_structure(const SquareSizes& sizes, double inner_p, uint64_t seed);

struct CubicSizes {
    std::array<int, 4> a{1, 1, 1, 1};
    std::array<int, 4> b{0, 0, 0, 0};
    std::array<int, 8> s{1, 1, 1, 1, 1, 1, 1, 1};
    int r = 0;
};

struct GeneratedCubic {
    Graph graph;
    std::array<Vertex, 4> terminals;
    CubicSplit split;
};

// Same idea for the eight-class split: low side classes S1..S4, high
// side classes S5..S8 (at most one of them empty), anchor parts, B
// parts, then R. B_i vertices attach either into S_i or into the high
// classes S_i may see; R vertices attach only to high classes. Output
// passes validate_cubic over all vertices and has no triangle.
GeneratedCubic gen_cubic_structure(const CubicSizes& sizes, double inner_p, uint64_t seed);

}  // namespace fourtree
