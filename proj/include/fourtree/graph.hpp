#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fourtree {

using Vertex = int;

// Set of vertices out of a fixed universe {0..n-1}, bitset backed.
// Iteration helpers always run in ascending vertex order so every
// algorithm built on top stays deterministic.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Vertex v) const {
        return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63)) & 1;
    }
    void insert(Vertex v) {
        check(v);
        uint64_t& w = bits_[v >> 6];
        uint64_t bit = uint64_t(1) << (v & 63);
        if (!(w & bit)) { w |= bit; ++count_; }
    }
    void erase(Vertex v) {
        check(v);
        uint64_t& w = bits_[v >> 6];
        uint64_t bit = uint64_t(1) << (v & 63);
        if (w & bit) { w &= ~bit; --count_; }
    }
    void clear() {
        for (auto& w : bits_) w = 0;
        count_ = 0;
    }

    std::vector<Vertex> to_vector() const;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

    static VertexSet of(int universe, const std::vector<Vertex>& vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.insert(v);
        return s;
    }

private:
    void check(Vertex v) const;

    int n_ = 0;
    std::vector<uint64_t> bits_;
    int count_ = 0;
};

// Path of distinct vertices; consecutive entries are adjacent in the
// graph the path was built from.
struct Path {
    std::vector<Vertex> vertices;

    int size() const { return (int)vertices.size(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

// A vertex set known to induce a tree, together with the query vertices
// it was grown to cover.
struct InducedTree {
    VertexSet vertices;
    std::vector<Vertex> required;
};

// Undirected simple graph with sorted adjacency lists.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<Vertex>> adj;

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return (int)adj[v].size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj[v]; }
    VertexSet all_vertices() const;
};

// Builds a graph from an edge list. Rejects self-loops, duplicate edges
// and endpoints outside 0..n-1.
Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

// Lexicographically smallest triangle (a < b < c), if any.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

// True iff g[z] is a tree: connected and |edges| == |z| - 1.
// z must be nonempty.
bool is_induced_tree(const Graph& g, const VertexSet& z);

// Shortest path from source to any vertex of `targets` whose interior
// vertices all lie in allowed \ targets. The source must lie in
// `allowed`; if it already lies in `targets` the path is just {source}.
// BFS expands sorted adjacency in FIFO order, so ties always resolve
// toward smaller vertex ids.
std::optional<Path> bfs_path(const Graph& g, Vertex source, const VertexSet& targets,
                             const VertexSet& allowed);

// Every vertex of x adjacent to every vertex of y (resp. no edges at
// all between x and y). x and y must be disjoint; empty sets are
// vacuously complete and anticomplete.
bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y);

// Induced subgraph on `keep`, with vertices renumbered 0..|keep|-1 in
// ascending original order. to_parent maps new ids back to g's ids.
struct SubgraphMap {
    Graph graph;
    std::vector<Vertex> to_parent;
};
SubgraphMap induced_subgraph(const Graph& g, const VertexSet& keep);

// Text format: "n m" header, then one "u v" line per edge. Lines whose
// first non-blank character is '#' are comments; "# label v name" lines
// attach a display name to vertex v.
struct GraphFile {
    Graph graph;
    std::map<Vertex, std::string> labels;
};

GraphFile read_graph_text(std::istream& in);
GraphFile read_graph_file(const std::string& path);
// Canonical form: header, then edges sorted with u < v. Reading a
// canonical file and writing it back reproduces it byte for byte.
std::string write_graph_text(const Graph& g, const std::map<Vertex, std::string>& labels = {});

}  // namespace fourtree
