#include "fourtree/three_in_tree.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace fourtree {

namespace {

InducedTree core(const Graph& g, Vertex a, Vertex b, Vertex c) {
    for (Vertex v : {a, b, c})
        if (v < 0 || v >= g.n) throw std::invalid_argument("query vertex out of range");
    if (auto tri = find_triangle(g))
        throw std::invalid_argument("graph has triangle (" + std::to_string((*tri)[0]) + "," +
                                    std::to_string((*tri)[1]) + "," + std::to_string((*tri)[2]) + ")");
    auto all = g.all_vertices();
    auto p = bfs_path(g, a, VertexSet::of(g.n, {b}), all);
    if (!p) throw std::invalid_argument("query vertices not in one component");
    VertexSet on_p = VertexSet::of(g.n, p->vertices);
    InducedTree out;
    out.required = {a, b, c};
    if (on_p.contains(c)) {
        out.vertices = on_p;
    } else {
        // March from c through vertices with no neighbor on the path,
        // stopping at the first vertex that touches it.
        VertexSet touches(g.n), quiet(g.n);
        for (Vertex v = 0; v < g.n; ++v) {
            if (on_p.contains(v)) continue;
            bool t = false;
            for (Vertex u : g.adj[v])
                if (on_p.contains(u)) { t = true; break; }
            (t ? touches : quiet).insert(v);
        }
        quiet.insert(c);  // source must be expandable even if it touches
        auto q = bfs_path(g, c, touches, quiet);
        if (!q) throw std::invalid_argument("query vertices not in one component");
        Vertex w = q->back();
        // w's outermost neighbors on the path; everything strictly
        // between them is cut out (if they differ).
        int first = -1, last = -1;
        for (int i = 0; i < (int)p->vertices.size(); ++i)
            if (g.has_edge(w, p->vertices[i])) {
                if (first < 0) first = i;
                last = i;
            }
        assert(first >= 0);
        out.vertices = VertexSet::of(g.n, q->vertices);
        for (int i = 0; i < (int)p->vertices.size(); ++i)
            if (i <= first || i >= last) out.vertices.insert(p->vertices[i]);
    }
    assert(is_induced_tree(g, out.vertices));
    return minimalize_tree(g, out);
}

}  // namespace

InducedTree tree_covering_three(const Graph& g, Vertex a, Vertex b, Vertex c) {
    return core(g, a, b, c);
}

InducedTree tree_covering_three(const Graph& g, Vertex a, Vertex b, Vertex c,
                                const VertexSet& allowed) {
    for (Vertex v : {a, b, c})
        if (!allowed.contains(v)) throw std::invalid_argument("query vertex outside allowed set");
    SubgraphMap sub = induced_subgraph(g, allowed);
    std::vector<Vertex> to_child(g.n, -1);
    for (size_t i = 0; i < sub.to_parent.size(); ++i) to_child[sub.to_parent[i]] = (Vertex)i;
    InducedTree inner = core(sub.graph, to_child[a], to_child[b], to_child[c]);
    InducedTree out;
    out.required = {a, b, c};
    out.vertices = VertexSet(g.n);
    for (Vertex v : inner.vertices.to_vector()) out.vertices.insert(sub.to_parent[v]);
    return out;
}

InducedTree minimalize_tree(const Graph& g, const InducedTree& t) {
    if (t.required.empty()) throw std::invalid_argument("tree with no required vertices");
    for (Vertex r : t.required)
        if (!t.vertices.contains(r)) throw std::invalid_argument("required vertex missing from tree");
    if (!is_induced_tree(g, t.vertices)) throw std::invalid_argument("input set does not induce a tree");

    VertexSet required(g.n);
    for (Vertex r : t.required) required.insert(r);
    VertexSet in_t = t.vertices;
    std::vector<int> deg(g.n, 0);
    for (Vertex v : in_t.to_vector())
        for (Vertex u : g.adj[v])
            if (in_t.contains(u)) ++deg[v];

    // Min-heap of candidate leaves; popping the smallest id each round
    // is the same as rescanning from id 0 after every removal.
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<Vertex>> heap;
    for (Vertex v : in_t.to_vector())
        if (deg[v] <= 1 && !required.contains(v)) heap.push(v);
    while (!heap.empty()) {
        Vertex v = heap.top();
        heap.pop();
        if (!in_t.contains(v) || deg[v] > 1 || required.contains(v)) continue;
        in_t.erase(v);
        for (Vertex u : g.adj[v])
            if (in_t.contains(u)) {
                if (--deg[u] <= 1 && !required.contains(u)) heap.push(u);
            }
    }
    InducedTree out{in_t, t.required};
    assert(is_induced_tree(g, out.vertices));
    return out;
}

ClawDecomposition decompose_claw(const Graph& g, const InducedTree& t, Vertex x1, Vertex x2,
                                 Vertex x3) {
    std::array<Vertex, 3> xs{x1, x2, x3};
    if (x1 == x2 || x1 == x3 || x2 == x3) throw std::invalid_argument("query vertices must be distinct");
    for (Vertex x : xs)
        if (!t.vertices.contains(x)) throw std::invalid_argument("query vertex not in tree");

    auto verts = t.vertices.to_vector();
    std::vector<int> deg(g.n, 0);
    for (Vertex v : verts)
        for (Vertex u : g.adj[v])
            if (t.vertices.contains(u)) ++deg[v];

    Vertex center = -1;
    for (Vertex v : verts) {
        if (deg[v] == 1 && v != x1 && v != x2 && v != x3)
            throw std::invalid_argument("tree has a leaf besides the query vertices; not minimal");
        if (deg[v] >= 3) {
            if (center != -1) throw std::invalid_argument("tree has two branch vertices");
            if (deg[v] > 3) throw std::invalid_argument("tree has a vertex of degree above three");
            center = v;
        }
    }
    if (center == -1) throw std::invalid_argument("tree is a path; expected three leaves");

    ClawDecomposition out;
    out.center = center;
    for (int i = 0; i < 3; ++i) {
        auto leg = bfs_path(g, center, VertexSet::of(g.n, {xs[i]}), t.vertices);
        assert(leg.has_value());
        out.legs[i] = *leg;
    }
    return out;
}

}  // namespace fourtree
