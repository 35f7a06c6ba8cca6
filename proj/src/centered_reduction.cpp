#include "fourtree/centered_reduction.hpp"

#include <stdexcept>
#include <vector>

#include "fourtree/oracle.hpp"

namespace fourtree {

CenteredInstance build_centered_instance(const Graph& g, Vertex x, Vertex y) {
    if (x < 0 || x >= g.n || y < 0 || y >= g.n) {
        throw std::invalid_argument("build_centered_instance: vertex out of range");
    }
    if (x == y) throw std::invalid_argument("build_centered_instance: x and y must differ");
    if (g.degree(x) != 2 || g.degree(y) != 2) {
        throw std::invalid_argument("build_centered_instance: x and y must have degree two");
    }
    if (g.has_edge(x, y)) {
        throw std::invalid_argument(
            "build_centered_instance: x and y must be nonadjacent (their attachment points must "
            "survive the deletion)");
    }

    // Renumber the survivors, skipping the two deleted slots.
    std::vector<Vertex> to_new(g.n, -1);
    CenteredInstance out;
    Vertex next = 0;
    for (Vertex v = 0; v < g.n; ++v) {
        if (v == x || v == y) continue;
        to_new[v] = next++;
        out.to_original.push_back(v);
    }
    Vertex c = next;
    out.center = c;
    out.terminals = {c + 1, c + 2, c + 3, c + 4};
    for (int i = 0; i < 5; ++i) out.to_original.push_back(-1);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < g.n; ++u) {
        if (u == x || u == y) continue;
        for (Vertex v : g.neighbors(u)) {
            if (v == x || v == y || v <= u) continue;
            edges.push_back({to_new[u], to_new[v]});
        }
    }
    // The center keeps x's two attachment points and picks up the first
    // two terminals; the other two terminals take over y's.
    edges.push_back({c, out.terminals[0]});
    edges.push_back({c, out.terminals[1]});
    for (Vertex u : g.neighbors(x)) edges.push_back({to_new[u], c});
    edges.push_back({to_new[g.neighbors(y)[0]], out.terminals[2]});
    edges.push_back({to_new[g.neighbors(y)[1]], out.terminals[3]});

    out.graph = build_graph(g.n + 3, edges);
    return out;
}

bool check_reduction(const Graph& g, Vertex x, Vertex y) {
    bool cycle = brute_force_two_in_cycle(g, x, y).has_value();
    CenteredInstance inst = build_centered_instance(g, x, y);
    std::vector<Vertex> req(inst.terminals.begin(), inst.terminals.end());
    bool tree = brute_force_centered_tree(inst.graph, req).has_value();
    return cycle == tree;
}

}  // namespace fourtree
