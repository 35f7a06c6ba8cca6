#include "fourtree/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fourtree {

namespace {

// Enumerates every connected induced subgraph containing the anchor
// (= smallest required vertex) exactly once, by binary include/exclude
// decisions on the neighborhood frontier. The callback sees each set
// whose required vertices are all present and may stop the search by
// returning true. `budget` prunes branches: any set produced below the
// current node has at least |S| + |missing required| vertices, so once
// that exceeds the budget the branch is dead.
struct Enumerator {
    const Graph& g;
    std::vector<Vertex> required;  // sorted, distinct
    int missing = 0;               // required vertices not yet in S
    VertexSet in_s;
    std::vector<Vertex> stack;  // S in insertion order
    long long inside_edges = 0;
    int budget;  // only sets with at most this many vertices are of interest
    std::function<bool(Enumerator&)> accept;

    Enumerator(const Graph& graph, std::vector<Vertex> req, int max_n)
        : g(graph), required(std::move(req)), in_s(graph.n), budget(graph.n) {
        if (g.n > max_n)
            throw std::invalid_argument("reference search limited to graphs with at most " +
                                        std::to_string(max_n) + " vertices");
        std::sort(required.begin(), required.end());
        required.erase(std::unique(required.begin(), required.end()), required.end());
        for (Vertex v : required)
            if (v < 0 || v >= g.n) throw std::invalid_argument("required vertex out of range");
        if (required.empty()) throw std::invalid_argument("no required vertices");
        missing = (int)required.size();
    }

    void add(Vertex v) {
        for (Vertex u : g.adj[v])
            if (in_s.contains(u)) ++inside_edges;
        in_s.insert(v);
        stack.push_back(v);
        if (std::binary_search(required.begin(), required.end(), v)) --missing;
    }

    void remove(Vertex v) {
        if (std::binary_search(required.begin(), required.end(), v)) ++missing;
        stack.pop_back();
        in_s.erase(v);
        for (Vertex u : g.adj[v])
            if (in_s.contains(u)) --inside_edges;
    }

    bool run() {
        add(required[0]);
        VertexSet forbidden(g.n);
        return recurse(forbidden);
    }

    bool recurse(VertexSet forbidden) {
        if ((int)stack.size() + missing > budget) return false;
        if (missing == 0 && accept(*this)) return true;
        std::vector<Vertex> candidates;
        for (Vertex v : stack)
            for (Vertex u : g.adj[v])
                if (!in_s.contains(u) && !forbidden.contains(u)) {
                    forbidden.insert(u);  // doubles as dedup while collecting
                    candidates.push_back(u);
                }
        for (Vertex c : candidates) forbidden.erase(c);
        std::sort(candidates.begin(), candidates.end());
        for (Vertex c : candidates) {
            add(c);
            if (recurse(forbidden)) return true;
            remove(c);
            forbidden.insert(c);
        }
        return false;
    }

    // Tree-degree of v within the current set.
    int inner_degree(Vertex v) const {
        int d = 0;
        for (Vertex u : g.adj[v])
            if (in_s.contains(u)) ++d;
        return d;
    }
};

std::optional<InducedTree> search_tree(const Graph& g, const std::vector<Vertex>& required,
                                       int max_n, int max_extra, bool centered) {
    std::optional<VertexSet> best;
    Enumerator e(g, required, max_n);
    long long cap = (long long)e.required.size() + std::max(max_extra, 0);
    e.budget = (int)std::min<long long>(g.n, cap);
    e.accept = [centered, &best](Enumerator& en) {
        if (en.inside_edges != (long long)en.stack.size() - 1) return false;
        if (centered) {
            int branch_vertices = 0;
            for (Vertex v : en.stack)
                if (en.inner_degree(v) >= 3) ++branch_vertices;
            if (branch_vertices > 1) return false;
        }
        best = en.in_s;
        en.budget = (int)en.stack.size() - 1;  // only strictly smaller sets from now on
        return false;                          // keep going: a smaller one may exist
    };
    e.run();
    if (!best) return std::nullopt;
    return InducedTree{*best, required};
}

}  // namespace

std::optional<InducedTree> brute_force_tree(const Graph& g, const std::vector<Vertex>& required,
                                            int max_extra) {
    return search_tree(g, required, 24, max_extra, false);
}

std::optional<InducedTree> brute_force_tree(const Graph& g, const std::vector<Vertex>& required) {
    return search_tree(g, required, 24, g.n, false);
}

std::optional<InducedTree> brute_force_centered_tree(const Graph& g,
                                                     const std::vector<Vertex>& required) {
    return search_tree(g, required, 20, g.n, true);
}

std::optional<VertexSet> brute_force_two_in_cycle(const Graph& g, Vertex x, Vertex y) {
    if (x == y) throw std::invalid_argument("cycle query needs two distinct vertices");
    std::optional<VertexSet> found;
    Enumerator e(g, {x, y}, 20);
    e.accept = [&found](Enumerator& en) {
        if (en.stack.size() < 3) return false;
        if (en.inside_edges != (long long)en.stack.size()) return false;
        for (Vertex v : en.stack)
            if (en.inner_degree(v) != 2) return false;
        found = en.in_s;
        return true;
    };
    e.run();
    return found;
}

}  // namespace fourtree
