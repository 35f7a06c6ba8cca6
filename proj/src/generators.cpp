#include "fourtree/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fourtree {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Consecutive vertex ids for one part of a generated split.
struct Block {
    Vertex start = 0;
    int size = 0;

    Vertex at(int k) const { return start + k; }
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out(size);
        for (int k = 0; k < size; ++k) out[k] = start + k;
        return out;
    }
};

VertexSet block_set(int universe, const Block& b) {
    return VertexSet::of(universe, b.vertices());
}

// Random recursive tree over the block plus extra edges that respect
// the tree's two-coloring, so the part stays bipartite (triangle-free
// on its own). Returns the color classes for the callers that must
// attach to an independent set.
std::array<std::vector<Vertex>, 2> grow_part(const Block& b, double inner_p, std::mt19937_64& rng,
                                             EdgeList& edges) {
    std::vector<int> depth(b.size, 0);
    std::set<std::pair<int, int>> tree;
    for (int k = 1; k < b.size; ++k) {
        std::uniform_int_distribution<int> pick(0, k - 1);
        int parent = pick(rng);
        depth[k] = depth[parent] + 1;
        tree.insert({parent, k});
        edges.push_back({b.at(parent), b.at(k)});
    }
    if (inner_p > 0.0) {
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int i = 0; i < b.size; ++i) {
            for (int k = i + 1; k < b.size; ++k) {
                if (depth[i] % 2 == depth[k] % 2) continue;  // same color: would break bipartite
                if (tree.count({i, k})) continue;
                if (coin(rng) < inner_p) edges.push_back({b.at(i), b.at(k)});
            }
        }
    }
    std::array<std::vector<Vertex>, 2> sides;
    for (int k = 0; k < b.size; ++k) sides[depth[k] % 2].push_back(b.at(k));
    return sides;
}

// Attach one outside vertex to a nonempty random subset of the pool.
void wire_subset(Vertex v, const std::vector<Vertex>& pool, double rate, std::mt19937_64& rng,
                 EdgeList& edges) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    bool any = false;
    for (Vertex u : pool) {
        if (coin(rng) < rate) {
            edges.push_back({std::min(u, v), std::max(u, v)});
            any = true;
        }
    }
    if (!any) {
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        Vertex u = pool[pick(rng)];
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
}

}  // namespace

Graph gen_triangle_free(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gen_triangle_free: bad n or p");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng) < p) edges.push_back({u, v});
        }
    }
    Graph g = build_graph(n, edges);
    while (auto tri = find_triangle(g)) {
        std::pair<Vertex, Vertex> cut{(*tri)[0], (*tri)[1]};
        edges.erase(std::remove(edges.begin(), edges.end(), cut), edges.end());
        g = build_graph(n, edges);
    }
    return g;
}

Graph gen_bipartite(int n, long long m, uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("gen_bipartite: bad n or m");
    int left = n / 2;
    int right = n - left;
    if (m > (long long)left * right) {
        throw std::invalid_argument("gen_bipartite: more edges than the bipartition allows");
    }
    std::mt19937_64 rng(seed);
    std::set<std::pair<Vertex, Vertex>> picked;
    std::uniform_int_distribution<int> lpick(0, std::max(left - 1, 0));
    std::uniform_int_distribution<int> rpick(0, std::max(right - 1, 0));
    while ((long long)picked.size() < m) {
        picked.insert({lpick(rng), left + rpick(rng)});
    }
    EdgeList edges(picked.begin(), picked.end());
    return build_graph(n, edges);
}

GeneratedSquare gen_square_structure(const SquareSizes& sizes, double inner_p, uint64_t seed) {
    for (int i = 0; i < 4; ++i) {
        if (sizes.a[i] < 1 || sizes.s[i] < 1) {
            throw std::invalid_argument("gen_square_structure: every A and S part needs a vertex");
        }
    }
    if (sizes.r < 0) throw std::invalid_argument("gen_square_structure: negative R size");
    if (inner_p < 0.0 || inner_p > 1.0) throw std::invalid_argument("gen_square_structure: bad rate");

    std::array<Block, 4> sblk, ablk;
    Vertex next = 0;
    for (int i = 0; i < 4; ++i) sblk[i] = {next, sizes.s[i]}, next += sizes.s[i];
    for (int i = 0; i < 4; ++i) ablk[i] = {next, sizes.a[i]}, next += sizes.a[i];
    Block rblk{next, sizes.r};
    next += sizes.r;
    int n = next;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    EdgeList edges;

    // Ring completeness between consecutive side classes.
    for (int i = 0; i < 4; ++i) {
        for (Vertex u : sblk[i].vertices()) {
            for (Vertex v : sblk[(i + 1) % 4].vertices()) {
                edges.push_back({std::min(u, v), std::max(u, v)});
            }
        }
    }

    // Anchor parts: connected, bipartite inside; every side vertex
    // attaches to one color class only, so no triangle can close.
    for (int i = 0; i < 4; ++i) {
        auto colors = grow_part(ablk[i], inner_p, rng, edges);
        for (Vertex s : sblk[i].vertices()) {
            int side = coin(rng) < 0.5 ? 0 : 1;
            if (colors[side].empty()) side ^= 1;
            wire_subset(s, colors[side], inner_p, rng, edges);
        }
    }

    // R vertices see one side class, plus possibly the opposite one —
    // never two consecutive classes, which are complete to each other.
    for (Vertex v : rblk.vertices()) {
        std::uniform_int_distribution<int> cls(0, 3);
        int i = cls(rng);
        wire_subset(v, sblk[i].vertices(), 0.5, rng, edges);
        if (coin(rng) < inner_p) {
            wire_subset(v, sblk[(i + 2) % 4].vertices(), 0.5, rng, edges);
        }
    }

    GeneratedSquare out;
    out.graph = build_graph(n, edges);
    for (int i = 0; i < 4; ++i) {
        out.split.a[i] = block_set(n, ablk[i]);
        out.split.s[i] = block_set(n, sblk[i]);
        out.terminals[i] = ablk[i].start;
    }
    out.split.r = block_set(n, rblk);
    out.split.terminals = out.terminals;

    if (find_triangle(out.graph)) {
        throw std::logic_error("gen_square_structure: produced a triangle");
    }
    auto violations = validate_square(out.graph, out.split, out.graph.all_vertices());
    if (!violations.empty()) {
        std::ostringstream os;
        os << "gen_square_structure: invalid output:";
        for (const auto& v : violations) os << " [" << v.item << "] " << v.message;
        throw std::logic_error(os.str());
    }
    return out;
}

GeneratedCubic gen_cubic_structure(const CubicSizes& sizes, double inner_p, uint64_t seed) {
    int empty_high = 0;
    for (int i = 0; i < 4; ++i) {
        if (sizes.a[i] < 1 || sizes.s[i] < 1) {
            throw std::invalid_argument("gen_cubic_structure: every A and low S part needs a vertex");
        }
        if (sizes.b[i] < 0 || sizes.s[4 + i] < 0) {
            throw std::invalid_argument("gen_cubic_structure: negative part size");
        }
        if (sizes.s[4 + i] == 0) ++empty_high;
    }
    if (empty_high > 1) {
        throw std::invalid_argument("gen_cubic_structure: at most one high class may be empty");
    }
    if (sizes.r < 0) throw std::invalid_argument("gen_cubic_structure: negative R size");
    if (inner_p < 0.0 || inner_p > 1.0) throw std::invalid_argument("gen_cubic_structure: bad rate");

    std::array<Block, 8> sblk;
    std::array<Block, 4> ablk, bblk;
    Vertex next = 0;
    for (int i = 0; i < 8; ++i) sblk[i] = {next, sizes.s[i]}, next += sizes.s[i];
    for (int i = 0; i < 4; ++i) ablk[i] = {next, sizes.a[i]}, next += sizes.a[i];
    for (int i = 0; i < 4; ++i) bblk[i] = {next, sizes.b[i]}, next += sizes.b[i];
    Block rblk{next, sizes.r};
    next += sizes.r;
    int n = next;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    EdgeList edges;

    // Every low class is complete to every high class except its own
    // partner; low-high is the only adjacency inside the side layer.
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            for (Vertex u : sblk[i].vertices()) {
                for (Vertex v : sblk[4 + j].vertices()) {
                    edges.push_back({std::min(u, v), std::max(u, v)});
                }
            }
        }
    }

    for (int i = 0; i < 4; ++i) {
        auto colors = grow_part(ablk[i], inner_p, rng, edges);
        for (Vertex s : sblk[i].vertices()) {
            int side = coin(rng) < 0.5 ? 0 : 1;
            if (colors[side].empty()) side ^= 1;
            wire_subset(s, colors[side], inner_p, rng, edges);
        }
    }

    // A B_i vertex may see S_i or the high classes S_i is complete to,
    // but never both: those ends are adjacent and would close a
    // triangle. B parts stay stable for the same reason.
    for (int i = 0; i < 4; ++i) {
        std::vector<Vertex> high;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            for (Vertex u : sblk[4 + j].vertices()) high.push_back(u);
        }
        for (Vertex v : bblk[i].vertices()) {
            if (coin(rng) < 0.5) {
                wire_subset(v, sblk[i].vertices(), 0.5, rng, edges);
            } else {
                wire_subset(v, high, 0.35, rng, edges);
            }
        }
    }

    // The high layer has no internal edges at all, so R vertices may
    // attach to any subset of it.
    std::vector<Vertex> all_high;
    for (int i = 4; i < 8; ++i) {
        for (Vertex u : sblk[i].vertices()) all_high.push_back(u);
    }
    for (Vertex v : rblk.vertices()) {
        wire_subset(v, all_high, 0.35, rng, edges);
    }

    GeneratedCubic out;
    out.graph = build_graph(n, edges);
    for (int i = 0; i < 4; ++i) {
        out.split.a[i] = block_set(n, ablk[i]);
        out.split.b[i] = block_set(n, bblk[i]);
        out.terminals[i] = ablk[i].start;
    }
    for (int i = 0; i < 8; ++i) out.split.s[i] = block_set(n, sblk[i]);
    out.split.r = block_set(n, rblk);
    out.split.terminals = out.terminals;

    if (find_triangle(out.graph)) {
        throw std::logic_error("gen_cubic_structure: produced a triangle");
    }
    auto violations = validate_cubic(out.graph, out.split, out.graph.all_vertices());
    if (!violations.empty()) {
        std::ostringstream os;
        os << "gen_cubic_structure: invalid output:";
        for (const auto& v : violations) os << " [" << v.item << "] " << v.message;
        throw std::logic_error(os.str());
    }
    return out;
}

}  // namespace fourtree
