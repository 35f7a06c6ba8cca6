#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fourtree/graph.hpp"
#include "fourtree/oracle.hpp"
#include "fourtree/three_in_tree.hpp"

using namespace fourtree;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

bool is_minimal_cover(const Graph& g, const InducedTree& t) {
    // The tree is induced, so subsets of it induce forests; a proper
    // connected subset covering the same vertices would keep every leaf
    // that is required. Hence minimal <=> every leaf is required.
    for (Vertex v : t.vertices.to_vector()) {
        int deg = 0;
        for (Vertex u : g.adj[v])
            if (t.vertices.contains(u)) ++deg;
        bool required = false;
        for (Vertex r : t.required) required |= (r == v);
        if (deg <= 1 && !required) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("three-cover on fixed instances") {
    // Star: center 0, leaves 1..3.
    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto t = tree_covering_three(star, 1, 2, 3);
    CHECK(t.vertices == star.all_vertices());

    // C4 on 0..3 with pendants 4-0, 5-1, 6-2; optimal cover of the
    // pendants has six vertices, and ours must match that optimum here.
    Graph cp = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}});
    auto t2 = tree_covering_three(cp, 4, 5, 6);
    CHECK(is_induced_tree(cp, t2.vertices));
    CHECK(t2.vertices.size() == 6);
    auto best = brute_force_tree(cp, {4, 5, 6});
    REQUIRE(best.has_value());
    CHECK(best->vertices.size() == 6);

    Graph p5 = path_graph(5);
    auto t3 = tree_covering_three(p5, 0, 2, 4);
    CHECK(t3.vertices == p5.all_vertices());
}

TEST_CASE("three-cover error cases") {
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS(tree_covering_three(k3, 0, 1, 2));
    Graph split = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS(tree_covering_three(split, 0, 1, 2));
    CHECK_THROWS(tree_covering_three(split, 0, 1, 7));
}

TEST_CASE("three-cover within an allowed set") {
    // 0-1-2-3 path plus a shortcut 0-4-3; restricting to the path side
    // must keep the result inside it.
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}});
    auto t = tree_covering_three(g, 0, 2, 3, VertexSet::of(5, {0, 1, 2, 3}));
    CHECK(t.vertices == VertexSet::of(5, {0, 1, 2, 3}));
    CHECK_THROWS(tree_covering_three(g, 0, 2, 4, VertexSet::of(5, {0, 1, 2, 3})));
}

TEST_CASE("minimalize removes useless legs") {
    Graph p4 = path_graph(4);
    InducedTree t{p4.all_vertices(), {0, 2}};
    auto m = minimalize_tree(p4, t);
    CHECK(m.vertices == VertexSet::of(4, {0, 1, 2}));

    // Spider: center 0 with legs 1-2, 3-4, 5-6; only two legs needed.
    Graph spider = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    InducedTree full{spider.all_vertices(), {2, 4}};
    auto m2 = minimalize_tree(spider, full);
    CHECK(m2.vertices == VertexSet::of(7, {0, 1, 2, 3, 4}));
    CHECK(is_minimal_cover(spider, m2));

    // Already minimal star is a fixpoint.
    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    InducedTree s{star.all_vertices(), {1, 2, 3}};
    CHECK(minimalize_tree(star, s).vertices == s.vertices);

    InducedTree bad{VertexSet::of(4, {0, 1, 2, 3}), {}};
    CHECK_THROWS(minimalize_tree(star, bad));
    InducedTree cyc{VertexSet::of(4, {0, 1, 2, 3}), {0}};
    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_THROWS(minimalize_tree(c4, cyc));
}

TEST_CASE("claw decomposition") {
    // Subdivided claw: center 0, legs 0-1-2, 0-3-4, 0-5-6.
    Graph spider = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    InducedTree t{spider.all_vertices(), {2, 4, 6}};
    auto claw = decompose_claw(spider, t, 2, 4, 6);
    CHECK(claw.center == 0);
    CHECK(claw.legs[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(claw.legs[1].vertices == std::vector<Vertex>{0, 3, 4});
    CHECK(claw.legs[2].vertices == std::vector<Vertex>{0, 5, 6});

    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto c2 = decompose_claw(star, InducedTree{star.all_vertices(), {1, 2, 3}}, 1, 2, 3);
    CHECK(c2.center == 0);
    CHECK(c2.legs[0].vertices == std::vector<Vertex>{0, 1});

    // A path has no center.
    Graph p3 = path_graph(3);
    CHECK_THROWS(decompose_claw(p3, InducedTree{p3.all_vertices(), {0, 1, 2}}, 0, 1, 2));

    // Two branch vertices signal a precondition breach.
    Graph dbl = build_graph(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {2, 7}});
    InducedTree bad{dbl.all_vertices(), {1, 5, 6}};
    CHECK_THROWS(decompose_claw(dbl, bad, 1, 5, 6));
}

TEST_CASE("random triangle-free graphs: output always a minimal induced cover") {
    std::mt19937_64 rng(424242);
    int done = 0;
    while (done < 400) {
        int n = 3 + (int)(rng() % 8);  // 3..10
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 35) edges.emplace_back(u, v);
        Graph g = build_graph(n, edges);
        // Peel triangles.
        while (auto tri = find_triangle(g)) {
            std::vector<std::pair<Vertex, Vertex>> kept;
            for (int u = 0; u < n; ++u)
                for (Vertex v : g.adj[u])
                    if (u < v && !(u == (*tri)[0] && v == (*tri)[1])) kept.emplace_back(u, v);
            g = build_graph(n, kept);
        }
        Vertex a = (Vertex)(rng() % n), b = (Vertex)(rng() % n), c = (Vertex)(rng() % n);
        // Only keep triples in one component.
        auto all = g.all_vertices();
        auto pab = bfs_path(g, a, VertexSet::of(n, {b}), all);
        auto pac = bfs_path(g, a, VertexSet::of(n, {c}), all);
        if (!pab || !pac) continue;
        ++done;
        auto t = tree_covering_three(g, a, b, c);
        CHECK(is_induced_tree(g, t.vertices));
        CHECK(t.vertices.contains(a));
        CHECK(t.vertices.contains(b));
        CHECK(t.vertices.contains(c));
        CHECK(is_minimal_cover(g, t));
        auto best = brute_force_tree(g, {a, b, c});
        REQUIRE(best.has_value());
        CHECK(t.vertices.size() >= best->vertices.size());
        CHECK(t.vertices.size() <= n);
    }
}
