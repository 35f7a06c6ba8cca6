#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fourtree/graph.hpp"
#include "fourtree/oracle.hpp"

using namespace fourtree;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

// C4 on 0..3 plus one pendant per cycle vertex (4..7).
Graph pendant_square() {
    return build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Reference: dumb scan over all 2^n subsets.
std::optional<int> min_tree_size_by_subsets(const Graph& g, const std::vector<Vertex>& required) {
    std::optional<int> best;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        VertexSet s(g.n);
        for (int v = 0; v < g.n; ++v)
            if (mask >> v & 1) s.insert(v);
        bool covers = true;
        for (Vertex r : required)
            if (!s.contains(r)) covers = false;
        if (!covers || s.empty()) continue;
        if (!is_induced_tree(g, s)) continue;
        if (!best || s.size() < *best) best = s.size();
    }
    return best;
}

}  // namespace

TEST_CASE("covering tree search on fixed instances") {
    Graph c4 = cycle_graph(4);
    CHECK(!brute_force_tree(c4, {0, 1, 2, 3}).has_value());

    Graph p4 = path_graph(4);
    auto t = brute_force_tree(p4, {0, 3});
    REQUIRE(t.has_value());
    CHECK(t->vertices.size() == 4);
    CHECK(t->vertices == p4.all_vertices());
    CHECK(t->required == std::vector<Vertex>{0, 3});

    CHECK(!brute_force_tree(pendant_square(), {4, 5, 6, 7}).has_value());
}

TEST_CASE("extra-vertex cap") {
    Graph p4 = path_graph(4);
    CHECK(!brute_force_tree(p4, {0, 3}, 1).has_value());
    CHECK(brute_force_tree(p4, {0, 3}, 2).has_value());
    CHECK(brute_force_tree(p4, {0, 3}, 5).has_value());
}

TEST_CASE("centered tree search") {
    // Star: center 0, leaves 1..4.
    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto t = brute_force_centered_tree(star, {1, 2, 3, 4});
    REQUIRE(t.has_value());
    CHECK(t->vertices.size() == 5);

    Graph p5 = path_graph(5);
    auto t2 = brute_force_centered_tree(p5, {0, 4, 1, 3});
    REQUIRE(t2.has_value());
    CHECK(t2->vertices.size() == 5);

    // Double star: centers 0,1; leaves 2,3 on 0 and 4,5 on 1. The only
    // covering tree is everything, with two branch vertices.
    Graph dbl = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK(brute_force_tree(dbl, {2, 3, 4, 5}).has_value());
    CHECK(!brute_force_centered_tree(dbl, {2, 3, 4, 5}).has_value());
}

TEST_CASE("cycle-through-two search") {
    Graph c5 = cycle_graph(5);
    auto z = brute_force_two_in_cycle(c5, 0, 2);
    REQUIRE(z.has_value());
    CHECK(*z == c5.all_vertices());

    Graph p6 = path_graph(6);
    CHECK(!brute_force_two_in_cycle(p6, 1, 4).has_value());

    // Two C4's glued at vertex 0; no cycle can cross the cut vertex.
    Graph glued = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
    CHECK(!brute_force_two_in_cycle(glued, 2, 5).has_value());
    auto inside = brute_force_two_in_cycle(glued, 1, 3);
    REQUIRE(inside.has_value());
    CHECK(*inside == VertexSet::of(7, {0, 1, 2, 3}));

    CHECK_THROWS(brute_force_two_in_cycle(c5, 2, 2));
}

TEST_CASE("size guards") {
    Graph big = path_graph(25);
    CHECK_THROWS(brute_force_tree(big, {0, 24}));
    Graph mid = path_graph(21);
    CHECK(brute_force_tree(mid, {0, 20}).has_value());
    CHECK_THROWS(brute_force_centered_tree(mid, {0, 20}));
    CHECK_THROWS(brute_force_two_in_cycle(mid, 0, 20));
}

TEST_CASE("random cross-check against full subset scan") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + (int)(rng() % 6);  // 4..9
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 30) edges.emplace_back(u, v);
        Graph g = build_graph(n, edges);
        std::vector<Vertex> req;
        int k = 2 + (int)(rng() % 3);
        while ((int)req.size() < k) {
            Vertex v = (Vertex)(rng() % n);
            bool seen = false;
            for (Vertex r : req) seen |= (r == v);
            if (!seen) req.push_back(v);
        }
        auto fancy = brute_force_tree(g, req);
        auto plain = min_tree_size_by_subsets(g, req);
        CHECK(fancy.has_value() == plain.has_value());
        if (fancy && plain) {
            CHECK(fancy->vertices.size() == *plain);
            CHECK(is_induced_tree(g, fancy->vertices));
            for (Vertex r : req) CHECK(fancy->vertices.contains(r));
        }
    }
}
