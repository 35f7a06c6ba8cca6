#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourtree/cubic.hpp"
#include "fourtree/graph.hpp"

using namespace fourtree;

namespace {

struct Fixture {
    Graph g;
    CubicSplit sp;
    VertexSet domain;
};

CubicSplit empty_split(int n) {
    CubicSplit sp;
    for (int i = 0; i < 4; ++i) {
        sp.a[i] = VertexSet(n);
        sp.b[i] = VertexSet(n);
    }
    for (int i = 0; i < 8; ++i) sp.s[i] = VertexSet(n);
    sp.r = VertexSet(n);
    return sp;
}

// Smallest all-singleton split: lower classes 0..3, upper classes 4..7
// wired complete-minus-pairing (i adjacent to 4+j exactly when i != j),
// pendant terminals 8..11. Spare vertices and extra edges let each test
// graft a new vertex onto the scaffolding.
Fixture smallest_cubic(int spare = 0, std::vector<std::pair<Vertex, Vertex>> extra = {}) {
    int n = 12 + spare;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = 0; j < 4; ++j)
            if (i != j) edges.push_back({i, 4 + j});
    for (Vertex i = 0; i < 4; ++i) edges.push_back({8 + i, i});
    for (auto& e : extra) edges.push_back(e);
    Fixture f{build_graph(n, edges), empty_split(n), VertexSet(n)};
    for (int i = 0; i < 4; ++i) {
        f.sp.a[i].insert(8 + i);
        f.sp.s[i].insert(i);
        f.sp.s[4 + i].insert(4 + i);
        f.sp.terminals[i] = 8 + i;
    }
    for (Vertex u = 0; u < 12; ++u) f.domain.insert(u);
    return f;
}

// Variant with the first pair class empty: lower 0..3, uppers 4..6 are
// the pair classes of parts 2..4, terminals 7..10.
Fixture no_pair_class(int spare = 0, std::vector<std::pair<Vertex, Vertex>> extra = {}) {
    int n = 11 + spare;
    std::vector<std::pair<Vertex, Vertex>> edges = {{0, 4}, {2, 4}, {3, 4}, {0, 5},
                                                    {1, 5}, {3, 5}, {0, 6}, {1, 6},
                                                    {2, 6}, {7, 0}, {8, 1}, {9, 2}, {10, 3}};
    for (auto& e : extra) edges.push_back(e);
    Fixture f{build_graph(n, edges), empty_split(n), VertexSet(n)};
    for (int i = 0; i < 4; ++i) {
        f.sp.a[i].insert(7 + i);
        f.sp.s[i].insert(i);
        f.sp.terminals[i] = 7 + i;
    }
    f.sp.s[5].insert(4);
    f.sp.s[6].insert(5);
    f.sp.s[7].insert(6);
    for (Vertex u = 0; u < 11; ++u) f.domain.insert(u);
    return f;
}

// Smallest split grown by a second vertex in each of the first two
// lower classes (13 beside 0, 14 beside 1).
Fixture doubled_lower(int spare = 0, std::vector<std::pair<Vertex, Vertex>> extra = {}) {
    std::vector<std::pair<Vertex, Vertex>> edges = {{13, 8}, {13, 5}, {13, 6}, {13, 7},
                                                    {14, 9}, {14, 4}, {14, 6}, {14, 7}};
    for (auto& e : extra) edges.push_back(e);
    Fixture f = smallest_cubic(3 + spare, edges);
    f.sp.s[0].insert(13);
    f.sp.s[1].insert(14);
    f.domain.insert(13);
    f.domain.insert(14);
    return f;
}

std::vector<int> items_of(const std::vector<Violation>& vs) {
    std::set<int> items;
    for (const auto& v : vs) items.insert(v.item);
    return {items.begin(), items.end()};
}

bool covers_terminals(const InducedTree& t, const CubicSplit& sp) {
    for (Vertex x : sp.terminals)
        if (!t.vertices.contains(x)) return false;
    return true;
}

void check_tree(const Fixture& f, const CubicAugmentResult& res) {
    REQUIRE(res.kind == CubicAugmentResult::Kind::FoundTree);
    CHECK(is_induced_tree(f.g, res.tree.vertices));
    CHECK(covers_terminals(res.tree, f.sp));
}

void check_grown(const Fixture& f, const CubicAugmentResult& res, Vertex v) {
    REQUIRE(res.kind == CubicAugmentResult::Kind::GrewCubic);
    CHECK(res.domain.contains(v));
    CHECK(res.domain.size() == f.domain.size() + 1);
    CHECK(validate_cubic(f.g, res.split, res.domain).empty());
}

}  // namespace

TEST_CASE("valid splits pass the validator") {
    auto f = smallest_cubic();
    CHECK(validate_cubic(f.g, f.sp, f.domain).empty());

    auto f2 = no_pair_class();  // one empty pair class is fine
    CHECK(validate_cubic(f2.g, f2.sp, f2.domain).empty());

    auto f3 = doubled_lower();
    CHECK(validate_cubic(f3.g, f3.sp, f3.domain).empty());

    // An outer vertex may touch an upper class adjacent to its own
    // lower class.
    auto f4 = smallest_cubic(1, {{12, 6}});
    f4.sp.b[1].insert(12);
    f4.domain.insert(12);
    CHECK(validate_cubic(f4.g, f4.sp, f4.domain).empty());
}

TEST_CASE("unplaced domain vertex") {
    auto f = smallest_cubic(1);
    f.domain.insert(12);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{1});
}

TEST_CASE("vertex in two parts") {
    auto f = smallest_cubic(1);
    f.sp.b[0].insert(12);
    f.sp.r.insert(12);
    f.domain.insert(12);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{2});
}

TEST_CASE("terminal outside its part") {
    auto f = smallest_cubic();
    std::swap(f.sp.terminals[0], f.sp.terminals[1]);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{3});
}

TEST_CASE("edge inside a lower class breaks stability") {
    auto f = smallest_cubic(1, {{12, 0}, {12, 5}, {12, 6}, {12, 7}, {12, 8}});
    f.sp.s[0].insert(12);
    f.domain.insert(12);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{4});
}

TEST_CASE("emptying a lower class cascades") {
    auto f = smallest_cubic();
    f.sp.s[0].erase(0);
    f.sp.r.insert(0);
    // Emptiness, the broken A-neighborhood and the lower R-contact all fire.
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{5, 11, 13});
}

TEST_CASE("two empty upper classes are one too many") {
    // Lower 0..3, only two uppers: 4 pairs with part 3, 5 with part 4.
    std::vector<std::pair<Vertex, Vertex>> edges = {{0, 4}, {1, 4}, {3, 4}, {0, 5}, {1, 5},
                                                    {2, 5}, {6, 0}, {7, 1}, {8, 2}, {9, 3}};
    Fixture f{build_graph(10, edges), empty_split(10), VertexSet(10)};
    for (int i = 0; i < 4; ++i) {
        f.sp.a[i].insert(6 + i);
        f.sp.s[i].insert(i);
        f.sp.terminals[i] = 6 + i;
    }
    f.sp.s[6].insert(4);
    f.sp.s[7].insert(5);
    for (Vertex u = 0; u < 10; ++u) f.domain.insert(u);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{6});
}

TEST_CASE("missing completeness edge between layers") {
    auto f = smallest_cubic();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = 0; j < 4; ++j)
            if (i != j && !(i == 0 && j == 1)) edges.push_back({i, 4 + j});
    for (Vertex i = 0; i < 4; ++i) edges.push_back({8 + i, i});
    Graph g = build_graph(12, edges);  // 0-5 dropped
    CHECK(items_of(validate_cubic(g, f.sp, f.domain)) == std::vector<int>{7});
}

TEST_CASE("edge between a class and its own pair") {
    auto f = smallest_cubic(0, {{0, 4}});
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{8});
}

TEST_CASE("edges across classes of one layer") {
    auto lower = smallest_cubic(0, {{0, 1}});
    CHECK(items_of(validate_cubic(lower.g, lower.sp, lower.domain)) == std::vector<int>{9});

    auto upper = smallest_cubic(0, {{4, 5}});
    CHECK(items_of(validate_cubic(upper.g, upper.sp, upper.domain)) == std::vector<int>{10});
}

TEST_CASE("A-part neighbor outside its class") {
    auto f = smallest_cubic(0, {{8, 1}});
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{11});
}

TEST_CASE("outer vertex touching a foreign lower class") {
    auto f = smallest_cubic(1, {{12, 0}, {12, 1}});
    f.sp.b[0].insert(12);
    f.domain.insert(12);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{12});
}

TEST_CASE("unanchored vertex touching the lower layer") {
    auto f = smallest_cubic(1, {{12, 0}});
    f.sp.r.insert(12);
    f.domain.insert(12);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{13});
}

TEST_CASE("disconnected A-part") {
    auto f = smallest_cubic(1);
    f.sp.a[0].insert(12);
    f.domain.insert(12);
    CHECK(items_of(validate_cubic(f.g, f.sp, f.domain)) == std::vector<int>{14});
}

TEST_CASE("terminal paths stay inside their part") {
    auto f = smallest_cubic();
    CHECK(cubic_path_to_terminal(f.g, f.sp, 0, 0).vertices == std::vector<Vertex>{0, 8});
    CHECK(cubic_path_to_terminal(f.g, f.sp, 0, 8).vertices == std::vector<Vertex>{8});

    // A1 grows into the path 8-13; the class vertex 0 still exits via 8.
    auto f2 = smallest_cubic(2, {{13, 8}});
    f2.sp.a[0].insert(13);
    f2.domain.insert(13);
    CHECK(cubic_path_to_terminal(f2.g, f2.sp, 0, 13).vertices == std::vector<Vertex>{13, 8});

    CHECK_THROWS_AS(cubic_path_to_terminal(f.g, f.sp, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(cubic_path_to_terminal(f.g, f.sp, 0, 1), std::invalid_argument);
}

TEST_CASE("augment rejects bad inputs") {
    auto f = smallest_cubic(1);
    CHECK_THROWS_AS(augment_cubic(f.g, f.sp, f.domain, 0), std::invalid_argument);
    CHECK_THROWS_AS(augment_cubic(f.g, f.sp, f.domain, 99), std::invalid_argument);
    CubicSplit broken = f.sp;
    broken.s[0].clear();
    CHECK_THROWS_AS(augment_cubic(f.g, broken, f.domain, 12), std::invalid_argument);
    // 12-0 and 12-5 close a triangle with the layer edge 0-5.
    auto ft = smallest_cubic(1, {{12, 0}, {12, 5}});
    CHECK_THROWS_AS(augment_cubic(ft.g, ft.sp, ft.domain, 12), std::invalid_argument);
}

TEST_CASE("isolated vertex joins the unanchored remainder") {
    auto f = smallest_cubic(1);
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "b-flock-r");
    CHECK(res.split.r.contains(12));
}

TEST_CASE("chain seeing only upper classes joins the unanchored remainder") {
    auto f = smallest_cubic(2, {{13, 4}, {13, 5}, {12, 13}});
    f.sp.r.insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "b-flock-r");
    CHECK(res.split.r.contains(12));
    CHECK(res.split.r.contains(13));
}

TEST_CASE("chain seeing one lower class joins its outer part") {
    auto f = smallest_cubic(2, {{13, 0}, {12, 13}});
    f.sp.b[0].insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "b-flock-b");
    CHECK(res.split.b[0].contains(12));
    CHECK(res.split.b[0].contains(13));
}

TEST_CASE("vertex complete to three lower classes joins the remaining pair class") {
    auto f = smallest_cubic(1, {{12, 1}, {12, 2}, {12, 3}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "cs-into-s8");
    CHECK(res.split.s[4].contains(12));
}

TEST_CASE("joining a pair class strands outer vertices of the exempt part") {
    auto f = smallest_cubic(2, {{13, 5}, {12, 1}, {12, 2}, {12, 3}, {12, 13}});
    f.sp.b[0].insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "cs-into-s8");
    CHECK(res.split.s[4].contains(12));
    // 13 has no contact with class 0 left, so it loses its anchoring.
    CHECK(res.split.r.contains(13));
    CHECK(!res.split.b[0].contains(13));
}

TEST_CASE("complete vertex with a direct exempt contact closes four legs") {
    auto f = smallest_cubic(1, {{12, 0}, {12, 1}, {12, 2}, {12, 3}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "cs-four-legs");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 1, 2, 3, 8, 9, 10, 11, 12});
}

TEST_CASE("complete vertex reaching the exempt class through its outer part") {
    auto f = smallest_cubic(2, {{13, 0}, {12, 1}, {12, 2}, {12, 3}, {12, 13}});
    f.sp.b[0].insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "cs-spine");
    CHECK(res.trace.q_path.vertices == std::vector<Vertex>{12, 13});
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 1, 2, 3, 8, 9, 10, 11, 12, 13});
}

TEST_CASE("anchored vertex adjacent to the anchored pair class") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 4}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-spine");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{1, 2, 3, 4, 8, 9, 10, 11, 12});
}

TEST_CASE("anchored vertex complete to the far upper classes joins the anchor class") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 5}, {12, 6}, {12, 7}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "a-into-s1");
    CHECK(res.split.s[0].contains(12));
    CHECK(res.split.a[0].contains(8));
}

TEST_CASE("harmless anchored growth is absorbed into the A-part") {
    auto f = smallest_cubic(2, {{13, 0}, {12, 8}, {12, 13}});
    f.sp.b[0].insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "a-absorb");
    CHECK(res.split.a[0].contains(12));
    CHECK(res.split.a[0].contains(13));
    CHECK(res.trace.y1.contains(13));
}

TEST_CASE("absorption promotes the complete frontier into the anchor class") {
    auto f = smallest_cubic(3, {{13, 0}, {13, 14}, {14, 5}, {14, 6}, {14, 7},
                                {12, 8}, {12, 13}});
    f.sp.b[0].insert(13);
    f.sp.b[0].insert(14);
    f.domain.insert(13);
    f.domain.insert(14);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_grown(f, res, 12);
    CHECK(res.trace.branch == "a-absorb");
    CHECK(res.trace.y2.contains(14));
    CHECK(res.split.a[0].contains(13));
    CHECK(res.split.s[0].contains(14));
    CHECK(res.split.b[0].empty());
}

TEST_CASE("anchored walk reaching one far upper class bridges two classes") {
    auto f = smallest_cubic(2, {{13, 5}, {12, 8}, {12, 13}});
    f.sp.b[0].insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-comp-tree");
    CHECK(res.trace.q_path.vertices == std::vector<Vertex>{12, 13});
    CHECK(res.trace.symmetry == std::array<int, 4>{0, 2, 1, 3});
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{1, 2, 3, 5, 6, 8, 9, 10, 11, 12, 13});
}

TEST_CASE("anchored vertex touching all three far sides") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 9}, {12, 10}, {12, 11}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-three-sides");
    CHECK(res.tree.vertices.to_vector() == std::vector<Vertex>{8, 9, 10, 11, 12});
}

TEST_CASE("anchored vertex touching two far sides") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 9}, {12, 10}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-two-sides");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{1, 3, 6, 8, 9, 10, 11, 12});
}

TEST_CASE("two far sides with a direct hub edge") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 9}, {12, 10}, {12, 6}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-two-sides-direct");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{3, 6, 8, 9, 10, 11, 12});
}

TEST_CASE("one far side plus the side's pair class") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 9}, {12, 5}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-one-side-upper-bridge");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{2, 3, 5, 8, 9, 10, 11, 12});
}

TEST_CASE("one far side hanging off the anchored pair hub") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 1}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-one-side-hub");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{1, 2, 3, 4, 8, 9, 10, 11, 12});
}

TEST_CASE("anchor choice prefers the part closest to a terminal") {
    // 13 sits one step into A1; the terminal 9 touching v directly wins
    // the anchor role, so A1 becomes the far side reached through 13.
    auto f = smallest_cubic(2, {{13, 8}, {12, 13}, {12, 9}});
    f.sp.a[0].insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-one-side-hub");
    CHECK(res.trace.symmetry == std::array<int, 4>{1, 0, 2, 3});
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 2, 3, 5, 8, 9, 10, 11, 12, 13});
}

TEST_CASE("one far side with a direct hub edge") {
    auto f = smallest_cubic(1, {{12, 8}, {12, 9}, {12, 4}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-one-side-hub-direct");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{2, 3, 4, 8, 9, 10, 11, 12});
}

TEST_CASE("one far side with no anchored pair class uses two hubs") {
    auto f = no_pair_class(1, {{11, 7}, {11, 1}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 11);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-one-side-double-hub");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{1, 2, 3, 5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("walk into a far pair class chains through both hubs") {
    auto f = no_pair_class(3, {{11, 5}, {11, 13}, {13, 1}, {12, 7}, {12, 11}});
    f.sp.b[1].insert(11);
    f.sp.b[1].insert(13);
    f.domain.insert(11);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-one-side-chain");
    CHECK(res.trace.q_path.vertices == std::vector<Vertex>{12, 11, 13});
    // The walk is only needed up to its first pair-class contact.
    CHECK(!res.tree.vertices.contains(13));
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12});
}

TEST_CASE("blocked chain falls back to the direct far-side leg") {
    auto f = no_pair_class(1, {{11, 7}, {11, 8}, {11, 5}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 11);
    check_tree(f, res);
    CHECK(res.trace.branch == "a-one-side-chain-direct");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{2, 3, 4, 5, 7, 8, 9, 10, 11});
}

TEST_CASE("outer vertex touching all four lower classes") {
    auto f = doubled_lower(1, {{15, 0}, {15, 1}, {15, 2}, {15, 3}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 15);
    check_tree(f, res);
    CHECK(res.trace.branch == "b-four-legs");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 1, 2, 3, 8, 9, 10, 11, 15});
}

TEST_CASE("outer vertex touching three lower classes routes one leg via a hub") {
    auto f = doubled_lower(1, {{15, 0}, {15, 1}, {15, 2}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 15);
    check_tree(f, res);
    CHECK(res.trace.branch == "b-three-legs");
    // The first class is reached through its non-neighbor 13, not 0.
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{1, 2, 3, 5, 8, 9, 10, 11, 13, 15});
}

TEST_CASE("outer vertex bridging two lower classes") {
    auto f = smallest_cubic(1, {{12, 0}, {12, 1}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "b-pair-lower");
    CHECK(res.trace.q_path.vertices == std::vector<Vertex>{12});
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 1, 2, 3, 4, 8, 9, 10, 11, 12});
}

TEST_CASE("outer walk bridging two lower classes") {
    auto f = smallest_cubic(2, {{13, 0}, {12, 13}, {12, 1}});
    f.sp.b[0].insert(13);
    f.domain.insert(13);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "b-pair-lower");
    CHECK(res.trace.q_path.vertices == std::vector<Vertex>{13, 12});
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 1, 2, 3, 4, 8, 9, 10, 11, 12, 13});
}

TEST_CASE("outer vertex bridging a class and its pair") {
    auto f = smallest_cubic(1, {{12, 0}, {12, 4}});
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "b-pair-upper");
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 1, 2, 3, 4, 8, 9, 10, 11, 12});
}

TEST_CASE("outer walk bridging a class and its pair") {
    auto f = smallest_cubic(3, {{13, 0}, {14, 4}, {12, 13}, {12, 14}});
    f.sp.b[0].insert(13);
    f.sp.b[1].insert(14);
    f.domain.insert(13);
    f.domain.insert(14);
    REQUIRE(validate_cubic(f.g, f.sp, f.domain).empty());
    auto res = augment_cubic(f.g, f.sp, f.domain, 12);
    check_tree(f, res);
    CHECK(res.trace.branch == "b-pair-upper");
    CHECK(res.trace.q_path.vertices == std::vector<Vertex>{13, 12, 14});
    CHECK(res.tree.vertices.to_vector() ==
          std::vector<Vertex>{0, 1, 2, 3, 4, 8, 9, 10, 11, 12, 13, 14});
}
