#include "fourtree/solver.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fourtree/three_in_tree.hpp"

namespace fourtree {

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve((size_t)g.m);
    for (Vertex u = 0; u < g.n; ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) edges.push_back({u, v});
        }
    }
    return edges;
}

VertexSet component_of(const Graph& g, Vertex start) {
    VertexSet comp(g.n);
    comp.insert(start);
    std::queue<Vertex> q;
    q.push(start);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.neighbors(u)) {
            if (!comp.contains(v)) {
                comp.insert(v);
                q.push(v);
            }
        }
    }
    return comp;
}

// Smallest unplaced vertex of the component that touches the domain,
// falling back to the smallest unplaced vertex; -1 when none is left.
Vertex next_vertex(const Graph& g, const VertexSet& comp, const VertexSet& domain) {
    Vertex fallback = -1;
    for (Vertex v : comp.to_vector()) {
        if (domain.contains(v)) continue;
        if (fallback < 0) fallback = v;
        for (Vertex u : g.neighbors(v)) {
            if (domain.contains(u)) return v;
        }
    }
    return fallback;
}

VertexSet path_set(int universe, const Path& p) { return VertexSet::of(universe, p.vertices); }

// Suffix of a leg from (and including) position `from` to the query end.
VertexSet leg_suffix(int universe, const Path& leg, int from) {
    VertexSet s(universe);
    for (int k = from; k < leg.size(); ++k) s.insert(leg.vertices[k]);
    return s;
}

InducedTree checked_tree(const Graph& g, const VertexSet& vertices, const Terminals& t,
                         const char* context) {
    for (Vertex x : t.x) {
        if (!vertices.contains(x)) {
            throw std::logic_error(std::string(context) + ": tree misses a terminal");
        }
    }
    if (!is_induced_tree(g, vertices)) {
        throw std::logic_error(std::string(context) + ": vertex set is not an induced tree");
    }
    InducedTree tree;
    tree.vertices = vertices;
    tree.required.assign(t.x.begin(), t.x.end());
    return tree;
}

}  // namespace

std::pair<Graph, Terminals> attach_terminals(const Graph& g, const std::array<Vertex, 4>& ys) {
    for (Vertex y : ys) {
        if (y < 0 || y >= g.n) {
            throw std::invalid_argument("attach_terminals: query vertex out of range");
        }
    }
    auto edges = edge_list(g);
    Terminals t;
    t.y = ys;
    for (int i = 0; i < 4; ++i) {
        t.x[i] = g.n + i;
        edges.push_back({ys[i], t.x[i]});
    }
    return {build_graph(g.n + 4, edges), t};
}

InducedTree strip_terminals(const InducedTree& tree, const Terminals& t) {
    int original_n = t.x[0];  // pendants were appended after the original vertices
    InducedTree out;
    out.vertices = VertexSet(original_n);
    for (Vertex v : tree.vertices.to_vector()) {
        if (v < original_n) out.vertices.insert(v);
    }
    std::vector<Vertex> req(t.y.begin(), t.y.end());
    std::sort(req.begin(), req.end());
    req.erase(std::unique(req.begin(), req.end()), req.end());
    out.required = req;
    return out;
}

InitialResult initial_phase(const Graph& g, const Terminals& t) {
    // Minimal induced tree over the first three terminals. Each is a
    // degree-1 pendant, hence a leaf of the tree, so it decomposes into
    // a center and three legs.
    InducedTree t3 = tree_covering_three(g, t.x[0], t.x[1], t.x[2]);
    ClawDecomposition claw = decompose_claw(g, t3, t.x[0], t.x[1], t.x[2]);
    Vertex c = claw.center;

    // Shortest walk from the fourth terminal to the tree: targets are
    // the outside vertices with a neighbor in the tree, and interior
    // vertices must have none, so the walk meets the tree only at its
    // last vertex w.
    VertexSet targets(g.n);
    VertexSet outside = g.all_vertices();
    outside -= t3.vertices;
    for (Vertex v : outside.to_vector()) {
        for (Vertex u : g.neighbors(v)) {
            if (t3.vertices.contains(u)) {
                targets.insert(v);
                break;
            }
        }
    }
    std::optional<Path> q = bfs_path(g, t.x[3], targets, outside);
    if (!q) throw std::logic_error("initial_phase: fourth terminal cannot reach the tree");
    Vertex w = q->back();
    VertexSet q_set = path_set(g.n, *q);

    // For each leg, the w-neighbor closest to the query end (if any).
    std::array<int, 3> hit_pos{-1, -1, -1};
    std::vector<int> hits;
    for (int i = 0; i < 3; ++i) {
        const Path& leg = claw.legs[i];
        for (int k = leg.size() - 1; k >= 0; --k) {
            if (g.has_edge(w, leg.vertices[k])) {
                hit_pos[i] = k;
                break;
            }
        }
        if (hit_pos[i] >= 0) hits.push_back(i);
    }

    InitialResult res;
    if (hits.size() == 3) {
        // The walk reaches all three legs: keep each leg's suffix from
        // its closest hit and join everything through w.
        VertexSet tree = q_set;
        for (int i = 0; i < 3; ++i) tree |= leg_suffix(g.n, claw.legs[i], hit_pos[i]);
        res.kind = InitialResult::Kind::FoundTree;
        res.tree = checked_tree(g, tree, t, "initial_phase (three legs)");
        return res;
    }
    if (hits.size() == 1) {
        // Only one leg is touched: rebuild that leg plus w into a
        // minimal tree over {w, center, query}, keep the others whole.
        int i = hits[0];
        VertexSet allowed = path_set(g.n, claw.legs[i]);
        allowed.insert(w);
        InducedTree local = tree_covering_three(g, w, c, claw.legs[i].back(), allowed);
        VertexSet tree = q_set;
        tree |= local.vertices;
        for (int j = 0; j < 3; ++j) {
            if (j != i) tree |= path_set(g.n, claw.legs[j]);
        }
        res.kind = InitialResult::Kind::FoundTree;
        res.tree = checked_tree(g, tree, t, "initial_phase (one leg)");
        return res;
    }
    if (hits.size() != 2) {
        throw std::logic_error("initial_phase: walk endpoint has no tree neighbor");
    }

    int p = hits[0], r = hits[1];
    int mid = 3 - p - r;
    Vertex up = claw.legs[p].vertices[hit_pos[p]];
    Vertex ur = claw.legs[r].vertices[hit_pos[r]];
    if (g.has_edge(up, c) && !g.has_edge(ur, c)) {
        std::swap(p, r);
        std::swap(up, ur);
    }
    if (!g.has_edge(up, c)) {
        // One hit vertex is off the center: route that leg's query
        // through w, rebuild the other hit leg around {w, center,
        // query}, and keep the untouched leg whole.
        VertexSet allowed = path_set(g.n, claw.legs[r]);
        allowed.insert(w);
        InducedTree local = tree_covering_three(g, w, c, claw.legs[r].back(), allowed);
        VertexSet tree = q_set;
        tree |= leg_suffix(g.n, claw.legs[p], hit_pos[p]);
        tree |= local.vertices;
        tree |= path_set(g.n, claw.legs[mid]);
        res.kind = InitialResult::Kind::FoundTree;
        res.tree = checked_tree(g, tree, t, "initial_phase (two legs)");
        return res;
    }

    // Both hits are adjacent to the center: the four vertices
    // (hit, center, other hit, w) form an induced 4-cycle and the legs
    // plus the walk split around it.
    SquareSplit sq;
    int universe = g.n;
    sq.a[0] = leg_suffix(universe, claw.legs[p], hit_pos[p] + 1);
    sq.s[0] = VertexSet::of(universe, {up});
    sq.a[1] = path_set(universe, claw.legs[mid]);
    sq.a[1].erase(c);
    sq.s[1] = VertexSet::of(universe, {c});
    sq.a[2] = leg_suffix(universe, claw.legs[r], hit_pos[r] + 1);
    sq.s[2] = VertexSet::of(universe, {ur});
    sq.a[3] = q_set;
    sq.a[3].erase(w);
    sq.s[3] = VertexSet::of(universe, {w});
    sq.r = VertexSet(universe);
    sq.terminals = {claw.legs[p].back(), claw.legs[mid].back(), claw.legs[r].back(), t.x[3]};

    VertexSet domain = t3.vertices;
    domain |= q_set;
    auto violations = validate_square(g, sq, domain);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "initial_phase: seed split invalid:";
        for (const auto& v : violations) os << " [" << v.item << "] " << v.message;
        throw std::logic_error(os.str());
    }
    res.kind = InitialResult::Kind::GrewSquare;
    res.square = sq;
    res.domain = domain;
    return res;
}

SolveResult four_in_a_tree(const Graph& g, const std::array<Vertex, 4>& ys) {
    if (auto tri = find_triangle(g)) {
        std::ostringstream os;
        os << "four_in_a_tree: graph has a triangle {" << (*tri)[0] << ", " << (*tri)[1] << ", "
           << (*tri)[2] << "}";
        throw std::invalid_argument(os.str());
    }
    auto [wg, t] = attach_terminals(g, ys);

    SolveResult res;
    res.working = wg;
    res.terminals = t;

    VertexSet comp = component_of(wg, t.x[0]);
    for (Vertex x : t.x) {
        if (!comp.contains(x)) {
            res.kind = SolveResult::Kind::Disconnected;
            res.component = comp;
            return res;
        }
    }

    InitialResult initial = initial_phase(wg, t);
    if (initial.kind == InitialResult::Kind::FoundTree) {
        res.kind = SolveResult::Kind::FoundTree;
        res.tree = strip_terminals(initial.tree, t);
        return res;
    }

    SquareSplit sq = initial.square;
    CubicSplit cs;
    VertexSet domain = initial.domain;
    bool cubic_mode = false;

    // Each iteration either finishes or adds at least one vertex to the
    // domain net of evictions, so n^2 steps is a generous cap; running
    // past it means the augmentation stopped making progress.
    long long budget = (long long)wg.n * wg.n + 10;
    for (;;) {
        Vertex v = next_vertex(wg, comp, domain);
        if (v < 0) break;
        if (--budget < 0) throw std::logic_error("four_in_a_tree: augmentation budget exceeded");
        if (!cubic_mode) {
            SquareAugmentResult step = augment_square(wg, sq, domain, v);
            if (step.kind == SquareAugmentResult::Kind::FoundTree) {
                res.kind = SolveResult::Kind::FoundTree;
                res.tree = strip_terminals(step.tree, t);
                return res;
            }
            if (step.kind == SquareAugmentResult::Kind::GrewSquare) {
                sq = step.square;
                domain = step.domain;
            } else {
                cs = step.cubic;
                domain = step.domain;  // may have shed vertices; they get re-queued
                cubic_mode = true;
            }
        } else {
            CubicAugmentResult step = augment_cubic(wg, cs, domain, v);
            if (step.kind == CubicAugmentResult::Kind::FoundTree) {
                res.kind = SolveResult::Kind::FoundTree;
                res.tree = strip_terminals(step.tree, t);
                return res;
            }
            cs = step.split;
            domain = step.domain;
        }
    }

    // Vertices in other components cannot interact with the certificate
    // parts, so they join R and the split covers the whole graph.
    VertexSet rest = wg.all_vertices();
    rest -= comp;
    std::vector<Violation> violations;
    if (cubic_mode) {
        cs.r |= rest;
        violations = validate_cubic(wg, cs, wg.all_vertices());
    } else {
        sq.r |= rest;
        violations = validate_square(wg, sq, wg.all_vertices());
    }
    if (!violations.empty()) {
        std::ostringstream os;
        os << "four_in_a_tree: final certificate invalid:";
        for (const auto& v : violations) os << " [" << v.item << "] " << v.message;
        throw std::logic_error(os.str());
    }
    if (cubic_mode) {
        res.kind = SolveResult::Kind::CubicCertificate;
        res.cubic = cs;
    } else {
        res.kind = SolveResult::Kind::SquareCertificate;
        res.square = sq;
    }
    return res;
}

}  // namespace fourtree
