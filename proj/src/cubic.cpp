#include "fourtree/cubic.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>

#include "fourtree/three_in_tree.hpp"

namespace fourtree {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

bool complete_between(const Graph& g, const VertexSet& from, const VertexSet& to,
                      std::pair<Vertex, Vertex>* witness) {
    for (Vertex v : from.to_vector()) {
        int hits = 0;
        for (Vertex u : g.adj[v])
            if (to.contains(u)) ++hits;
        int want = to.size() - (to.contains(v) ? 1 : 0);
        if (hits < want) {
            if (witness) {
                for (Vertex t : to.to_vector())
                    if (t != v && !g.has_edge(v, t)) {
                        *witness = {v, t};
                        break;
                    }
            }
            return false;
        }
    }
    return true;
}

bool anticomplete_between(const Graph& g, const VertexSet& from, const VertexSet& to,
                          std::pair<Vertex, Vertex>* witness) {
    for (Vertex v : from.to_vector())
        for (Vertex u : g.adj[v])
            if (to.contains(u)) {
                if (witness) *witness = {v, u};
                return false;
            }
    return true;
}

bool connected_within(const Graph& g, const VertexSet& part) {
    auto verts = part.to_vector();
    if (verts.empty()) return true;
    VertexSet seen(g.n);
    std::queue<Vertex> q;
    q.push(verts[0]);
    seen.insert(verts[0]);
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.adj[v])
            if (part.contains(u) && !seen.contains(u)) {
                seen.insert(u);
                ++reached;
                q.push(u);
            }
    }
    return reached == (int)verts.size();
}

}  // namespace

std::vector<Violation> validate_cubic(const Graph& g, const CubicSplit& split,
                                      const VertexSet& domain) {
    std::vector<Violation> out;
    const auto& A = split.a;
    const auto& B = split.b;
    const auto& S = split.s;

    // Items 1+2: coverage and disjointness.
    std::vector<int> part(g.n, -1);  // 0..3 A, 4..7 B, 8..15 S, 16 R
    auto place = [&](const VertexSet& vs, int id, const std::string& name) {
        for (Vertex v : vs.to_vector()) {
            if (v >= g.n) {
                out.push_back({1, name + " holds vertex " + vname(v) + " outside the graph"});
                continue;
            }
            if (part[v] != -1)
                out.push_back({2, "vertex " + vname(v) + " appears in two parts"});
            else
                part[v] = id;
            if (!domain.contains(v))
                out.push_back({1, name + " holds vertex " + vname(v) + " outside the domain"});
        }
    };
    for (int i = 0; i < 4; ++i) place(A[i], i, "A" + std::to_string(i + 1));
    for (int i = 0; i < 4; ++i) place(B[i], 4 + i, "B" + std::to_string(i + 1));
    for (int i = 0; i < 8; ++i) place(S[i], 8 + i, "S" + std::to_string(i + 1));
    place(split.r, 16, "R");
    for (Vertex v : domain.to_vector())
        if (v < g.n && part[v] == -1) {
            out.push_back({1, "domain vertex " + vname(v) + " not placed in any part"});
            break;
        }

    // Item 3: terminals.
    for (int i = 0; i < 4; ++i) {
        Vertex x = split.terminals[i];
        if (x < 0 || x >= g.n || !A[i].contains(x))
            out.push_back({3, "terminal " + std::to_string(i + 1) + " (" + vname(x) +
                                  ") not inside A" + std::to_string(i + 1)});
    }

    // Item 4: all S-parts stable.
    for (int i = 0; i < 8; ++i) {
        std::pair<Vertex, Vertex> w;
        if (!anticomplete_between(g, S[i], S[i], &w))
            out.push_back({4, "edge " + vname(w.first) + "-" + vname(w.second) + " inside S" +
                                  std::to_string(i + 1)});
    }

    // Item 5: S1..S4 nonempty.
    for (int i = 0; i < 4; ++i)
        if (S[i].empty()) out.push_back({5, "S" + std::to_string(i + 1) + " is empty"});

    // Item 6: at most one of S5..S8 empty.
    {
        int empties = 0;
        for (int i = 4; i < 8; ++i)
            if (S[i].empty()) ++empties;
        if (empties > 1)
            out.push_back({6, std::to_string(empties) + " of the upper S-parts are empty"});
    }

    // Item 7: S_i complete to the upper layer minus its partner.
    for (int i = 0; i < 4; ++i) {
        VertexSet target(g.n);
        for (int j = 4; j < 8; ++j)
            if (j != i + 4) target |= S[j];
        std::pair<Vertex, Vertex> w;
        if (!complete_between(g, S[i], target, &w))
            out.push_back({7, "S" + std::to_string(i + 1) +
                                  " not complete to the upper S-layer minus S" +
                                  std::to_string(i + 5) + ": missing " + vname(w.first) + "-" +
                                  vname(w.second)});
    }

    // Item 8: S_i anticomplete to S_{i+4}.
    for (int i = 0; i < 4; ++i) {
        std::pair<Vertex, Vertex> w;
        if (!anticomplete_between(g, S[i], S[i + 4], &w))
            out.push_back({8, "edge " + vname(w.first) + "-" + vname(w.second) + " between S" +
                                  std::to_string(i + 1) + " and S" + std::to_string(i + 5)});
    }

    // Items 9, 10: each layer pairwise anticomplete.
    for (int base : {0, 4})
        for (int i = base; i < base + 4; ++i)
            for (int j = i + 1; j < base + 4; ++j) {
                std::pair<Vertex, Vertex> w;
                if (!anticomplete_between(g, S[i], S[j], &w))
                    out.push_back({base == 0 ? 9 : 10, "edge " + vname(w.first) + "-" +
                                                           vname(w.second) + " between S" +
                                                           std::to_string(i + 1) + " and S" +
                                                           std::to_string(j + 1)});
            }

    // Item 11: N(A_i) = S_i, both directions.
    for (int i = 0; i < 4; ++i) {
        bool hit = false;
        for (Vertex v : A[i].to_vector()) {
            for (Vertex u : g.adj[v])
                if (domain.contains(u) && !A[i].contains(u) && !S[i].contains(u)) {
                    out.push_back({11, "A" + std::to_string(i + 1) + " vertex " + vname(v) +
                                           " has neighbor " + vname(u) + " outside S" +
                                           std::to_string(i + 1)});
                    hit = true;
                    break;
                }
            if (hit) break;
        }
        for (Vertex s : S[i].to_vector()) {
            bool has = false;
            for (Vertex u : g.adj[s])
                if (A[i].contains(u)) { has = true; break; }
            if (!has) {
                out.push_back({11, "S" + std::to_string(i + 1) + " vertex " + vname(s) +
                                       " has no neighbor in A" + std::to_string(i + 1)});
                break;
            }
        }
    }

    // Item 12: N(B_i) within S_i plus the S-vertices adjacent to S_i.
    {
        VertexSet s_union(g.n);
        for (int j = 0; j < 8; ++j) s_union |= S[j];
        for (int i = 0; i < 4; ++i) {
            VertexSet allowed = S[i];
            for (Vertex s : S[i].to_vector())
                for (Vertex u : g.adj[s])
                    if (s_union.contains(u)) allowed.insert(u);
            bool hit = false;
            for (Vertex v : B[i].to_vector()) {
                for (Vertex u : g.adj[v])
                    if (domain.contains(u) && !B[i].contains(u) && !allowed.contains(u)) {
                        out.push_back({12, "B" + std::to_string(i + 1) + " vertex " + vname(v) +
                                               " has illegal neighbor " + vname(u)});
                        hit = true;
                        break;
                    }
                if (hit) break;
            }
        }
    }

    // Item 13: N(R) within the upper S-layer.
    {
        bool hit = false;
        for (Vertex v : split.r.to_vector()) {
            for (Vertex u : g.adj[v])
                if (domain.contains(u) && !split.r.contains(u) && !S[4].contains(u) &&
                    !S[5].contains(u) && !S[6].contains(u) && !S[7].contains(u)) {
                    out.push_back({13, "R vertex " + vname(v) + " has neighbor " + vname(u) +
                                           " outside the upper S-layer"});
                    hit = true;
                    break;
                }
            if (hit) break;
        }
    }

    // Item 14: A-parts connected.
    for (int i = 0; i < 4; ++i)
        if (!connected_within(g, A[i]))
            out.push_back({14, "A" + std::to_string(i + 1) + " is not connected"});

    return out;
}

Path cubic_path_to_terminal(const Graph& g, const CubicSplit& split, int i, Vertex s) {
    if (i < 0 || i >= 4) throw std::invalid_argument("part index out of range");
    if (s < 0 || s >= g.n || (!split.s[i].contains(s) && !split.a[i].contains(s)))
        throw std::invalid_argument("vertex " + vname(s) + " not in S" + std::to_string(i + 1) +
                                    " or A" + std::to_string(i + 1));
    VertexSet allowed = split.a[i];
    allowed.insert(s);
    auto p = bfs_path(g, s, VertexSet::of(g.n, {split.terminals[i]}), allowed);
    if (!p) throw std::invalid_argument("no path to terminal: split invalid");
    return *p;
}

// ===== augmentation ========================================================

namespace {

using Perm4 = std::array<int, 4>;

Perm4 compose(const Perm4& p, const Perm4& q) {
    Perm4 out;
    for (int k = 0; k < 4; ++k) out[k] = p[q[k]];
    return out;
}

// Relabeled copy: part k of the output is part perm[k] of the input,
// with the paired upper class carried along.
CubicSplit permuted(const CubicSplit& s, const Perm4& perm) {
    CubicSplit out;
    out.r = s.r;
    for (int k = 0; k < 4; ++k) {
        out.a[k] = s.a[perm[k]];
        out.b[k] = s.b[perm[k]];
        out.s[k] = s.s[perm[k]];
        out.s[4 + k] = s.s[4 + perm[k]];
        out.terminals[k] = s.terminals[perm[k]];
    }
    return out;
}

CubicSplit unpermuted(const CubicSplit& n, const Perm4& perm) {
    CubicSplit out;
    out.r = n.r;
    for (int k = 0; k < 4; ++k) {
        out.a[perm[k]] = n.a[k];
        out.b[perm[k]] = n.b[k];
        out.s[perm[k]] = n.s[k];
        out.s[4 + perm[k]] = n.s[4 + k];
        out.terminals[perm[k]] = n.terminals[k];
    }
    return out;
}

Vertex min_of(const VertexSet& vs) {
    auto v = vs.to_vector();
    return v.empty() ? -1 : v.front();
}

// Augmentation state. All case analysis runs on a normalized copy of
// the split (the relevant part moved into a fixed slot, upper classes
// transported alongside); results are converted back at the end.
struct CubicAug {
    const Graph& g;
    const CubicSplit& original;
    const VertexSet& domain;
    Vertex v;

    CubicSplit sq;  // normalized view
    Perm4 perm{0, 1, 2, 3};
    CubicAugmentTrace trace;

    // Distance from the part's terminal inside a[i]; built on demand.
    std::array<std::vector<int>, 4> dist;
    std::array<bool, 4> dist_ready{};

    CubicAug(const Graph& graph, const CubicSplit& split, const VertexSet& dom, Vertex vv)
        : g(graph), original(split), domain(dom), v(vv) {
        sq = original;
        trace.v = v;
        trace.complete_set = VertexSet(g.n);
        trace.y = VertexSet(g.n);
        trace.y1 = VertexSet(g.n);
        trace.y2 = VertexSet(g.n);
        trace.y3 = VertexSet(g.n);
    }

    void apply(const Perm4& p) {
        sq = permuted(sq, p);
        perm = compose(perm, p);
        dist_ready = {false, false, false, false};
    }

    const std::vector<int>& part_dist(int i) {
        if (!dist_ready[i]) {
            dist[i].assign(g.n, -1);
            std::queue<Vertex> q;
            Vertex x = sq.terminals[i];
            dist[i][x] = 0;
            q.push(x);
            while (!q.empty()) {
                Vertex y = q.front();
                q.pop();
                for (Vertex u : g.adj[y])
                    if (sq.a[i].contains(u) && dist[i][u] < 0) {
                        dist[i][u] = dist[i][y] + 1;
                        q.push(u);
                    }
            }
            dist_ready[i] = true;
        }
        return dist[i];
    }

    // |path_to_terminal| for a vertex of a[i] or s[i].
    int rank_of(int i, Vertex u) {
        const auto& d = part_dist(i);
        if (sq.a[i].contains(u)) return d[u] + 1;
        int best = -1;
        for (Vertex t : g.adj[u])
            if (sq.a[i].contains(t) && d[t] >= 0 && (best < 0 || d[t] < best)) best = d[t];
        if (best < 0) throw std::logic_error("rank query on vertex with no entry into the part");
        return best + 2;
    }

    Vertex best_head(int i, const std::vector<Vertex>& candidates) {
        Vertex best = -1;
        int best_rank = 0;
        for (Vertex c : candidates) {
            int r = rank_of(i, c);
            if (best < 0 || r < best_rank || (r == best_rank && c < best)) {
                best = c;
                best_rank = r;
            }
        }
        return best;
    }

    VertexSet path_set(const Path& p) const { return VertexSet::of(g.n, p.vertices); }

    Path leg(int i, Vertex head) { return cubic_path_to_terminal(g, sq, i, head); }

    // Sorted neighbors of u inside `part`, restricted to the domain.
    std::vector<Vertex> nbrs_in(Vertex u, const VertexSet& part) const {
        std::vector<Vertex> out;
        for (Vertex t : g.adj[u])
            if (domain.contains(t) && part.contains(t)) out.push_back(t);
        return out;
    }
    bool touches(Vertex u, const VertexSet& part) const {
        for (Vertex t : g.adj[u])
            if (domain.contains(t) && part.contains(t)) return true;
        return false;
    }
    bool complete_to(Vertex u, const VertexSet& part) const {
        int hits = 0;
        for (Vertex t : g.adj[u])
            if (domain.contains(t) && part.contains(t)) ++hits;
        return hits == part.size();
    }

    VertexSet br_union() const {
        VertexSet u = sq.r;
        for (int i = 0; i < 4; ++i) u |= sq.b[i];
        return u;
    }

    struct Scan {
        std::optional<Vertex> hit;  // first dequeued vertex with a contact
        Path q;                     // path v .. hit, valid when hit is set
        VertexSet visited;          // everything dequeued before stopping
    };

    // BFS from v through `allowed` (plus v itself); stops at the first
    // dequeued vertex with a neighbor in `contact`. FIFO over sorted
    // adjacency, so ties always resolve toward smaller ids.
    Scan scan_from_v(const VertexSet& allowed, const VertexSet& contact) {
        Scan out{std::nullopt, Path{}, VertexSet(g.n)};
        std::vector<Vertex> parent(g.n, -1);
        VertexSet seen(g.n);
        std::queue<Vertex> q;
        seen.insert(v);
        q.push(v);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            out.visited.insert(u);
            for (Vertex t : g.adj[u])
                if (domain.contains(t) && contact.contains(t)) {
                    out.hit = u;
                    std::vector<Vertex> rev;
                    for (Vertex c = u; c != -1; c = parent[c]) rev.push_back(c);
                    std::reverse(rev.begin(), rev.end());
                    out.q = Path{rev};
                    return out;
                }
            for (Vertex t : g.adj[u])
                if (allowed.contains(t) && !seen.contains(t)) {
                    seen.insert(t);
                    parent[t] = u;
                    q.push(t);
                }
        }
        return out;
    }

    VertexSet reach_from_v(const VertexSet& allowed) {
        VertexSet seen(g.n);
        std::queue<Vertex> q;
        seen.insert(v);
        q.push(v);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex t : g.adj[u])
                if (allowed.contains(t) && !seen.contains(t)) {
                    seen.insert(t);
                    q.push(t);
                }
        }
        return seen;
    }

    CubicAugmentResult finish_tree(VertexSet verts, const std::string& branch) {
        trace.branch = branch;
        InducedTree t{std::move(verts), {original.terminals[0], original.terminals[1],
                                         original.terminals[2], original.terminals[3]}};
        VertexSet dom_v = domain;
        dom_v.insert(v);
        VertexSet extra = t.vertices;
        extra -= dom_v;
        if (!extra.empty()) throw std::logic_error("tree uses vertices outside domain+v");
        if (!is_induced_tree(g, t.vertices))
            throw std::logic_error("produced set is not an induced tree");
        for (Vertex x : t.required)
            if (!t.vertices.contains(x)) throw std::logic_error("tree misses a terminal");
        CubicAugmentResult res;
        res.kind = CubicAugmentResult::Kind::FoundTree;
        res.tree = std::move(t);
        res.domain = dom_v;
        trace.symmetry = perm;
        res.trace = trace;
        return res;
    }

    CubicAugmentResult finish_cubic(CubicSplit ns, const std::string& branch) {
        trace.branch = branch;
        VertexSet nd = domain;
        nd.insert(v);
        CubicSplit out = unpermuted(ns, perm);
        VertexSet got(g.n);
        for (int i = 0; i < 4; ++i) {
            got |= out.a[i];
            got |= out.b[i];
        }
        for (int i = 0; i < 8; ++i) got |= out.s[i];
        got |= out.r;
        if (got != nd) throw std::logic_error("grown cubic does not cover exactly domain+v");
        auto bad = validate_cubic(g, out, nd);
        if (!bad.empty())
            throw std::logic_error("grown cubic fails item " + std::to_string(bad[0].item) + ": " +
                                   bad[0].message);
        CubicAugmentResult res;
        res.kind = CubicAugmentResult::Kind::GrewCubic;
        res.split = std::move(out);
        res.domain = nd;
        trace.symmetry = perm;
        res.trace = trace;
        return res;
    }

    CubicAugmentResult run();
    CubicAugmentResult grow_anchored(const std::vector<std::pair<int, Vertex>>& acontacts);
    CubicAugmentResult cascade_anchored(Vertex w, const Path& q, Vertex anchor);
    CubicAugmentResult one_side(Vertex w, const Path& q, Vertex anchor);
    CubicAugmentResult comp_tree(Vertex w, const Path& q, Vertex anchor);
    CubicAugmentResult grow_complete(int exempt);
    CubicAugmentResult grow_outer();
    CubicAugmentResult three_legs(const std::vector<int>& touched);
    CubicAugmentResult pair_search();
};

CubicAugmentResult CubicAug::run() {
    // Contact with an A-part: grow from there.
    std::vector<std::pair<int, Vertex>> acontacts;
    for (Vertex u : g.adj[v])
        if (domain.contains(u))
            for (int i = 0; i < 4; ++i)
                if (original.a[i].contains(u)) acontacts.push_back({i, u});
    if (!acontacts.empty()) return grow_anchored(acontacts);

    // Complete to three of the four lower classes: v acts like a member
    // of the remaining pair class.
    for (int i = 0; i < 4; ++i) {
        bool all = true;
        for (int j = 0; j < 4 && all; ++j)
            if (j != i) all = complete_to(v, original.s[j]);
        if (all) return grow_complete(i);
    }

    return grow_outer();
}

CubicAugmentResult CubicAug::grow_anchored(const std::vector<std::pair<int, Vertex>>& acontacts) {
    // Anchor: the A-contact closest to its terminal (rank, then part
    // index, then id); its part moves into slot 0.
    int anchor_idx = -1, anchor_rank = 0;
    Vertex anchor = -1;
    for (int i = 0; i < 4; ++i) {
        std::vector<Vertex> cand;
        for (auto& [p, u] : acontacts)
            if (p == i) cand.push_back(u);
        if (cand.empty()) continue;
        Vertex b = best_head(i, cand);
        int r = rank_of(i, b);
        if (anchor_idx < 0 || r < anchor_rank) {
            anchor_idx = i;
            anchor = b;
            anchor_rank = r;
        }
    }
    Perm4 to_front{anchor_idx, 0, 0, 0};
    for (int i = 0, k = 1; i < 4; ++i)
        if (i != anchor_idx) to_front[k++] = i;
    apply(to_front);

    // Sweep everything reachable through B and R for a contact with the
    // far parts, the far lower classes, or the anchored pair class.
    VertexSet allowed = br_union();
    allowed.insert(v);
    VertexSet contact(g.n);
    for (int k = 1; k < 4; ++k) {
        contact |= sq.a[k];
        contact |= sq.s[k];
    }
    contact |= sq.s[4];
    Scan sc = scan_from_v(allowed, contact);
    if (sc.hit) return cascade_anchored(*sc.hit, sc.q, anchor);

    // The reachable outer vertices that are already complete to every
    // far upper class behave like S1-vertices.
    VertexSet upper3 = sq.s[5];
    upper3 |= sq.s[6];
    upper3 |= sq.s[7];
    VertexSet pool = allowed;
    VertexSet C(g.n);
    for (Vertex u : pool.to_vector())
        if (complete_to(u, upper3)) C.insert(u);
    trace.complete_set = C;

    if (C.contains(v)) {
        // v itself qualifies: it joins S1 and drags its whole flock
        // into B1.
        VertexSet Y = reach_from_v(allowed);
        trace.y = Y;
        CubicSplit ns = sq;
        for (int i = 0; i < 4; ++i) ns.b[i] -= Y;
        ns.r -= Y;
        VertexSet rest = Y;
        rest.erase(v);
        ns.b[0] |= rest;
        ns.s[0].insert(v);
        return finish_cubic(ns, "a-into-s1");
    }

    // Reach for a far upper class while avoiding the complete vertices.
    VertexSet allowed2 = allowed;
    allowed2 -= C;
    Scan tc = scan_from_v(allowed2, upper3);
    if (tc.hit) return comp_tree(*tc.hit, tc.q, anchor);

    // Nothing outside C sees the far upper classes: the chunk around v
    // joins A1, its C-frontier joins S1, the remainder joins B1.
    VertexSet Y = reach_from_v(allowed);
    VertexSet Y1 = tc.visited;
    VertexSet Y2(g.n);
    for (Vertex u : C.to_vector()) {
        bool adj = false;
        for (Vertex x : g.adj[u])
            if (Y1.contains(x)) {
                adj = true;
                break;
            }
        if (adj) Y2.insert(u);
    }
    VertexSet Y3 = Y;
    Y3 -= Y1;
    Y3 -= Y2;
    trace.y = Y;
    trace.y1 = Y1;
    trace.y2 = Y2;
    trace.y3 = Y3;
    VertexSet legal = Y1;
    legal |= Y2;
    legal |= sq.a[0];
    legal |= sq.s[0];
    for (Vertex u : Y1.to_vector())
        for (Vertex x : g.adj[u])
            if ((domain.contains(x) || x == v) && !legal.contains(x))
                throw std::logic_error("absorbed chunk touches forbidden structure");
    CubicSplit ns = sq;
    for (int i = 0; i < 4; ++i) ns.b[i] -= Y;
    ns.r -= Y;
    ns.a[0] |= Y1;
    ns.s[0] |= Y2;
    ns.b[0] |= Y3;
    return finish_cubic(ns, "a-absorb");
}

CubicAugmentResult CubicAug::cascade_anchored(Vertex w, const Path& q, Vertex anchor) {
    trace.q_path = q;
    // Far sides (part or its lower class) that w touches.
    std::vector<int> hits;
    for (int k = 1; k < 4; ++k)
        if (touches(w, sq.a[k]) || touches(w, sq.s[k])) hits.push_back(k);

    if (hits.size() == 3) {
        if (w != v) throw std::logic_error("multi-side contact off the new vertex");
        VertexSet t = path_set(leg(0, anchor));
        t.insert(v);
        for (int k = 1; k < 4; ++k) {
            std::vector<Vertex> cand = nbrs_in(v, sq.a[k]);
            for (Vertex x : nbrs_in(v, sq.s[k])) cand.push_back(x);
            t |= path_set(leg(k, best_head(k, cand)));
        }
        return finish_tree(t, "a-three-sides");
    }

    if (hits.size() == 2) {
        if (w != v) throw std::logic_error("multi-side contact off the new vertex");
        apply(Perm4{0, hits[0], hits[1], 6 - hits[0] - hits[1]});
        // The hub sits in part 2's pair class; swap the hit parts if
        // that class is empty (at most one upper class is).
        if (sq.s[6].empty()) apply(Perm4{0, 2, 1, 3});
        std::vector<Vertex> cand1 = nbrs_in(v, sq.a[1]);
        for (Vertex x : nbrs_in(v, sq.s[1])) cand1.push_back(x);
        Vertex a2 = best_head(1, cand1);
        std::vector<Vertex> cand2 = nbrs_in(v, sq.a[2]);
        for (Vertex x : nbrs_in(v, sq.s[2])) cand2.push_back(x);
        Vertex h3 = best_head(2, cand2);
        Vertex s7 = min_of(sq.s[6]);
        VertexSet t = path_set(leg(0, anchor));
        t |= path_set(leg(2, h3));
        t |= path_set(leg(3, min_of(sq.s[3])));
        t.insert(s7);
        if (!g.has_edge(v, s7)) {
            Vertex s2 = sq.s[1].contains(a2) ? a2 : min_of(sq.s[1]);
            VertexSet inside = sq.a[1];
            inside.insert(v);
            inside.insert(s2);
            InducedTree t2 = tree_covering_three(g, sq.terminals[1], v, s2, inside);
            t |= t2.vertices;
            return finish_tree(t, "a-two-sides");
        }
        if (!sq.a[1].contains(a2))
            throw std::logic_error("direct bridge without an A-side contact");
        t.insert(v);
        t |= path_set(leg(1, a2));
        return finish_tree(t, "a-two-sides-direct");
    }

    if (hits.size() == 1) {
        Perm4 p{0, hits[0], 0, 0};
        for (int i = 1, k = 2; i < 4; ++i)
            if (i != hits[0]) p[k++] = i;
        apply(p);
        return one_side(w, q, anchor);
    }

    // No side hit at all: the sweep stopped on a contact with the
    // anchored pair class.
    std::vector<Vertex> s5c = nbrs_in(w, sq.s[4]);
    if (s5c.empty()) throw std::logic_error("sweep stopped without any contact");
    VertexSet t = path_set(leg(0, anchor));
    t |= path_set(q);
    t.insert(s5c.front());
    t |= path_set(leg(1, min_of(sq.s[1])));
    t |= path_set(leg(2, min_of(sq.s[2])));
    t |= path_set(leg(3, min_of(sq.s[3])));
    return finish_tree(t, "a-spine");
}

CubicAugmentResult CubicAug::one_side(Vertex w, const Path& q, Vertex anchor) {
    // A contact from the walk into part 1's pair class bridges three
    // parts at once.
    for (Vertex qv : q.vertices) {
        std::vector<Vertex> c = nbrs_in(qv, sq.s[5]);
        if (c.empty()) continue;
        Vertex s6 = c.front();
        VertexSet inside = sq.a[0];
        for (Vertex x : q.vertices) inside.insert(x);
        inside |= sq.s[1];
        inside |= sq.a[1];
        inside.insert(s6);
        InducedTree t6 = tree_covering_three(g, sq.terminals[0], sq.terminals[1], s6, inside);
        VertexSet t = t6.vertices;
        t |= path_set(leg(2, min_of(sq.s[2])));
        t |= path_set(leg(3, min_of(sq.s[3])));
        return finish_tree(t, "a-one-side-upper-bridge");
    }

    std::vector<Vertex> cand = nbrs_in(w, sq.a[1]);
    for (Vertex x : nbrs_in(w, sq.s[1])) cand.push_back(x);
    Vertex a2 = best_head(1, cand);

    if (!sq.s[4].empty()) {
        // Hub through the anchored pair class.
        Vertex s5 = min_of(sq.s[4]);
        VertexSet t = path_set(leg(0, anchor));
        t |= path_set(leg(2, min_of(sq.s[2])));
        t |= path_set(leg(3, min_of(sq.s[3])));
        t.insert(s5);
        if (!g.has_edge(w, s5)) {
            Vertex s2 = sq.s[1].contains(a2) ? a2 : min_of(sq.s[1]);
            VertexSet inside = sq.a[1];
            inside.insert(w);
            inside.insert(s2);
            InducedTree t2 = tree_covering_three(g, sq.terminals[1], w, s2, inside);
            t |= path_set(q);
            t |= t2.vertices;
            return finish_tree(t, "a-one-side-hub");
        }
        if (w != v || !sq.a[1].contains(a2))
            throw std::logic_error("direct hub without an A-side contact at the new vertex");
        t.insert(v);
        t |= path_set(leg(1, a2));
        return finish_tree(t, "a-one-side-hub-direct");
    }

    // The anchored pair class is empty, so every other upper class is
    // nonempty.
    if (sq.s[5].empty() || sq.s[6].empty() || sq.s[7].empty())
        throw std::logic_error("two empty upper classes");

    Vertex u = -1;
    for (Vertex qv : q.vertices)
        if (touches(qv, sq.s[6]) || touches(qv, sq.s[7])) {
            u = qv;
            break;
        }
    if (u < 0) {
        // The walk sees neither far pair class: hang parts 3 and 4 off
        // two hubs that both attach to the same S2-vertex.
        Vertex s2 = sq.s[1].contains(a2) ? a2 : min_of(sq.s[1]);
        VertexSet inside = sq.a[1];
        inside.insert(w);
        inside.insert(s2);
        InducedTree t2 = tree_covering_three(g, sq.terminals[1], w, s2, inside);
        VertexSet t = path_set(leg(0, anchor));
        t |= path_set(q);
        t |= t2.vertices;
        t |= path_set(leg(2, min_of(sq.s[2])));
        t |= path_set(leg(3, min_of(sq.s[3])));
        t.insert(min_of(sq.s[6]));
        t.insert(min_of(sq.s[7]));
        return finish_tree(t, "a-one-side-double-hub");
    }

    // Chain from the first walk vertex that reaches a far pair class.
    if (!touches(u, sq.s[6])) apply(Perm4{0, 1, 3, 2});
    Vertex s7 = nbrs_in(u, sq.s[6]).front();
    Vertex s6 = min_of(sq.s[5]);
    Vertex s2m = min_of(sq.s[1]);
    Path qp;
    for (Vertex qv : q.vertices) {
        qp.vertices.push_back(qv);
        if (qv == u) break;
    }
    Path p2 = leg(1, s2m);
    VertexSet p2set = path_set(p2);
    bool blocked = false;
    for (Vertex qv : qp.vertices) {
        for (Vertex x : g.adj[qv])
            if (p2set.contains(x)) {
                blocked = true;
                break;
            }
        if (blocked) break;
    }
    if (!blocked) {
        VertexSet t = path_set(leg(0, anchor));
        t |= path_set(qp);
        t |= p2set;
        t |= path_set(leg(2, min_of(sq.s[2])));
        t |= path_set(leg(3, min_of(sq.s[3])));
        t.insert(s6);
        t.insert(s7);
        return finish_tree(t, "a-one-side-chain");
    }
    if (u != w || w != v || !sq.a[1].contains(a2))
        throw std::logic_error("blocked chain away from the new vertex");
    VertexSet t = path_set(leg(0, anchor));
    t.insert(v);
    t |= path_set(leg(1, a2));
    t |= path_set(leg(2, min_of(sq.s[2])));
    t |= path_set(leg(3, min_of(sq.s[3])));
    t.insert(s6);
    t.insert(s7);
    return finish_tree(t, "a-one-side-chain-direct");
}

CubicAugmentResult CubicAug::comp_tree(Vertex w, const Path& q, Vertex anchor) {
    trace.q_path = q;
    // w misses part of some far upper class and reaches another: put
    // the missed class into slot 5 and the reached one into slot 6.
    int jc = -1, kc = -1;
    for (int k = 5; k < 8 && jc < 0; ++k) {
        if (nbrs_in(w, sq.s[k]).empty()) continue;
        for (int j = 5; j < 8; ++j) {
            if (j == k) continue;
            bool has_non = false;
            for (Vertex x : sq.s[j].to_vector())
                if (!g.has_edge(w, x)) {
                    has_non = true;
                    break;
                }
            if (has_non) {
                jc = j;
                kc = k;
                break;
            }
        }
    }
    if (jc < 0) throw std::logic_error("no class pair for the bridge tree");
    Perm4 p{0, jc - 4, kc - 4, 0};
    p[3] = 6 - (jc - 4) - (kc - 4);
    apply(p);

    Vertex s7 = nbrs_in(w, sq.s[6]).front();
    Vertex s6 = -1;
    for (Vertex x : sq.s[5].to_vector())
        if (!g.has_edge(w, x)) {
            s6 = x;
            break;
        }
    if (s6 < 0) throw std::logic_error("missing non-neighbor in the missed class");

    VertexSet t = path_set(leg(0, anchor));
    t |= path_set(q);
    t |= path_set(leg(1, min_of(sq.s[1])));
    t |= path_set(leg(2, min_of(sq.s[2])));
    t |= path_set(leg(3, min_of(sq.s[3])));
    t.insert(s6);
    t.insert(s7);
    return finish_tree(t, "a-comp-tree");
}

CubicAugmentResult CubicAug::grow_complete(int exempt) {
    Perm4 p{0, 0, 0, exempt};
    for (int i = 0, k = 0; i < 4; ++i)
        if (i != exempt) p[k++] = i;
    apply(p);

    // Any direct contact with the exempt class closes a tree on four
    // legs around v.
    std::vector<Vertex> direct = nbrs_in(v, sq.s[3]);
    if (!direct.empty()) {
        VertexSet t(g.n);
        t.insert(v);
        t |= path_set(leg(3, direct.front()));
        for (int k = 0; k < 3; ++k) t |= path_set(leg(k, nbrs_in(v, sq.s[k]).front()));
        return finish_tree(t, "cs-four-legs");
    }

    // Walk through B and R toward the exempt class.
    VertexSet allowed = br_union();
    allowed.insert(v);
    Scan sc = scan_from_v(allowed, sq.s[3]);
    if (sc.hit) {
        Vertex w = *sc.hit;
        trace.q_path = sc.q;
        if (!sq.b[3].contains(w))
            throw std::logic_error("exempt-class contact outside its B-class");
        VertexSet t = path_set(sc.q);
        t |= path_set(leg(3, nbrs_in(w, sq.s[3]).front()));
        for (int k = 0; k < 3; ++k) t |= path_set(leg(k, nbrs_in(v, sq.s[k]).front()));
        return finish_tree(t, "cs-spine");
    }

    // No way to the exempt class: v becomes a member of its pair class,
    // and the B-vertices of the exempt part that v can reach lose their
    // anchoring and fall into R.
    VertexSet Y = reach_from_v(allowed);
    trace.y = Y;
    CubicSplit ns = sq;
    ns.s[7].insert(v);
    VertexSet members(g.n);
    for (Vertex u : Y.to_vector())
        if (sq.b[3].contains(u)) members.insert(u);
    VertexSet handled(g.n);
    for (Vertex start : members.to_vector()) {
        if (handled.contains(start)) continue;
        VertexSet comp(g.n);
        std::queue<Vertex> cq;
        comp.insert(start);
        cq.push(start);
        while (!cq.empty()) {
            Vertex cu = cq.front();
            cq.pop();
            for (Vertex x : g.adj[cu])
                if (members.contains(x) && !comp.contains(x)) {
                    comp.insert(x);
                    cq.push(x);
                }
        }
        handled |= comp;
        bool sees_exempt = false;
        for (Vertex cu : comp.to_vector())
            if (touches(cu, sq.s[3])) {
                sees_exempt = true;
                break;
            }
        if (!sees_exempt) {
            ns.b[3] -= comp;
            ns.r |= comp;
        }
    }
    return finish_cubic(ns, "cs-into-s8");
}

CubicAugmentResult CubicAug::grow_outer() {
    std::vector<int> touched;
    for (int k = 0; k < 4; ++k)
        if (touches(v, sq.s[k])) touched.push_back(k);

    if (touched.size() == 4) {
        VertexSet t(g.n);
        t.insert(v);
        for (int k = 0; k < 4; ++k) t |= path_set(leg(k, nbrs_in(v, sq.s[k]).front()));
        return finish_tree(t, "b-four-legs");
    }
    if (touched.size() == 3) return three_legs(touched);
    return pair_search();
}

CubicAugmentResult CubicAug::three_legs(const std::vector<int>& touched) {
    int missed = 6 - touched[0] - touched[1] - touched[2];
    // Slot 0 takes the smallest touched class holding a non-neighbor of
    // v; its head is reached through a hub rather than v itself.
    int role1 = -1;
    for (int k : touched) {
        bool has_non = false;
        for (Vertex x : sq.s[k].to_vector())
            if (!g.has_edge(v, x)) {
                has_non = true;
                break;
            }
        if (has_non) {
            role1 = k;
            break;
        }
    }
    if (role1 < 0) throw std::logic_error("fully adjacent triple should close three classes");
    Perm4 p{role1, 0, 0, missed};
    for (int k = 1; int i : touched)
        if (i != role1) p[k++] = i;
    apply(p);
    // The hub lives in part 1's pair class; swap the other touched
    // parts if it is empty.
    if (sq.s[5].empty()) apply(Perm4{0, 2, 1, 3});
    Vertex s1 = -1;
    for (Vertex x : sq.s[0].to_vector())
        if (!g.has_edge(v, x)) {
            s1 = x;
            break;
        }
    Vertex s6 = min_of(sq.s[5]);
    VertexSet t(g.n);
    t.insert(v);
    t.insert(s6);
    t |= path_set(leg(0, s1));
    t |= path_set(leg(1, nbrs_in(v, sq.s[1]).front()));
    t |= path_set(leg(2, nbrs_in(v, sq.s[2]).front()));
    t |= path_set(leg(3, min_of(sq.s[3])));
    return finish_tree(t, "b-three-legs");
}

CubicAugmentResult CubicAug::pair_search() {
    VertexSet pool = br_union();
    pool.insert(v);
    auto pv = pool.to_vector();
    std::vector<std::array<bool, 8>> touch(g.n);
    for (Vertex u : pv)
        for (int c = 0; c < 8; ++c) touch[u][c] = touches(u, sq.s[c]);

    // Shortest connection between touchers of two classes, over a fixed
    // pair order: the six lower pairs first, then each lower class with
    // its own pair class. Ties keep the earlier pair.
    static constexpr std::array<std::pair<int, int>, 10> kPairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}};
    int best_len = -1, best_pair = -1;
    Path best_path;
    for (int pi = 0; pi < 10; ++pi) {
        auto [ci, cj] = kPairs[pi];
        std::vector<int> d(g.n, -1);
        std::vector<Vertex> parent(g.n, -1);
        std::queue<Vertex> qq;
        for (Vertex u : pv)
            if (touch[u][ci]) {
                d[u] = 0;
                qq.push(u);
            }
        Vertex goal = -1;
        while (!qq.empty()) {
            Vertex u = qq.front();
            qq.pop();
            if (touch[u][cj]) {
                goal = u;
                break;
            }
            for (Vertex x : g.adj[u])
                if (pool.contains(x) && d[x] < 0) {
                    d[x] = d[u] + 1;
                    parent[x] = u;
                    qq.push(x);
                }
        }
        if (goal < 0) continue;
        int len = d[goal] + 1;
        if (best_len < 0 || len < best_len) {
            best_len = len;
            best_pair = pi;
            std::vector<Vertex> rev;
            for (Vertex c = goal; c != -1; c = parent[c]) rev.push_back(c);
            std::reverse(rev.begin(), rev.end());
            best_path = Path{rev};
        }
    }

    if (best_pair >= 0) {
        auto [ci, cj] = kPairs[best_pair];
        trace.q_path = best_path;
        Vertex u = best_path.front(), w = best_path.back();
        if (cj < 4) {
            // Both ends sit on lower classes; a hub from one of the
            // first two pair classes picks up the remaining legs.
            Perm4 p{ci, cj, 0, 0};
            for (int i = 0, k = 2; i < 4; ++i)
                if (i != ci && i != cj) p[k++] = i;
            apply(p);
            VertexSet t = path_set(best_path);
            t |= path_set(leg(0, nbrs_in(u, sq.s[0]).front()));
            t |= path_set(leg(1, nbrs_in(w, sq.s[1]).front()));
            t |= path_set(leg(2, min_of(sq.s[2])));
            t |= path_set(leg(3, min_of(sq.s[3])));
            t.insert(!sq.s[4].empty() ? min_of(sq.s[4]) : min_of(sq.s[5]));
            return finish_tree(t, "b-pair-lower");
        }
        // A lower class connected to its own pair class.
        Perm4 p{ci, 0, 0, 0};
        for (int i = 0, k = 1; i < 4; ++i)
            if (i != ci) p[k++] = i;
        apply(p);
        VertexSet t = path_set(best_path);
        t |= path_set(leg(0, nbrs_in(u, sq.s[0]).front()));
        t.insert(nbrs_in(w, sq.s[4]).front());
        t |= path_set(leg(1, min_of(sq.s[1])));
        t |= path_set(leg(2, min_of(sq.s[2])));
        t |= path_set(leg(3, min_of(sq.s[3])));
        return finish_tree(t, "b-pair-upper");
    }

    // No two classes connect through the outer vertices: everything v
    // reaches joins a single B-class, or R when no lower class is seen.
    VertexSet Y = reach_from_v(pool);
    trace.y = Y;
    std::vector<int> seen_classes;
    for (int k = 0; k < 4; ++k) {
        bool any = false;
        for (Vertex u : Y.to_vector())
            if (touch[u][k]) {
                any = true;
                break;
            }
        if (any) seen_classes.push_back(k);
    }
    if (seen_classes.size() > 1)
        throw std::logic_error("separate lower contacts without a bridge");
    CubicSplit ns = sq;
    for (int i = 0; i < 4; ++i) ns.b[i] -= Y;
    ns.r -= Y;
    if (seen_classes.size() == 1) {
        ns.b[seen_classes[0]] |= Y;
        return finish_cubic(ns, "b-flock-b");
    }
    ns.r |= Y;
    return finish_cubic(ns, "b-flock-r");
}

}  // namespace

CubicAugmentResult augment_cubic(const Graph& g, const CubicSplit& split, const VertexSet& domain,
                                 Vertex v) {
    auto bad = validate_cubic(g, split, domain);
    if (!bad.empty())
        throw std::invalid_argument("input split fails item " + std::to_string(bad[0].item) +
                                    ": " + bad[0].message);
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    if (domain.contains(v)) throw std::invalid_argument("vertex already inside the domain");
    // Triangles touching v would poison every case below; reject now.
    {
        VertexSet nv(g.n);
        for (Vertex u : g.adj[v])
            if (domain.contains(u)) nv.insert(u);
        for (Vertex u : nv.to_vector())
            for (Vertex t : g.adj[u])
                if (t > u && nv.contains(t))
                    throw std::invalid_argument("triangle " + std::to_string(v) + "-" +
                                                std::to_string(u) + "-" + std::to_string(t) +
                                                " touches the new vertex");
    }
    CubicAug aug(g, split, domain, v);
    return aug.run();
}

}  // namespace fourtree
