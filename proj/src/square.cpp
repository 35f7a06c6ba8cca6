#include "fourtree/square.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

#include "fourtree/three_in_tree.hpp"

namespace fourtree {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

// True iff every vertex of from has every vertex of to as a neighbor;
// on failure sets witness to an offending pair. Tolerates overlapping
// or malformed parts (unlike the strict graph helpers).
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

std::vector<Violation> validate_square(const Graph& g, const SquareSplit& split,
                                       const VertexSet& domain) {
    std::vector<Violation> out;
    const auto& A = split.a;
    const auto& S = split.s;

    // Items 1+2: coverage and disjointness via a placement table.
    std::vector<int> part(g.n, -1);  // 0..3 A, 4..7 S, 8 R
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
    for (int i = 0; i < 4; ++i) place(S[i], 4 + i, "S" + std::to_string(i + 1));
    place(split.r, 8, "R");
    for (Vertex v : domain.to_vector())
        if (v < g.n && part[v] == -1) {
            out.push_back({1, "domain vertex " + vname(v) + " not placed in any part"});
            break;
        }

    // Item 3: terminals sit in their A-parts.
    for (int i = 0; i < 4; ++i) {
        Vertex x = split.terminals[i];
        if (x < 0 || x >= g.n || !A[i].contains(x))
            out.push_back({3, "terminal " + std::to_string(i + 1) + " (" + vname(x) +
                                  ") not inside A" + std::to_string(i + 1)});
    }

    // Item 4: S-parts stable.
    for (int i = 0; i < 4; ++i) {
        std::pair<Vertex, Vertex> w;
        if (!anticomplete_between(g, S[i], S[i], &w)) {
            out.push_back({4, "edge " + vname(w.first) + "-" + vname(w.second) + " inside S" +
                                  std::to_string(i + 1)});
        }
    }

    // Item 5: S-parts nonempty.
    for (int i = 0; i < 4; ++i)
        if (S[i].empty()) out.push_back({5, "S" + std::to_string(i + 1) + " is empty"});

    // Item 6: S_i complete to S_{i+1}.
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        std::pair<Vertex, Vertex> w;
        if (!complete_between(g, S[i], S[j], &w))
            out.push_back({6, "S" + std::to_string(i + 1) + " not complete to S" +
                                  std::to_string(j + 1) + ": missing " + vname(w.first) + "-" +
                                  vname(w.second)});
    }

    // Item 7: opposite S-parts anticomplete.
    for (int i : {0, 1}) {
        std::pair<Vertex, Vertex> w;
        if (!anticomplete_between(g, S[i], S[i + 2], &w))
            out.push_back({7, "edge " + vname(w.first) + "-" + vname(w.second) + " between S" +
                                  std::to_string(i + 1) + " and S" + std::to_string(i + 3)});
    }

    // Item 8: N(A_i) = S_i, both directions.
    for (int i = 0; i < 4; ++i) {
        bool hit = false;
        for (Vertex v : A[i].to_vector()) {
            for (Vertex u : g.adj[v])
                if (domain.contains(u) && !A[i].contains(u) && !S[i].contains(u)) {
                    out.push_back({8, "A" + std::to_string(i + 1) + " vertex " + vname(v) +
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
                out.push_back({8, "S" + std::to_string(i + 1) + " vertex " + vname(s) +
                                      " has no neighbor in A" + std::to_string(i + 1)});
                break;
            }
        }
    }

    // Item 9: R sees only the S-layer.
    {
        bool hit = false;
        for (Vertex v : split.r.to_vector()) {
            for (Vertex u : g.adj[v])
                if (domain.contains(u) && !split.r.contains(u) && !S[0].contains(u) &&
                    !S[1].contains(u) && !S[2].contains(u) && !S[3].contains(u)) {
                    out.push_back({9, "R vertex " + vname(v) + " has neighbor " + vname(u) +
                                          " outside the S-layer"});
                    hit = true;
                    break;
                }
            if (hit) break;
        }
    }

    // Item 10: A-parts connected.
    for (int i = 0; i < 4; ++i)
        if (!connected_within(g, A[i]))
            out.push_back({10, "A" + std::to_string(i + 1) + " is not connected"});

    return out;
}

namespace {

using Perm4 = std::array<int, 4>;

// perm maps normalized index -> source index; composing q after p
// yields "apply q to pick from p's frame".
Perm4 compose(const Perm4& p, const Perm4& q) {
    return {p[q[0]], p[q[1]], p[q[2]], p[q[3]]};
}

SquareSplit permuted(const SquareSplit& s, const Perm4& perm) {
    SquareSplit out;
    out.r = s.r;
    for (int k = 0; k < 4; ++k) {
        out.a[k] = s.a[perm[k]];
        out.s[k] = s.s[perm[k]];
        out.terminals[k] = s.terminals[perm[k]];
    }
    return out;
}

SquareSplit unpermuted(const SquareSplit& n, const Perm4& perm) {
    SquareSplit out;
    out.r = n.r;
    for (int k = 0; k < 4; ++k) {
        out.a[perm[k]] = n.a[k];
        out.s[perm[k]] = n.s[k];
        out.terminals[perm[k]] = n.terminals[k];
    }
    return out;
}

CubicSplit unpermuted_cubic(const CubicSplit& n, const Perm4& perm) {
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

// Whole augmentation state; works on a normalized copy of the split
// (anchor part first, reflections as the cases demand) and converts
// back when done.
struct SquareAug {
    const Graph& g;
    const SquareSplit& original;
    const VertexSet& domain;
    Vertex v;

    SquareSplit sq;  // normalized view
    Perm4 perm{0, 1, 2, 3};
    SquareAugmentTrace trace;

    // Distance from the part's terminal inside a[i]; built on demand.
    std::array<std::vector<int>, 4> dist;
    std::array<bool, 4> dist_ready{};

    SquareAug(const Graph& graph, const SquareSplit& split, const VertexSet& dom, Vertex vv)
        : g(graph), original(split), domain(dom), v(vv) {
        trace.v = v;
        trace.complete_set = VertexSet(g.n);
        trace.y = VertexSet(g.n);
        trace.y1 = VertexSet(g.n);
        trace.y2 = VertexSet(g.n);
        trace.y3 = VertexSet(g.n);
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

    void reflect_24() {
        Perm4 f{0, 3, 2, 1};
        sq = permuted(sq, f);
        perm = compose(perm, f);
        std::swap(dist[1], dist[3]);
        std::swap(dist_ready[1], dist_ready[3]);
    }

    // Neighbor classification of u against the normalized parts,
    // restricted to the domain.
    struct Nbrs {
        std::array<std::vector<Vertex>, 4> in_a, in_s;
        bool a_outside_first(int keep = 0) const {
            for (int i = 0; i < 4; ++i)
                if (i != keep && !in_a[i].empty()) return true;
            return false;
        }
    };
    Nbrs classify(Vertex u) const {
        Nbrs out;
        for (Vertex t : g.adj[u]) {
            if (!domain.contains(t)) continue;
            for (int i = 0; i < 4; ++i) {
                if (sq.a[i].contains(t)) out.in_a[i].push_back(t);
                if (sq.s[i].contains(t)) out.in_s[i].push_back(t);
            }
        }
        return out;
    }

    VertexSet path_set(const Path& p) const { return VertexSet::of(g.n, p.vertices); }

    Path leg(int i, Vertex head) { return path_to_terminal(g, sq, i, head); }

    SquareAugmentResult finish_tree(VertexSet verts, const std::string& branch) {
        trace.branch = branch;
        InducedTree t{std::move(verts), {original.terminals[0], original.terminals[1],
                                         original.terminals[2], original.terminals[3]}};
        VertexSet extra = t.vertices;
        VertexSet dom_v = domain;
        dom_v.insert(v);
        extra -= dom_v;
        if (!extra.empty()) throw std::logic_error("tree uses vertices outside domain+v");
        if (!is_induced_tree(g, t.vertices)) throw std::logic_error("produced set is not an induced tree");
        for (Vertex x : t.required)
            if (!t.vertices.contains(x)) throw std::logic_error("tree misses a terminal");
        SquareAugmentResult res;
        res.kind = SquareAugmentResult::Kind::FoundTree;
        res.tree = std::move(t);
        res.domain = dom_v;
        trace.symmetry = perm;
        res.trace = trace;
        return res;
    }

    SquareAugmentResult finish_square(SquareSplit ns, const std::string& branch) {
        trace.branch = branch;
        VertexSet nd = domain;
        nd.insert(v);
        SquareSplit out = unpermuted(ns, perm);
        auto bad = validate_square(g, out, nd);
        if (!bad.empty())
            throw std::logic_error("grown square fails item " + std::to_string(bad[0].item) + ": " +
                                   bad[0].message);
        SquareAugmentResult res;
        res.kind = SquareAugmentResult::Kind::GrewSquare;
        res.square = std::move(out);
        res.domain = nd;
        trace.symmetry = perm;
        res.trace = trace;
        return res;
    }

    SquareAugmentResult finish_cubic(CubicSplit nc, const std::string& branch) {
        trace.branch = branch;
        CubicSplit out = unpermuted_cubic(nc, perm);
        VertexSet nd(g.n);
        for (int i = 0; i < 4; ++i) {
            nd |= out.a[i];
            nd |= out.b[i];
        }
        for (int i = 0; i < 8; ++i) nd |= out.s[i];
        nd |= out.r;
        VertexSet dom_v = domain;
        dom_v.insert(v);
        VertexSet extra = nd;
        extra -= dom_v;
        if (!extra.empty()) throw std::logic_error("cubic domain leaks outside domain+v");
        auto bad = validate_cubic(g, out, nd);
        if (!bad.empty())
            throw std::logic_error("emitted cubic fails item " + std::to_string(bad[0].item) + ": " +
                                   bad[0].message);
        SquareAugmentResult res;
        res.kind = SquareAugmentResult::Kind::BecameCubic;
        res.cubic = std::move(out);
        res.domain = nd;
        trace.symmetry = perm;
        res.trace = trace;
        return res;
    }

    SquareAugmentResult run();
    SquareAugmentResult cascade(Vertex w, Path q);
};

SquareAugmentResult SquareAug::run() {
    // No way into any A-part: v joins R.
    bool has_a = false;
    for (Vertex u : g.adj[v])
        if (domain.contains(u))
            for (int i = 0; i < 4; ++i) has_a |= original.a[i].contains(u);
    if (!has_a) {
        sq = original;
        SquareSplit ns = sq;
        ns.r.insert(v);
        return finish_square(ns, "into-r");
    }

    // Anchor: the A-neighbor with the shortest run to its terminal,
    // ties to the lower part index, then the lower vertex id. Rotate
    // that part into slot 1.
    sq = original;
    int anchor_idx = -1;
    Vertex anchor = -1;
    int anchor_rank = 0;
    for (int i = 0; i < 4; ++i) {
        std::vector<Vertex> cand;
        for (Vertex u : g.adj[v])
            if (sq.a[i].contains(u)) cand.push_back(u);
        if (cand.empty()) continue;
        Vertex b = best_head(i, cand);
        int r = rank_of(i, b);
        if (anchor_idx < 0 || r < anchor_rank) {
            anchor_idx = i;
            anchor = b;
            anchor_rank = r;
        }
    }
    Perm4 rot{anchor_idx, (anchor_idx + 1) % 4, (anchor_idx + 2) % 4, (anchor_idx + 3) % 4};
    sq = permuted(original, rot);
    perm = rot;
    dist_ready = {};
    trace.anchor = anchor;
    trace.anchor_index = anchor_idx;

    // A-neighbors beyond the anchor part leave R-land immediately.
    Nbrs nv = classify(v);
    if (nv.a_outside_first()) return cascade(v, Path{{v}});

    // C: the vertices of R+v that are complete to s2 u s4.
    VertexSet s24 = sq.s[1];
    s24 |= sq.s[3];
    auto complete_to_s24 = [&](Vertex u) {
        int hits = 0;
        for (Vertex t : g.adj[u])
            if (s24.contains(t)) ++hits;
        return hits == s24.size();
    };
    VertexSet C(g.n);
    for (Vertex u : sq.r.to_vector())
        if (complete_to_s24(u)) C.insert(u);
    bool v_complete = complete_to_s24(v);
    if (v_complete) C.insert(v);
    trace.complete_set = C;

    if (v_complete) {
        // v is stitched into the S-layer on its own: its A-neighbors
        // all sit in the anchor part and triangle-freeness rules out
        // contacts with S1 and S3.
        SquareSplit ns = sq;
        ns.s[0].insert(v);
        return finish_square(ns, "into-s1");
    }

    // Y: everything reachable from v through R. Y1: reachable without
    // entering C. Y2: the C-vertices fencing Y1 in.
    VertexSet in_r_or_v = sq.r;
    in_r_or_v.insert(v);
    auto reach = [&](const VertexSet& allowed) {
        VertexSet seen(g.n);
        std::vector<Vertex> order;
        std::vector<Vertex> parent(g.n, -1);
        std::queue<Vertex> bq;
        bq.push(v);
        seen.insert(v);
        while (!bq.empty()) {
            Vertex y = bq.front();
            bq.pop();
            order.push_back(y);
            for (Vertex u : g.adj[y])
                if (allowed.contains(u) && !seen.contains(u)) {
                    seen.insert(u);
                    parent[u] = y;
                    bq.push(u);
                }
        }
        return std::tuple<VertexSet, std::vector<Vertex>, std::vector<Vertex>>(seen, order, parent);
    };
    auto [y_all, order_all, parent_all] = reach(in_r_or_v);
    (void)order_all;
    (void)parent_all;
    trace.y = y_all;

    VertexSet no_c = in_r_or_v;
    no_c -= C;
    auto [y1, order1, parent1] = reach(no_c);
    trace.y1 = y1;
    VertexSet y2(g.n);
    for (Vertex u : y1.to_vector())
        for (Vertex t : g.adj[u])
            if (C.contains(t)) y2.insert(t);
    trace.y2 = y2;
    VertexSet y3 = y_all;
    y3 -= y1;
    y3 -= y2;
    trace.y3 = y3;

    // A Y1 vertex whose neighborhood leaks outside Y1 u Y2 u A1 u S1
    // breaks the relabel; the first one in search order starts the
    // case analysis.
    Vertex w = -1;
    for (Vertex u : order1) {
        for (Vertex t : g.adj[u]) {
            if (!domain.contains(t)) continue;
            bool ok = y1.contains(t) || y2.contains(t) || sq.a[0].contains(t) || sq.s[0].contains(t);
            if (!ok) {
                w = u;
                break;
            }
        }
        if (w >= 0) break;
    }
    if (w < 0) {
        SquareSplit ns = sq;
        ns.a[0] |= y1;
        ns.s[0] |= y2;
        ns.r -= y1;
        ns.r -= y2;
        return finish_square(ns, "absorb-y");
    }
    Path q;
    for (Vertex t = w; t != -1; t = parent1[t]) q.vertices.push_back(t);
    std::reverse(q.vertices.begin(), q.vertices.end());
    return cascade(w, q);
}

SquareAugmentResult SquareAug::cascade(Vertex w, Path q) {
    trace.q_path = q;
    Vertex x1 = sq.terminals[0], x3 = sq.terminals[2], x4 = sq.terminals[3];
    Nbrs nw = classify(w);

    // Case: w reaches another A-part directly. Only v can do that.
    if (!nw.in_a[1].empty() || !nw.in_a[3].empty()) {
        if (w != v) throw std::logic_error("vertex of R with a neighbor in A");
        if (nw.in_a[1].empty()) {
            reflect_24();
            nw = classify(w);
            x3 = sq.terminals[2];
            x4 = sq.terminals[3];
        }
        Vertex a1 = best_head(0, nw.in_a[0]);
        Vertex a2 = best_head(1, nw.in_a[1]);
        std::vector<Vertex> side3 = nw.in_a[2];
        side3.insert(side3.end(), nw.in_s[2].begin(), nw.in_s[2].end());
        std::vector<Vertex> side4 = nw.in_a[3];
        side4.insert(side4.end(), nw.in_s[3].begin(), nw.in_s[3].end());
        if (!side3.empty() && !side4.empty()) {
            Vertex h3 = best_head(2, side3), h4 = best_head(3, side4);
            VertexSet t = path_set(leg(0, a1));
            t.insert(v);
            t |= path_set(leg(1, a2));
            t |= path_set(leg(2, h3));
            t |= path_set(leg(3, h4));
            return finish_tree(t, "span-both-far-sides");
        }
        if (!side3.empty()) {
            Vertex s3 = nw.in_s[2].empty() ? min_of(sq.s[2]) : nw.in_s[2].front();
            VertexSet allowed = sq.a[2];
            allowed.insert(v);
            allowed.insert(s3);
            InducedTree t3 = tree_covering_three(g, v, s3, x3, allowed);
            VertexSet t = path_set(leg(0, a1));
            t.insert(v);
            t |= path_set(leg(1, a2));
            t |= t3.vertices;
            t |= path_set(leg(3, min_of(sq.s[3])));
            return finish_tree(t, "span-third-side");
        }
        if (!side4.empty()) {
            Vertex s4 = nw.in_s[3].empty() ? min_of(sq.s[3]) : nw.in_s[3].front();
            VertexSet allowed = sq.a[3];
            allowed.insert(v);
            allowed.insert(s4);
            InducedTree t4 = tree_covering_three(g, v, s4, x4, allowed);
            VertexSet t = path_set(leg(0, a1));
            t.insert(v);
            t |= path_set(leg(1, a2));
            t |= t4.vertices;
            t |= path_set(leg(2, min_of(sq.s[2])));
            return finish_tree(t, "span-fourth-side");
        }
        Vertex s1 = min_of(sq.s[0]);
        VertexSet allowed = sq.a[0];
        allowed.insert(v);
        allowed.insert(s1);
        InducedTree t1 = tree_covering_three(g, v, s1, x1, allowed);
        VertexSet t = t1.vertices;
        t |= path_set(leg(1, a2));
        t |= path_set(leg(3, min_of(sq.s[3])));
        t |= path_set(leg(2, min_of(sq.s[2])));
        return finish_tree(t, "span-two-adjacent");
    }

    Vertex a1 = trace.anchor;

    // Case: w touches S3. Triangle-freeness kills any S2/S4 contact of
    // w, so the S-ring is free for the other two terminals.
    if (!nw.in_s[2].empty()) {
        Vertex s3 = nw.in_s[2].front();
        VertexSet allowed = sq.a[2];
        allowed.insert(w);
        allowed.insert(s3);
        InducedTree t3 = tree_covering_three(g, w, s3, x3, allowed);
        VertexSet t = path_set(leg(0, a1));
        t |= VertexSet::of(g.n, q.vertices);
        t |= t3.vertices;
        t |= path_set(leg(1, min_of(sq.s[1])));
        t |= path_set(leg(3, min_of(sq.s[3])));
        return finish_tree(t, "via-s3");
    }

    // Case: w touches neither S2 nor S4; its offence must be A3, so
    // w = v and the same shape as via-s3 works.
    if (nw.in_s[1].empty() && nw.in_s[3].empty()) {
        if (w != v) throw std::logic_error("vertex of R with a neighbor in A");
        if (nw.in_a[2].empty()) throw std::logic_error("violating vertex with no violating neighbor");
        Vertex s3 = min_of(sq.s[2]);
        VertexSet allowed = sq.a[2];
        allowed.insert(w);
        allowed.insert(s3);
        InducedTree t3 = tree_covering_three(g, w, s3, x3, allowed);
        VertexSet t = path_set(leg(0, a1));
        t |= VertexSet::of(g.n, q.vertices);
        t |= t3.vertices;
        t |= path_set(leg(1, min_of(sq.s[1])));
        t |= path_set(leg(3, min_of(sq.s[3])));
        return finish_tree(t, "via-a3-only");
    }

    // From here w touches S2 u S4; normalize the touched side to S2.
    if (nw.in_s[1].empty()) {
        reflect_24();
        nw = classify(w);
        x3 = sq.terminals[2];
    }

    // Case: no A3 contact. Chain through the S-ring, keeping one ring
    // vertex w does not see on the far side.
    if (nw.in_a[2].empty()) {
        Vertex s2 = nw.in_s[1].front();
        Vertex s4_free = -1;
        for (Vertex s : sq.s[3].to_vector())
            if (!g.has_edge(w, s)) {
                s4_free = s;
                break;
            }
        if (s4_free >= 0) {
            VertexSet t = path_set(leg(0, a1));
            t |= VertexSet::of(g.n, q.vertices);
            t |= path_set(leg(1, s2));
            t |= path_set(leg(2, min_of(sq.s[2])));
            t |= path_set(leg(3, s4_free));
            return finish_tree(t, "ring-chain-from-s2");
        }
        Vertex s2_free = -1;
        for (Vertex s : sq.s[1].to_vector())
            if (!g.has_edge(w, s)) {
                s2_free = s;
                break;
            }
        if (s2_free < 0) throw std::logic_error("S2uS4-complete vertex escaped the C fence");
        Vertex s4 = nw.in_s[3].front();
        VertexSet t = path_set(leg(0, a1));
        t |= VertexSet::of(g.n, q.vertices);
        t |= path_set(leg(3, s4));
        t |= path_set(leg(2, min_of(sq.s[2])));
        t |= path_set(leg(1, s2_free));
        return finish_tree(t, "ring-chain-from-s4");
    }

    // Final family: w = v touches A3 and S2 (after normalization).
    if (w != v) throw std::logic_error("vertex of R with a neighbor in A");
    Vertex s2 = nw.in_s[1].front();
    Vertex a3 = best_head(2, nw.in_a[2]);
    if (!nw.in_s[3].empty()) {
        VertexSet t = path_set(leg(0, a1));
        t.insert(v);
        t |= path_set(leg(1, s2));
        t |= path_set(leg(2, a3));
        t |= path_set(leg(3, nw.in_s[3].front()));
        return finish_tree(t, "four-legs-at-v");
    }

    // v spans A1, S2, A3 with S4 out of reach: bridge through s1 or s3,
    // watching for their stray contacts on the legs; if both fail the
    // five legs and bridge vertices form a cubic split.
    Path p_a1 = leg(0, a1);
    Path p_s2 = leg(1, s2);
    Path p_a3 = leg(2, a3);
    Path p_s4 = leg(3, min_of(sq.s[3]));
    Vertex s1 = min_of(sq.s[0]);
    Vertex s3 = min_of(sq.s[2]);

    auto contacts_on = [&](Vertex s, const Path& p) {
        int max_idx = -1;
        VertexSet on = path_set(p);
        for (Vertex u : g.adj[s])
            if (on.contains(u))
                for (int i = 0; i < p.size(); ++i)
                    if (p.vertices[i] == u && i > max_idx) max_idx = i;
        return max_idx;  // -1 none; 0 head only; >0 deeper contact
    };

    int c1 = contacts_on(s1, p_a1);
    if (c1 < 0) {
        VertexSet t = path_set(p_a1);
        t.insert(v);
        t |= path_set(p_s2);
        t |= path_set(p_a3);
        t.insert(s1);
        t |= path_set(p_s4);
        return finish_tree(t, "bridge-s1");
    }
    if (c1 > 0) {
        VertexSet t(g.n);
        for (int i = c1; i < p_a1.size(); ++i) t.insert(p_a1.vertices[i]);
        t.insert(s1);
        t |= path_set(p_s2);
        t.insert(v);
        t |= path_set(p_a3);
        t |= path_set(p_s4);
        return finish_tree(t, "bridge-s1-deep");
    }
    int c3 = contacts_on(s3, p_a3);
    if (c3 < 0) {
        VertexSet t = path_set(p_a1);
        t.insert(v);
        t |= path_set(p_s2);
        t |= path_set(p_a3);
        t.insert(s3);
        t |= path_set(p_s4);
        return finish_tree(t, "bridge-s3");
    }
    if (c3 > 0) {
        VertexSet t = path_set(p_a1);
        t.insert(v);
        t |= path_set(p_s2);
        VertexSet seg(g.n);
        for (int i = c3; i < p_a3.size(); ++i) seg.insert(p_a3.vertices[i]);
        t |= seg;
        t.insert(s3);
        t |= path_set(p_s4);
        return finish_tree(t, "bridge-s3-deep");
    }

    // Both bridges land exactly on the leg heads: the five paths close
    // into the next certificate level.
    if (p_a1.size() == 1 || p_a3.size() == 1)
        throw std::invalid_argument(
            "augmentation dead end: the new vertex is adjacent to a terminal, so a leg has no "
            "interior; terminals are expected to have degree 1");
    CubicSplit nc;
    for (int i = 0; i < 4; ++i) {
        nc.a[i] = VertexSet(g.n);
        nc.b[i] = VertexSet(g.n);
    }
    for (int i = 0; i < 8; ++i) nc.s[i] = VertexSet(g.n);
    nc.r = VertexSet(g.n);
    auto tail = [&](const Path& p) {
        VertexSet out(g.n);
        for (int i = 1; i < p.size(); ++i) out.insert(p.vertices[i]);
        return out;
    };
    nc.a[0] = tail(p_a1);
    nc.a[1] = tail(p_s2);
    nc.a[2] = tail(p_a3);
    nc.a[3] = tail(p_s4);
    nc.s[0].insert(a1);
    nc.s[1].insert(s2);
    nc.s[2].insert(a3);
    nc.s[3].insert(p_s4.vertices[0]);
    nc.s[4].insert(s3);
    nc.s[6].insert(s1);
    nc.s[7].insert(v);
    nc.terminals = sq.terminals;
    return finish_cubic(nc, "five-paths-cubic");
}

}  // namespace

SquareAugmentResult augment_square(const Graph& g, const SquareSplit& split,
                                   const VertexSet& domain, Vertex v) {
    auto bad = validate_square(g, split, domain);
    if (!bad.empty())
        throw std::invalid_argument("input split fails item " + std::to_string(bad[0].item) + ": " +
                                    bad[0].message);
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
    SquareAug aug(g, split, domain, v);
    return aug.run();
}

Path path_to_terminal(const Graph& g, const SquareSplit& split, int i, Vertex s) {
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

}  // namespace fourtree
