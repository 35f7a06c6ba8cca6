#include "fourtree/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace fourtree {

void VertexSet::check(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (size_t b = 0; b < bits_.size(); ++b) {
        uint64_t w = bits_[b];
        while (w) {
            int t = std::countr_zero(w);
            out.push_back((int)(b * 64) + t);
            w &= w - 1;
        }
    }
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
    count_ = 0;
    for (size_t b = 0; b < bits_.size(); ++b) {
        bits_[b] |= o.bits_[b];
        count_ += std::popcount(bits_[b]);
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
    count_ = 0;
    for (size_t b = 0; b < bits_.size(); ++b) {
        bits_[b] &= ~o.bits_[b];
        count_ += std::popcount(bits_[b]);
    }
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
    for (size_t b = 0; b < bits_.size(); ++b)
        if (bits_[b] & o.bits_[b]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("vertex set universe mismatch");
    for (size_t b = 0; b < bits_.size(); ++b)
        if (bits_[b] & ~o.bits_[b]) return false;
    return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    Vertex t = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

VertexSet Graph::all_vertices() const {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) s.insert(v);
    return s;
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& a = g.adj[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    g.m = (long long)edges.size();
    return g;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    // Scan edges (a,b) with a < b in lexicographic order, then probe the
    // sorted common neighborhood for the smallest c > b.
    for (Vertex a = 0; a < g.n; ++a) {
        for (Vertex b : g.adj[a]) {
            if (b <= a) continue;
            const auto& na = g.adj[a];
            const auto& nb = g.adj[b];
            size_t i = 0, j = 0;
            while (i < na.size() && j < nb.size()) {
                if (na[i] == nb[j]) {
                    if (na[i] > b) return std::array<Vertex, 3>{a, b, na[i]};
                    ++i;
                    ++j;
                } else if (na[i] < nb[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
    }
    return std::nullopt;
}

bool is_induced_tree(const Graph& g, const VertexSet& z) {
    if (z.empty()) return false;
    auto verts = z.to_vector();
    long long inside_edges = 0;
    for (Vertex v : verts)
        for (Vertex u : g.adj[v])
            if (u > v && z.contains(u)) ++inside_edges;
    if (inside_edges != (long long)verts.size() - 1) return false;
    // Connectivity by BFS inside z.
    VertexSet seen(g.n);
    std::queue<Vertex> q;
    q.push(verts[0]);
    seen.insert(verts[0]);
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.adj[v])
            if (z.contains(u) && !seen.contains(u)) {
                seen.insert(u);
                ++reached;
                q.push(u);
            }
    }
    return reached == (int)verts.size();
}

std::optional<Path> bfs_path(const Graph& g, Vertex source, const VertexSet& targets,
                             const VertexSet& allowed) {
    if (!allowed.contains(source)) throw std::invalid_argument("bfs_path: source not in allowed set");
    if (targets.contains(source)) return Path{{source}};
    std::vector<Vertex> parent(g.n, -1);
    VertexSet seen(g.n);
    seen.insert(source);
    std::queue<Vertex> q;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.adj[v]) {
            if (seen.contains(u)) continue;
            if (targets.contains(u)) {
                Path p;
                p.vertices.push_back(u);
                for (Vertex w = v; w != -1; w = parent[w]) p.vertices.push_back(w);
                std::reverse(p.vertices.begin(), p.vertices.end());
                return p;
            }
            if (!allowed.contains(u)) continue;
            seen.insert(u);
            parent[u] = v;
            q.push(u);
        }
    }
    return std::nullopt;
}

bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) throw std::invalid_argument("is_complete_to: sets overlap");
    if (x.empty() || y.empty()) return true;
    for (Vertex v : x.to_vector()) {
        int hits = 0;
        for (Vertex u : g.adj[v])
            if (y.contains(u)) ++hits;
        if (hits != y.size()) return false;
    }
    return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) throw std::invalid_argument("is_anticomplete_to: sets overlap");
    for (Vertex v : x.to_vector())
        for (Vertex u : g.adj[v])
            if (y.contains(u)) return false;
    return true;
}

SubgraphMap induced_subgraph(const Graph& g, const VertexSet& keep) {
    SubgraphMap out;
    out.to_parent = keep.to_vector();
    std::vector<Vertex> to_child(g.n, -1);
    for (size_t i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = (Vertex)i;
    out.graph.n = (int)out.to_parent.size();
    out.graph.adj.assign(out.graph.n, {});
    long long m = 0;
    for (Vertex nv = 0; nv < out.graph.n; ++nv) {
        for (Vertex u : g.adj[out.to_parent[nv]])
            if (to_child[u] >= 0) {
                out.graph.adj[nv].push_back(to_child[u]);  // stays sorted: adj sorted, map monotone
                if (to_child[u] > nv) ++m;
            }
    }
    out.graph.m = m;
    return out;
}

GraphFile read_graph_text(std::istream& in) {
    GraphFile gf;
    std::string line;
    int n = -1;
    long long m = -1, edges_seen = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::map<Vertex, std::string> labels;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') {
            std::istringstream cs(line.substr(pos + 1));
            std::string kw;
            if (cs >> kw && kw == "label") {
                Vertex v;
                std::string name;
                if (cs >> v && cs >> name) labels[v] = name;
            }
            continue;
        }
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": expected header \"n m\"");
            continue;
        }
        Vertex u, v;
        if (!(ls >> u >> v))
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected edge \"u v\"");
        edges.emplace_back(u, v);
        ++edges_seen;
    }
    if (n < 0) throw std::runtime_error("missing \"n m\" header");
    if (edges_seen != m)
        throw std::runtime_error("header claims " + std::to_string(m) + " edges, file has " + std::to_string(edges_seen));
    gf.graph = build_graph(n, edges);
    for (auto& [v, name] : labels)
        if (v < 0 || v >= n) throw std::runtime_error("label for out-of-range vertex " + std::to_string(v));
    gf.labels = std::move(labels);
    return gf;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph_text(in);
}

std::string write_graph_text(const Graph& g, const std::map<Vertex, std::string>& labels) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (auto& [v, name] : labels) out << "# label " << v << ' ' << name << '\n';
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u])
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace fourtree
