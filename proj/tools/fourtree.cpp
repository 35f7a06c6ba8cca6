// Command-line front end: solve/verify/oracle on graph files, instance
// generators, the cycle-to-centered-tree transformation, differential
// fuzzing against the exhaustive search, timing runs, and DOT export.

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fourtree/centered_reduction.hpp"
#include "fourtree/certificates.hpp"
#include "fourtree/generators.hpp"
#include "fourtree/graph.hpp"
#include "fourtree/oracle.hpp"
#include "fourtree/solver.hpp"

using namespace fourtree;

namespace {

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

bool emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return false;
    }
    os << text;
    return true;
}

std::vector<int> parse_sizes(const std::string& csv, size_t expect, const char* what) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (expect != 0 && out.size() != expect) {
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(expect) +
                                    " comma-separated numbers");
    }
    return out;
}

std::string vertex_label(Vertex v, const std::map<Vertex, std::string>& labels) {
    auto it = labels.find(v);
    return it == labels.end() ? std::to_string(v) : it->second;
}

std::string list_vertices(const VertexSet& s) {
    std::string out;
    for (Vertex v : s.to_vector()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------- DOT

void dot_begin(std::ostream& os) {
    os << "graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n";
}

void dot_nodes_edges(std::ostream& os, const Graph& g, const std::map<Vertex, std::string>& labels,
                     const std::map<Vertex, std::string>& fills,
                     const std::map<Vertex, std::string>& parts, const VertexSet* bold_set) {
    for (Vertex v = 0; v < g.n; ++v) {
        os << "  " << v << " [label=\"" << vertex_label(v, labels);
        auto pit = parts.find(v);
        if (pit != parts.end()) os << "\\n" << pit->second;
        os << "\"";
        auto fit = fills.find(v);
        if (fit != fills.end()) os << ", fillcolor=\"" << fit->second << "\"";
        os << "];\n";
    }
    for (Vertex u = 0; u < g.n; ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            os << "  " << u << " -- " << v;
            if (bold_set && bold_set->contains(u) && bold_set->contains(v)) {
                os << " [penwidth=2.5]";
            }
            os << ";\n";
        }
    }
    os << "}\n";
}

std::string dot_plain(const Graph& g, const std::map<Vertex, std::string>& labels) {
    std::ostringstream os;
    dot_begin(os);
    dot_nodes_edges(os, g, labels, {}, {}, nullptr);
    return os.str();
}

std::string dot_tree(const Graph& g, const std::map<Vertex, std::string>& labels,
                     const InducedTree& tree) {
    std::ostringstream os;
    dot_begin(os);
    std::map<Vertex, std::string> fills;
    for (Vertex v : tree.vertices.to_vector()) fills[v] = "palegreen";
    for (Vertex v : tree.required) fills[v] = "gold";
    dot_nodes_edges(os, g, labels, fills, {}, &tree.vertices);
    return os.str();
}

void paint(std::map<Vertex, std::string>& fills, std::map<Vertex, std::string>& parts,
           const VertexSet& set, const std::string& color, const std::string& name) {
    for (Vertex v : set.to_vector()) {
        fills[v] = color;
        parts[v] = name;
    }
}

std::string dot_square(const Graph& g, const std::map<Vertex, std::string>& labels,
                       const SquareSplit& sp) {
    static const char* acolor[4] = {"lightblue", "lightsalmon", "palegreen", "plum"};
    std::map<Vertex, std::string> fills, parts;
    for (int i = 0; i < 4; ++i) {
        paint(fills, parts, sp.a[i], acolor[i], "A" + std::to_string(i + 1));
        paint(fills, parts, sp.s[i], "khaki", "S" + std::to_string(i + 1));
    }
    paint(fills, parts, sp.r, "lightgray", "R");
    std::ostringstream os;
    dot_begin(os);
    dot_nodes_edges(os, g, labels, fills, parts, nullptr);
    return os.str();
}

std::string dot_cubic(const Graph& g, const std::map<Vertex, std::string>& labels,
                      const CubicSplit& sp) {
    static const char* acolor[4] = {"lightblue", "lightsalmon", "palegreen", "plum"};
    std::map<Vertex, std::string> fills, parts;
    for (int i = 0; i < 4; ++i) {
        paint(fills, parts, sp.a[i], acolor[i], "A" + std::to_string(i + 1));
        paint(fills, parts, sp.b[i], "lightgray", "B" + std::to_string(i + 1));
        paint(fills, parts, sp.s[i], "khaki", "S" + std::to_string(i + 1));
        paint(fills, parts, sp.s[4 + i], "orange", "S" + std::to_string(i + 5));
    }
    paint(fills, parts, sp.r, "white", "R");
    std::ostringstream os;
    dot_begin(os);
    dot_nodes_edges(os, g, labels, fills, parts, nullptr);
    return os.str();
}

// -------------------------------------------------------------- solve

void print_square_text(const SquareSplit& sp) {
    for (int i = 0; i < 4; ++i) std::cout << "  A" << i + 1 << ": " << list_vertices(sp.a[i]) << "\n";
    for (int i = 0; i < 4; ++i) std::cout << "  S" << i + 1 << ": " << list_vertices(sp.s[i]) << "\n";
    std::cout << "  R: " << list_vertices(sp.r) << "\n  terminals:";
    for (Vertex t : sp.terminals) std::cout << ' ' << t;
    std::cout << "\n";
}

void print_cubic_text(const CubicSplit& sp) {
    for (int i = 0; i < 4; ++i) std::cout << "  A" << i + 1 << ": " << list_vertices(sp.a[i]) << "\n";
    for (int i = 0; i < 4; ++i) std::cout << "  B" << i + 1 << ": " << list_vertices(sp.b[i]) << "\n";
    for (int i = 0; i < 8; ++i) std::cout << "  S" << i + 1 << ": " << list_vertices(sp.s[i]) << "\n";
    std::cout << "  R: " << list_vertices(sp.r) << "\n  terminals:";
    for (Vertex t : sp.terminals) std::cout << ' ' << t;
    std::cout << "\n";
}

int cmd_solve(const std::string& path, const std::vector<int>& ids, bool as_json, bool as_dot,
              const std::string& gadget_out) {
    GraphFile gf;
    try {
        gf = read_graph_file(path);
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    SolveResult res;
    try {
        res = four_in_a_tree(gf.graph, {ids[0], ids[1], ids[2], ids[3]});
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    }
    if (!gadget_out.empty()) {
        std::map<Vertex, std::string> labels = gf.labels;
        for (int i = 0; i < 4; ++i) labels[res.terminals.x[i]] = "x" + std::to_string(i + 1);
        if (!emit(write_graph_text(res.working, labels), gadget_out)) return 2;
    }

    if (as_json) {
        std::cout << solve_result_to_json(res).dump(2) << "\n";
    } else if (as_dot) {
        switch (res.kind) {
            case SolveResult::Kind::FoundTree:
                std::cout << dot_tree(gf.graph, gf.labels, res.tree);
                break;
            case SolveResult::Kind::SquareCertificate:
                std::cout << dot_square(res.working, gf.labels, res.square);
                break;
            case SolveResult::Kind::CubicCertificate:
                std::cout << dot_cubic(res.working, gf.labels, res.cubic);
                break;
            case SolveResult::Kind::Disconnected:
                std::cout << dot_plain(gf.graph, gf.labels);
                break;
        }
    } else {
        switch (res.kind) {
            case SolveResult::Kind::FoundTree:
                std::cout << "tree: " << list_vertices(res.tree.vertices) << "\n";
                break;
            case SolveResult::Kind::SquareCertificate:
                std::cout << "no tree: four-part certificate over the gadgeted graph (n="
                          << res.working.n << ")\n";
                print_square_text(res.square);
                break;
            case SolveResult::Kind::CubicCertificate:
                std::cout << "no tree: eight-class certificate over the gadgeted graph (n="
                          << res.working.n << ")\n";
                print_cubic_text(res.cubic);
                break;
            case SolveResult::Kind::Disconnected: {
                std::cout << "no tree: the query vertices span more than one component\n";
                std::string comp;
                int n = gf.graph.n;
                for (Vertex v : res.component.to_vector()) {
                    if (v < n) comp += (comp.empty() ? "" : " ") + std::to_string(v);
                }
                std::cout << "  component of the first query vertex: " << comp << "\n";
                break;
            }
        }
    }
    return res.kind == SolveResult::Kind::FoundTree ? 0 : 1;
}

// ------------------------------------------------------------- verify

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
    GraphFile gf;
    try {
        gf = read_graph_file(graph_path);
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    nlohmann::json j;
    try {
        std::ifstream in(cert_path);
        if (!in) return fail_input("cannot read " + cert_path);
        j = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    const Graph& g = gf.graph;
    std::vector<Violation> violations;
    try {
        std::string kind = j.value("kind", "");
        if (kind == "square") {
            violations = validate_square(g, square_from_json(j, g.n), g.all_vertices());
        } else if (kind == "cubic") {
            violations = validate_cubic(g, cubic_from_json(j, g.n), g.all_vertices());
        } else if (kind == "disconnected") {
            // Witness check: the listed component must be closed under
            // adjacency and nonempty.
            VertexSet comp(g.n);
            for (const auto& e : j.at("component")) {
                long long v = e.get<long long>();
                if (v < 0 || v >= g.n) throw std::invalid_argument("component lists unknown vertex");
                comp.insert((Vertex)v);
            }
            if (comp.to_vector().empty()) violations.push_back({0, "component is empty"});
            for (Vertex u : comp.to_vector()) {
                for (Vertex v : g.neighbors(u)) {
                    if (!comp.contains(v)) {
                        violations.push_back({0, "component is not closed: edge " +
                                                     std::to_string(u) + "-" + std::to_string(v)});
                    }
                }
            }
        } else {
            return fail_input("unknown certificate kind '" + kind + "'");
        }
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    if (violations.empty()) {
        std::cout << "certificate valid\n";
        return 0;
    }
    for (const auto& v : violations) std::cout << "[" << v.item << "] " << v.message << "\n";
    return 1;
}

// ------------------------------------------------------------- oracle

int cmd_oracle(const std::string& path, const std::vector<int>& ids, bool as_json) {
    GraphFile gf;
    try {
        gf = read_graph_file(path);
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    try {
        auto [wg, t] = attach_terminals(gf.graph, {ids[0], ids[1], ids[2], ids[3]});
        std::vector<Vertex> req(t.x.begin(), t.x.end());
        auto best = brute_force_tree(wg, req);
        if (best) {
            InducedTree stripped = strip_terminals(*best, t);
            if (as_json) {
                nlohmann::json j;
                j["answer"] = "tree";
                j["vertices"] = stripped.vertices.to_vector();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "tree: " << list_vertices(stripped.vertices) << "\n";
            }
            return 0;
        }
        if (as_json) {
            std::cout << nlohmann::json({{"answer", "no-tree"}}).dump(2) << "\n";
        } else {
            std::cout << "no tree (exhaustive search)\n";
        }
        return 1;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

// --------------------------------------------------------------- fuzz

struct FuzzCase {
    Graph graph;
    std::array<Vertex, 4> ys;
};

// True when solver and exhaustive search agree and every claimed
// answer checks out. inject flips the solver's decision to prove the
// harness can catch a wrong solver.
bool fuzz_case_ok(const FuzzCase& fc, bool inject) {
    bool solver_tree = false;
    SolveResult res;
    try {
        res = four_in_a_tree(fc.graph, fc.ys);
        solver_tree = res.kind == SolveResult::Kind::FoundTree;
    } catch (const std::exception&) {
        return false;
    }
    if (inject) solver_tree = !solver_tree;
    try {
        auto [wg, t] = attach_terminals(fc.graph, fc.ys);
        std::vector<Vertex> req(t.x.begin(), t.x.end());
        bool oracle_tree = brute_force_tree(wg, req).has_value();
        if (solver_tree != oracle_tree) return false;
        if (res.kind == SolveResult::Kind::FoundTree) {
            if (!is_induced_tree(fc.graph, res.tree.vertices)) return false;
            for (Vertex y : fc.ys) {
                if (!res.tree.vertices.contains(y)) return false;
            }
        } else if (res.kind == SolveResult::Kind::SquareCertificate) {
            if (!validate_square(res.working, res.square, res.working.all_vertices()).empty())
                return false;
        } else if (res.kind == SolveResult::Kind::CubicCertificate) {
            if (!validate_cubic(res.working, res.cubic, res.working.all_vertices()).empty())
                return false;
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// Greedy shrink: drop single vertices while the disagreement persists.
FuzzCase shrink_case(FuzzCase fc, bool inject) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex drop = fc.graph.n - 1; drop >= 0; --drop) {
            bool is_query = false;
            for (Vertex y : fc.ys) is_query |= (y == drop);
            if (is_query) continue;
            VertexSet keep = fc.graph.all_vertices();
            keep.erase(drop);
            SubgraphMap sub = induced_subgraph(fc.graph, keep);
            std::vector<Vertex> to_child(fc.graph.n, -1);
            for (size_t i = 0; i < sub.to_parent.size(); ++i) to_child[sub.to_parent[i]] = (Vertex)i;
            FuzzCase cand;
            cand.graph = sub.graph;
            for (int i = 0; i < 4; ++i) cand.ys[i] = to_child[fc.ys[i]];
            if (!fuzz_case_ok(cand, inject)) {
                fc = cand;
                changed = true;
                break;
            }
        }
    }
    return fc;
}

int cmd_fuzz(int count, int n_min, int n_max, uint64_t seed, bool inject,
             const std::string& out_path) {
    if (n_min < 1 || n_max < n_min) return fail_input("bad vertex count range");
    if (n_max > 20) return fail_input("range exceeds the exhaustive-search limit (20 + gadget)");
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + (uint64_t)i);
        std::uniform_int_distribution<int> nd(n_min, n_max);
        std::uniform_real_distribution<double> pd(0.08, 0.5);
        FuzzCase fc;
        int n = nd(rng);
        double p = pd(rng);
        fc.graph = gen_triangle_free(n, p, rng());
        std::uniform_int_distribution<int> vd(0, n - 1);
        for (int k = 0; k < 4; ++k) fc.ys[k] = vd(rng);
        if (fuzz_case_ok(fc, inject)) continue;

        FuzzCase small = shrink_case(fc, inject);
        std::ostringstream os;
        os << "# query " << small.ys[0] << " " << small.ys[1] << " " << small.ys[2] << " "
           << small.ys[3] << "\n"
           << write_graph_text(small.graph);
        std::string file = out_path.empty() ? "fuzz-counterexample.txt" : out_path;
        emit(os.str(), file);
        std::cout << "mismatch at case " << i << "; shrunk counterexample written to " << file
                  << "\n";
        return 1;
    }
    std::cout << count << "/" << count << " agree\n";
    return 0;
}

// ---------------------------------------------------------------- gen

int cmd_gen_rand(int n, double p, uint64_t seed, const std::string& out) {
    try {
        Graph g = gen_triangle_free(n, p, seed);
        return emit(write_graph_text(g), out) ? 0 : 2;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

int cmd_gen_square(const std::string& a_csv, const std::string& s_csv, int r, double inner_p,
                   uint64_t seed, const std::string& out, const std::string& cert_out) {
    try {
        SquareSizes sizes;
        auto a = parse_sizes(a_csv, 4, "--a");
        auto s = parse_sizes(s_csv, 4, "--s");
        for (int i = 0; i < 4; ++i) sizes.a[i] = a[i], sizes.s[i] = s[i];
        sizes.r = r;
        GeneratedSquare gen = gen_square_structure(sizes, inner_p, seed);
        std::ostringstream os;
        os << "# terminals " << gen.terminals[0] << " " << gen.terminals[1] << " "
           << gen.terminals[2] << " " << gen.terminals[3] << "\n";
        std::map<Vertex, std::string> labels;
        for (int i = 0; i < 4; ++i) labels[gen.terminals[i]] = "x" + std::to_string(i + 1);
        os << write_graph_text(gen.graph, labels);
        if (!emit(os.str(), out)) return 2;
        if (!cert_out.empty() && !emit(square_to_json(gen.split).dump(2) + "\n", cert_out)) return 2;
        return 0;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

int cmd_gen_cubic(const std::string& a_csv, const std::string& b_csv, const std::string& s_csv,
                  int r, double inner_p, uint64_t seed, const std::string& out,
                  const std::string& cert_out) {
    try {
        CubicSizes sizes;
        auto a = parse_sizes(a_csv, 4, "--a");
        auto b = parse_sizes(b_csv, 4, "--b");
        auto s = parse_sizes(s_csv, 8, "--s");
        for (int i = 0; i < 4; ++i) sizes.a[i] = a[i], sizes.b[i] = b[i];
        for (int i = 0; i < 8; ++i) sizes.s[i] = s[i];
        sizes.r = r;
        GeneratedCubic gen = gen_cubic_structure(sizes, inner_p, seed);
        std::ostringstream os;
        os << "# terminals " << gen.terminals[0] << " " << gen.terminals[1] << " "
           << gen.terminals[2] << " " << gen.terminals[3] << "\n";
        std::map<Vertex, std::string> labels;
        for (int i = 0; i < 4; ++i) labels[gen.terminals[i]] = "x" + std::to_string(i + 1);
        os << write_graph_text(gen.graph, labels);
        if (!emit(os.str(), out)) return 2;
        if (!cert_out.empty() && !emit(cubic_to_json(gen.split).dump(2) + "\n", cert_out)) return 2;
        return 0;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

// ------------------------------------------------------------- reduce

int cmd_reduce(const std::string& path, int x, int y, const std::string& out) {
    GraphFile gf;
    try {
        gf = read_graph_file(path);
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    try {
        CenteredInstance inst = build_centered_instance(gf.graph, x, y);
        std::map<Vertex, std::string> labels;
        for (size_t k = 0; k < inst.to_original.size(); ++k) {
            Vertex old = inst.to_original[k];
            auto it = old >= 0 ? gf.labels.find(old) : gf.labels.end();
            if (it != gf.labels.end()) labels[(Vertex)k] = it->second;
        }
        labels[inst.center] = "c";
        for (int i = 0; i < 4; ++i) labels[inst.terminals[i]] = "x" + std::to_string(i + 1);
        std::ostringstream os;
        os << "# terminals " << inst.terminals[0] << " " << inst.terminals[1] << " "
           << inst.terminals[2] << " " << inst.terminals[3] << "\n"
           << write_graph_text(inst.graph, labels);
        return emit(os.str(), out) ? 0 : 2;
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
}

// -------------------------------------------------------------- bench

int cmd_bench(const std::string& sizes_csv, uint64_t seed) {
    std::vector<int> sizes;
    try {
        if (!sizes_csv.empty()) sizes = parse_sizes(sizes_csv, 0, "--sizes");
    } catch (const std::exception& e) {
        return fail_input(e.what());
    }
    std::cout << "        n         m   time_ms  answer\n";
    std::vector<double> lx, ly;
    for (size_t idx = 0; idx < sizes.size(); ++idx) {
        int n = sizes[idx];
        long long m = 4LL * n;
        Graph g;
        try {
            g = gen_bipartite(n, m, seed + idx);
        } catch (const std::exception& e) {
            return fail_input(e.what());
        }
        std::mt19937_64 rng(seed * 31337 + idx);
        std::uniform_int_distribution<int> vd(0, n - 1);
        std::array<Vertex, 4> ys{};
        for (int k = 0; k < 4; ++k) ys[k] = vd(rng);
        auto t0 = std::chrono::steady_clock::now();
        SolveResult res = four_in_a_tree(g, ys);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const char* answer = res.kind == SolveResult::Kind::FoundTree ? "tree" : "no-tree";
        std::printf("%9d %9lld %9.2f  %s\n", n, m, ms, answer);
        lx.push_back(std::log((double)n * (double)m));
        ly.push_back(std::log(std::max(ms, 0.01)));
    }
    if (sizes.size() >= 2) {
        double mx = 0, my = 0;
        for (size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
        mx /= lx.size();
        my /= ly.size();
        double cov = 0, var = 0;
        for (size_t i = 0; i < lx.size(); ++i) {
            cov += (lx[i] - mx) * (ly[i] - my);
            var += (lx[i] - mx) * (lx[i] - mx);
        }
        std::printf("fitted exponent of time vs n*m: %.3f\n", cov / var);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying induced-tree solver for triangle-free graphs"};
    app.require_subcommand(1);

    std::string graph_path, cert_path, out_path, cert_out, gadget_out;
    std::vector<int> ids;
    bool as_json = false, as_dot = false, inject = false;
    uint64_t seed = 1;

    auto* solve = app.add_subcommand("solve", "decide four query vertices on a graph file");
    solve->add_option("graph", graph_path, "graph file")->required();
    solve->add_option("vertices", ids, "four query vertex ids")->expected(4)->required();
    auto* jflag = solve->add_flag("--json", as_json, "print the result as JSON");
    solve->add_flag("--dot", as_dot, "print the tree or certificate as DOT")->excludes(jflag);
    solve->add_option("--gadget-out", gadget_out,
                      "also write the gadgeted working graph to this file");

    auto* verify = app.add_subcommand("verify", "check a certificate JSON against a graph file");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive reference answer (small graphs)");
    oracle->add_option("graph", graph_path, "graph file")->required();
    oracle->add_option("vertices", ids, "four query vertex ids")->expected(4)->required();
    oracle->add_flag("--json", as_json, "print the result as JSON");

    int count = 100, n_min = 5, n_max = 10;
    auto* fuzz = app.add_subcommand("fuzz", "differential test: solver vs exhaustive search");
    fuzz->add_option("--count", count, "number of random cases")->capture_default_str();
    fuzz->add_option("--min-n", n_min, "smallest vertex count")->capture_default_str();
    fuzz->add_option("--max-n", n_max, "largest vertex count")->capture_default_str();
    fuzz->add_option("--seed", seed, "base seed")->capture_default_str();
    fuzz->add_option("--out", out_path, "counterexample file (default fuzz-counterexample.txt)");
    fuzz->add_flag("--inject-bug", inject, "flip the solver's answer to self-test the harness");

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    int gn = 10, gr = 0;
    double gp = 0.2, inner_p = 0.2;
    std::string a_csv = "1,1,1,1", b_csv = "0,0,0,0", s4_csv = "1,1,1,1",
                s8_csv = "1,1,1,1,1,1,1,1";
    auto* grand = gen->add_subcommand("rand", "random triangle-free graph");
    grand->add_option("--n", gn, "vertices")->capture_default_str();
    grand->add_option("--p", gp, "edge probability before triangle removal")->capture_default_str();
    grand->add_option("--seed", seed, "seed")->capture_default_str();
    grand->add_option("-o,--out", out_path, "output file (default stdout)");
    auto* gsq = gen->add_subcommand("square", "graph admitting a four-part certificate");
    gsq->add_option("--a", a_csv, "A part sizes")->capture_default_str();
    gsq->add_option("--s", s4_csv, "S class sizes")->capture_default_str();
    gsq->add_option("--r", gr, "R size")->capture_default_str();
    gsq->add_option("--inner-p", inner_p, "extra-edge rate inside parts")->capture_default_str();
    gsq->add_option("--seed", seed, "seed")->capture_default_str();
    gsq->add_option("-o,--out", out_path, "output file (default stdout)");
    gsq->add_option("--cert", cert_out, "also write the split JSON here");
    auto* gcu = gen->add_subcommand("cubic", "graph admitting an eight-class certificate");
    gcu->add_option("--a", a_csv, "A part sizes")->capture_default_str();
    gcu->add_option("--b", b_csv, "B part sizes")->capture_default_str();
    gcu->add_option("--s", s8_csv, "S class sizes (eight)")->capture_default_str();
    gcu->add_option("--r", gr, "R size")->capture_default_str();
    gcu->add_option("--inner-p", inner_p, "extra-edge rate inside parts")->capture_default_str();
    gcu->add_option("--seed", seed, "seed")->capture_default_str();
    gcu->add_option("-o,--out", out_path, "output file (default stdout)");
    gcu->add_option("--cert", cert_out, "also write the split JSON here");

    int rx = 0, ry = 0;
    auto* reduce = app.add_subcommand("reduce", "turn a two-in-a-cycle instance into a "
                                                "four-in-a-centered-tree instance");
    reduce->add_option("graph", graph_path, "graph file")->required();
    reduce->add_option("x", rx, "first degree-2 vertex")->required();
    reduce->add_option("y", ry, "second degree-2 vertex")->required();
    reduce->add_option("-o,--out", out_path, "output file (default stdout)");

    std::string sizes_csv = "1000,2000,4000";
    auto* bench = app.add_subcommand("bench", "timing table on random bipartite graphs");
    bench->add_option("--sizes", sizes_csv, "comma-separated vertex counts")->capture_default_str();
    bench->add_option("--seed", seed, "seed")->capture_default_str();

    auto* dot = app.add_subcommand("dot", "export a graph file as DOT");
    dot->add_option("graph", graph_path, "graph file")->required();
    dot->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.got_subcommand(solve)) return cmd_solve(graph_path, ids, as_json, as_dot, gadget_out);
    if (app.got_subcommand(verify)) return cmd_verify(graph_path, cert_path);
    if (app.got_subcommand(oracle)) return cmd_oracle(graph_path, ids, as_json);
    if (app.got_subcommand(fuzz)) return cmd_fuzz(count, n_min, n_max, seed, inject, out_path);
    if (app.got_subcommand(gen)) {
        if (gen->got_subcommand(grand)) return cmd_gen_rand(gn, gp, seed, out_path);
        if (gen->got_subcommand(gsq))
            return cmd_gen_square(a_csv, s4_csv, gr, inner_p, seed, out_path, cert_out);
        return cmd_gen_cubic(a_csv, b_csv, s8_csv, gr, inner_p, seed, out_path, cert_out);
    }
    if (app.got_subcommand(reduce)) return cmd_reduce(graph_path, rx, ry, out_path);
    if (app.got_subcommand(bench)) return cmd_bench(sizes_csv, seed);
    if (app.got_subcommand(dot)) {
        GraphFile gf;
        try {
            gf = read_graph_file(graph_path);
        } catch (const std::exception& e) {
            return fail_input(e.what());
        }
        return emit(dot_plain(gf.graph, gf.labels), out_path) ? 0 : 2;
    }
    return 2;
}
