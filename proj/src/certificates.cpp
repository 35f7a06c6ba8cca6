#include "fourtree/certificates.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fourtree {

namespace {

nlohmann::json set_to_json(const VertexSet& s) { return nlohmann::json(s.to_vector()); }

VertexSet set_from_json(const nlohmann::json& j, int universe, const char* field) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string("certificate field ") + field + " must be a list");
    }
    VertexSet out(universe);
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw std::invalid_argument(std::string("certificate field ") + field +
                                        " holds a non-integer");
        }
        long long v = e.get<long long>();
        if (v < 0 || v >= universe) {
            throw std::invalid_argument(std::string("certificate field ") + field +
                                        " references unknown vertex " + std::to_string(v));
        }
        out.insert((Vertex)v);
    }
    return out;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("certificate is missing field ") + name);
    }
    return *it;
}

std::array<Vertex, 4> terminals_from_json(const nlohmann::json& j, int universe) {
    const auto& t = field(j, "terminals");
    if (!t.is_array() || t.size() != 4) {
        throw std::invalid_argument("certificate terminals must list exactly four vertices");
    }
    std::array<Vertex, 4> out{};
    for (int i = 0; i < 4; ++i) {
        long long v = t[i].is_number_integer() ? t[i].get<long long>() : -1;
        if (v < 0 || v >= universe) {
            throw std::invalid_argument("certificate terminal references unknown vertex");
        }
        out[i] = (Vertex)v;
    }
    return out;
}

template <size_t N>
std::array<VertexSet, N> sets_from_json(const nlohmann::json& j, int universe, const char* name) {
    const auto& arr = field(j, name);
    if (!arr.is_array() || arr.size() != N) {
        throw std::invalid_argument(std::string("certificate field ") + name + " must hold " +
                                    std::to_string(N) + " lists");
    }
    std::array<VertexSet, N> out;
    for (size_t i = 0; i < N; ++i) out[i] = set_from_json(arr[i], universe, name);
    return out;
}

}  // namespace

nlohmann::json square_to_json(const SquareSplit& split) {
    nlohmann::json j;
    j["kind"] = "square";
    for (int i = 0; i < 4; ++i) {
        j["A"].push_back(set_to_json(split.a[i]));
        j["S"].push_back(set_to_json(split.s[i]));
    }
    j["R"] = set_to_json(split.r);
    j["terminals"] = split.terminals;
    return j;
}

nlohmann::json cubic_to_json(const CubicSplit& split) {
    nlohmann::json j;
    j["kind"] = "cubic";
    for (int i = 0; i < 4; ++i) {
        j["A"].push_back(set_to_json(split.a[i]));
        j["B"].push_back(set_to_json(split.b[i]));
    }
    for (int i = 0; i < 8; ++i) j["S"].push_back(set_to_json(split.s[i]));
    j["R"] = set_to_json(split.r);
    j["terminals"] = split.terminals;
    return j;
}

SquareSplit square_from_json(const nlohmann::json& j, int universe) {
    if (field(j, "kind") != "square") {
        throw std::invalid_argument("certificate kind is not square");
    }
    SquareSplit out;
    out.a = sets_from_json<4>(j, universe, "A");
    out.s = sets_from_json<4>(j, universe, "S");
    out.r = set_from_json(field(j, "R"), universe, "R");
    out.terminals = terminals_from_json(j, universe);
    return out;
}

CubicSplit cubic_from_json(const nlohmann::json& j, int universe) {
    if (field(j, "kind") != "cubic") {
        throw std::invalid_argument("certificate kind is not cubic");
    }
    CubicSplit out;
    out.a = sets_from_json<4>(j, universe, "A");
    out.b = sets_from_json<4>(j, universe, "B");
    out.s = sets_from_json<8>(j, universe, "S");
    out.r = set_from_json(field(j, "R"), universe, "R");
    out.terminals = terminals_from_json(j, universe);
    return out;
}

nlohmann::json solve_result_to_json(const SolveResult& res) {
    nlohmann::json j;
    switch (res.kind) {
        case SolveResult::Kind::FoundTree:
            j["answer"] = "tree";
            j["vertices"] = res.tree.vertices.to_vector();
            break;
        case SolveResult::Kind::SquareCertificate:
            j["answer"] = "no-tree";
            j["certificate"] = square_to_json(res.square);
            j["gadgeted"] = true;
            break;
        case SolveResult::Kind::CubicCertificate:
            j["answer"] = "no-tree";
            j["certificate"] = cubic_to_json(res.cubic);
            j["gadgeted"] = true;
            break;
        case SolveResult::Kind::Disconnected: {
            j["answer"] = "no-tree";
            nlohmann::json cert;
            cert["kind"] = "disconnected";
            std::vector<Vertex> original;
            int n = res.terminals.x[0];  // pendants sit above the input ids
            for (Vertex v : res.component.to_vector()) {
                if (v < n) original.push_back(v);
            }
            cert["component"] = original;
            j["certificate"] = cert;
            j["gadgeted"] = false;
            break;
        }
    }
    return j;
}

}  // namespace fourtree
