#pragma once

#include <json.hpp>

#include "fourtree/cubic.hpp"
#include "fourtree/graph.hpp"
#include "fourtree/solver.hpp"
#include "fourtree/square.hpp"

namespace fourtree {

// JSON shapes:
//   {"kind":"square","A":[[..]x4],"S":[[..]x4],"R":[..],"terminals":[..]}
//   {"kind":"cubic","A":[[..]x4],"B":[[..]x4],"S":[[..]x8],"R":[..],"terminals":[..]}
// Vertex lists are ascending. Parsers check every id against the
// universe and throw invalid_argument on malformed input.
nlohmann::json square_to_json(const SquareSplit& split);
nlohmann::json cubic_to_json(const CubicSplit& split);
SquareSplit square_from_json(const nlohmann::json& j, int universe);
CubicSplit cubic_from_json(const nlohmann::json& j, int universe);

// Solve outcome:
//   {"answer":"tree","vertices":[..]}                      (input-graph ids)
//   {"answer":"no-tree","certificate":{..},"gadgeted":true}  (working-graph ids)
// A disconnected result uses {"kind":"disconnected","component":[..]}
// with gadgeted false: the witness is restricted to input-graph ids.
nlohmann::json solve_result_to_json(const SolveResult& res);

}  // namespace fourtree
