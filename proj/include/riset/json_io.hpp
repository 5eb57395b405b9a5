#pragma once

#include "json.hpp"

#include "riset/family.hpp"
#include "riset/oracle.hpp"
#include "riset/sparsity.hpp"

namespace riset {

// JSON shapes used on disk and by the command line tool:
//   family    {"n": 2, "sets": [[0,2],[1,3]]}
//   selection {"picks": [{"set_index": 0, "vertex": 2}]}
//   failure   {"stage": "...", "depth": 0, "family_size": 4, "detail": "..."}
//   coloring  {"palette": 3, "colors": [0,1,2,0]}
//   order     {"order": [2,0,1]}
//   report    {"bound": 3, "trials": 200, "passes": 200, "seed": 7,
//              "counterexample": family or null}
// Parsers validate shape and ranges and throw std::runtime_error with the
// offending field named.

nlohmann::json family_to_json(const IndependentFamily& fam);
IndependentFamily family_from_json(const nlohmann::json& j);

nlohmann::json selection_to_json(const RainbowSelection& sel);
RainbowSelection selection_from_json(const nlohmann::json& j);

nlohmann::json failure_to_json(const FailureReport& rep);
FailureReport failure_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const ColorAssignment& c);
ColorAssignment coloring_from_json(const nlohmann::json& j);

nlohmann::json order_to_json(const LinearOrder& o);
LinearOrder order_from_json(const nlohmann::json& j);

nlohmann::json chromatic_report_to_json(const ChromaticCheckReport& rep);

}  // namespace riset
