#include "riset/json_io.hpp"

#include <stdexcept>
#include <string>

namespace riset {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error(what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) bad("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_array(const json& v, const char* what) {
    if (!v.is_array()) bad(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) bad(std::string(what) + " must hold integers");
        out.push_back(e.get<int>());
    }
    return out;
}

}  // namespace

json family_to_json(const IndependentFamily& fam) {
    json sets = json::array();
    for (const auto& s : fam.sets) sets.push_back(s);
    return json{{"n", fam.set_size}, {"sets", sets}};
}

IndependentFamily family_from_json(const json& j) {
    IndependentFamily fam;
    fam.set_size = int_field(j, "n");
    const json& sets = field(j, "sets");
    if (!sets.is_array()) bad("field \"sets\" must be an array");
    for (const auto& s : sets) fam.sets.push_back(int_array(s, "each set"));
    return fam;
}

json selection_to_json(const RainbowSelection& sel) {
    json picks = json::array();
    for (const auto& p : sel.picks)
        picks.push_back(json{{"set_index", p.set_index}, {"vertex", p.vertex}});
    return json{{"picks", picks}};
}

RainbowSelection selection_from_json(const json& j) {
    RainbowSelection sel;
    const json& picks = field(j, "picks");
    if (!picks.is_array()) bad("field \"picks\" must be an array");
    for (const auto& p : picks)
        sel.picks.push_back({int_field(p, "vertex"), int_field(p, "set_index")});
    return sel;
}

json failure_to_json(const FailureReport& rep) {
    return json{{"stage", rep.stage},
                {"depth", rep.depth},
                {"family_size", rep.family_size},
                {"detail", rep.detail}};
}

FailureReport failure_from_json(const json& j) {
    FailureReport rep;
    const json& stage = field(j, "stage");
    if (!stage.is_string()) bad("field \"stage\" must be a string");
    rep.stage = stage.get<std::string>();
    rep.depth = int_field(j, "depth");
    rep.family_size = int_field(j, "family_size");
    const json& detail = field(j, "detail");
    if (!detail.is_string()) bad("field \"detail\" must be a string");
    rep.detail = detail.get<std::string>();
    return rep;
}

json coloring_to_json(const ColorAssignment& c) {
    return json{{"palette", c.palette_size}, {"colors", c.color}};
}

ColorAssignment coloring_from_json(const json& j) {
    ColorAssignment c;
    c.palette_size = int_field(j, "palette");
    c.color = int_array(field(j, "colors"), "field \"colors\"");
    c.validate();
    return c;
}

json order_to_json(const LinearOrder& o) {
    return json{{"order", o.sequence()}};
}

LinearOrder order_from_json(const json& j) {
    return LinearOrder::from_sequence(int_array(field(j, "order"), "field \"order\""));
}

json chromatic_report_to_json(const ChromaticCheckReport& rep) {
    json counterexample;  // null unless present
    if (rep.counterexample) counterexample = family_to_json(*rep.counterexample);
    return json{{"bound", rep.bound},
                {"trials", rep.trials},
                {"passes", rep.passes},
                {"seed", rep.seed},
                {"counterexample", counterexample}};
}

}  // namespace riset
