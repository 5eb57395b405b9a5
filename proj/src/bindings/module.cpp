#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "riset/extract.hpp"
#include "riset/forest.hpp"
#include "riset/graph.hpp"
#include "riset/mbound.hpp"
#include "riset/oracle.hpp"
#include "riset/sparsity.hpp"

namespace py = pybind11;
using namespace riset;

namespace {

IndependentFamily family_of(int n, const std::vector<std::vector<int>>& sets) {
    IndependentFamily fam;
    fam.set_size = n;
    fam.sets = sets;
    return fam;
}

py::dict selection_dict(const RainbowSelection& sel) {
    py::list picks;
    for (const auto& p : sel.picks) {
        py::dict d;
        d["vertex"] = p.vertex;
        d["set_index"] = p.set_index;
        picks.append(d);
    }
    py::dict out;
    out["picks"] = picks;
    return out;
}

py::dict failure_dict(const FailureReport& rep) {
    py::dict d;
    d["stage"] = rep.stage;
    d["depth"] = rep.depth;
    d["family_size"] = rep.family_size;
    d["detail"] = rep.detail;
    return d;
}

py::object outcome_obj(const ExtractOutcome& out) {
    if (const auto* rep = std::get_if<FailureReport>(&out)) return failure_dict(*rep);
    return selection_dict(std::get<RainbowSelection>(out));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rainbow independent set extraction on sparse graph powers";

    py::register_exception<cap_exceeded>(m, "CapExceeded");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("vertices") = 0)
        .def("add_edge", &Graph::add_edge)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    m.def("make_path", &make_path);
    m.def("make_cycle", &make_cycle);
    m.def("make_complete", &make_complete);
    m.def("make_empty", &make_empty);
    m.def("make_star", &make_star);
    m.def("make_complete_multipartite", &make_complete_multipartite);

    m.def("power", &power, py::arg("graph"), py::arg("r"));
    m.def("is_independent", &is_independent, py::arg("graph"), py::arg("vertices"));

    m.def(
        "treedepth",
        [](const Graph& g, int cap) {
            TreedepthResult res = treedepth_exact(g, cap);
            std::vector<int> parent(g.vertex_count(), -1);
            for (int v = 0; v < g.vertex_count(); ++v)
                if (auto pa = res.forest.parent(v)) parent[v] = *pa;
            return py::make_tuple(res.depth, parent);
        },
        py::arg("graph"), py::arg("cap") = 18,
        "Exact tree-depth; returns (depth, parent array with -1 at roots).");

    m.def(
        "wcol",
        [](const Graph& g, int r, const std::string& mode) {
            WcolResult res =
                wcol(g, r, mode == "exact" ? WcolMode::Exact : WcolMode::Heuristic);
            return py::make_tuple(res.value, res.witness.sequence());
        },
        py::arg("graph"), py::arg("r"), py::arg("mode") = "heuristic",
        "Weak r-coloring number; returns (value, witness order).");

    m.def("shortest_path_closure", &shortest_path_closure, py::arg("graph"),
          py::arg("vertices"), py::arg("r"));

    m.def(
        "find_rainbow",
        [](const Graph& g, int n, const std::vector<std::vector<int>>& sets,
           long cap) -> py::object {
            auto fam = make_family(g, n, sets);
            auto found = find_rainbow_bruteforce(g, fam, cap);
            if (!found) return py::none();
            return selection_dict(*found);
        },
        py::arg("graph"), py::arg("n"), py::arg("sets"), py::arg("cap") = 10'000'000,
        "Exhaustive rainbow search over an independent family; None when none exists.");

    m.def(
        "f_exact",
        [](const Graph& g, int n, long cap) {
            FExactResult res = f_exact(g, n, cap);
            py::dict d;
            d["value"] = res.value ? py::cast(*res.value) : py::none();
            d["lower_bound"] = res.lower_bound;
            d["witness"] = res.witness_bad_family.sets;
            return d;
        },
        py::arg("graph"), py::arg("n"), py::arg("cap") = 10'000'000);

    m.def(
        "extract_treedepth",
        [](const Graph& g, int r, int n, const std::vector<std::vector<int>>& sets,
           int cap) { return outcome_obj(extract_treedepth_graph(g, r, family_of(n, sets), cap)); },
        py::arg("graph"), py::arg("r"), py::arg("n"), py::arg("sets"),
        py::arg("treedepth_cap") = 18,
        "Rainbow extraction through an exact tree-depth decomposition.");

    m.def(
        "extract_bounded_expansion",
        [](const Graph& g, int r, int n, const std::vector<std::vector<int>>& sets,
           const std::string& mode, int cap) {
            BePipelineOptions opts;
            opts.wcol_mode = mode == "exact" ? WcolMode::Exact : WcolMode::Heuristic;
            opts.treedepth_cap = cap;
            return outcome_obj(extract_bounded_expansion(g, r, n, family_of(n, sets), opts));
        },
        py::arg("graph"), py::arg("r"), py::arg("n"), py::arg("sets"),
        py::arg("mode") = "heuristic", py::arg("treedepth_cap") = 18,
        "Rainbow extraction through the coloring, refinement, closure pipeline.");

    m.def(
        "rainbow_induced_matching",
        [](const Graph& g, int n,
           const std::vector<std::vector<std::pair<int, int>>>& matchings,
           int cap) -> py::object {
            std::vector<std::vector<Edge>> ms;
            for (const auto& m0 : matchings) {
                std::vector<Edge> edges;
                for (const auto& e : m0) edges.push_back(e);
                ms.push_back(std::move(edges));
            }
            MatchingOutcome out = rainbow_induced_matching(g, n, ms, cap);
            if (const auto* rep = std::get_if<FailureReport>(&out)) return failure_dict(*rep);
            const auto& sel = std::get<MatchingSelection>(out);
            py::list picks;
            for (const auto& [edge, idx] : sel.picks) {
                py::dict d;
                d["edge"] = py::make_tuple(edge.first, edge.second);
                d["set_index"] = idx;
                picks.append(d);
            }
            py::dict outd;
            outd["picks"] = picks;
            return outd;
        },
        py::arg("graph"), py::arg("n"), py::arg("matchings"), py::arg("treedepth_cap") = 18,
        "Rainbow induced matching through the subdivision reduction.");

    m.def(
        "check_chromatic_bound",
        [](const Graph& g, int n, int trials, std::uint64_t seed) {
            ChromaticCheckReport rep = check_chromatic_bound(g, n, trials, seed);
            py::dict d;
            d["bound"] = rep.bound;
            d["trials"] = rep.trials;
            d["passes"] = rep.passes;
            d["seed"] = rep.seed;
            d["vacuous"] = rep.vacuous;
            d["counterexample"] =
                rep.counterexample ? py::cast(rep.counterexample->sets) : py::none();
            return d;
        },
        py::arg("graph"), py::arg("n"), py::arg("trials") = 200, py::arg("seed") = 0);

    m.def("m_bound", &m_bound, py::arg("d"), py::arg("n"), py::arg("p"), py::arg("r"),
          "Decimal digits of the family-size threshold M(d, n, p, r).");
}
