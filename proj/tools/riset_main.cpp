#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "riset/extract.hpp"
#include "riset/graph_io.hpp"
#include "riset/json_io.hpp"
#include "riset/mbound.hpp"
#include "riset/oracle.hpp"
#include "riset/rng.hpp"
#include "riset/sparsity.hpp"

namespace {

using nlohmann::json;
using namespace riset;

// Exit codes: 0 success, 1 no rainbow / failure report, 2 usage or input
// error, 3 search cap exceeded.
constexpr int kOk = 0;
constexpr int kNoRainbow = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

json load_json(const std::string& path) { return json::parse(slurp(path)); }

WcolMode parse_mode(const std::string& mode) {
    if (mode == "exact") return WcolMode::Exact;
    if (mode == "heuristic") return WcolMode::Heuristic;
    throw CLI::ValidationError("--mode", "must be exact or heuristic");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

struct Options {
    std::string graph_path = "-";
    std::string family_path;
    std::string kind = "path";
    std::string parts = "2,2";
    std::string set_list;
    std::string mode = "heuristic";
    int r = 1;
    int n = 2;
    int p = 0;
    int d = 1;
    int trials = 200;
    int cap = 18;
    long node_cap = 10'000'000;
    std::uint64_t seed = 0;
    bool verbose = false;
};

int run_gen(const Options& o) {
    Graph g;
    if (o.kind == "path")
        g = make_path(o.n);
    else if (o.kind == "cycle")
        g = make_cycle(o.n);
    else if (o.kind == "complete")
        g = make_complete(o.n);
    else if (o.kind == "empty")
        g = make_empty(o.n);
    else if (o.kind == "star")
        g = make_star(o.n);
    else if (o.kind == "multipartite")
        g = make_complete_multipartite(parse_int_list(o.parts));
    else if (o.kind == "petersen") {
        g = Graph(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
    } else
        throw CLI::ValidationError("--kind", "unknown generator " + o.kind);
    std::cout << format_graph(g);
    return kOk;
}

int run_power(const Options& o) {
    Graph g = load_graph(o.graph_path);
    std::cout << format_graph(power(g, o.r));
    return kOk;
}

int run_treedepth(const Options& o) {
    Graph g = load_graph(o.graph_path);
    TreedepthResult res = treedepth_exact(g, o.cap);
    std::vector<int> parent(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto pa = res.forest.parent(v)) parent[v] = *pa;
    emit(json{{"depth", res.depth}, {"parent", parent}});
    if (o.verbose) std::cerr << "tree-depth " << res.depth << "\n";
    return kOk;
}

int run_wcol(const Options& o) {
    Graph g = load_graph(o.graph_path);
    WcolResult res = wcol(g, o.r, parse_mode(o.mode));
    emit(json{{"value", res.value}, {"order", res.witness.sequence()}});
    if (o.verbose) std::cerr << "wcol_" << o.r << " = " << res.value << "\n";
    return kOk;
}

int run_ltd_color(const Options& o) {
    Graph g = load_graph(o.graph_path);
    emit(coloring_to_json(low_treedepth_coloring(g, o.p, o.cap)));
    return kOk;
}

int run_closure(const Options& o) {
    Graph g = load_graph(o.graph_path);
    emit(json{{"closure", shortest_path_closure(g, parse_int_list(o.set_list), o.r)}});
    return kOk;
}

int run_refine(const Options& o) {
    Graph g = load_graph(o.graph_path);
    ColorAssignment base = low_treedepth_coloring(g, o.p, o.cap);
    LinearOrder order = wcol(g, o.r, parse_mode(o.mode)).witness;
    emit(coloring_to_json(excellent_refinement(g, base, o.r, order)));
    return kOk;
}

int report_outcome(const ExtractOutcome& out, bool verbose) {
    if (const auto* rep = std::get_if<FailureReport>(&out)) {
        emit(failure_to_json(*rep));
        if (verbose) std::cerr << "no rainbow: " << rep->stage << ", " << rep->detail << "\n";
        return kNoRainbow;
    }
    const auto& sel = std::get<RainbowSelection>(out);
    emit(selection_to_json(sel));
    if (verbose) std::cerr << "rainbow of size " << sel.picks.size() << " found\n";
    return kOk;
}

int run_extract(const Options& o) {
    Graph g = load_graph(o.graph_path);
    IndependentFamily fam = family_from_json(load_json(o.family_path));
    return report_outcome(extract_treedepth_graph(g, o.r, fam, o.cap), o.verbose);
}

int run_extract_be(const Options& o) {
    Graph g = load_graph(o.graph_path);
    IndependentFamily fam = family_from_json(load_json(o.family_path));
    BePipelineOptions opts;
    opts.wcol_mode = parse_mode(o.mode);
    opts.treedepth_cap = o.cap;
    return report_outcome(extract_bounded_expansion(g, o.r, o.n, fam, opts), o.verbose);
}

int run_rainbow_oracle(const Options& o) {
    Graph g = load_graph(o.graph_path);
    IndependentFamily fam = family_from_json(load_json(o.family_path));
    make_family(g, fam.set_size, fam.sets);
    auto found = find_rainbow_bruteforce(g, fam, o.node_cap);
    if (!found) {
        emit(json());
        if (o.verbose) std::cerr << "no rainbow exists\n";
        return kNoRainbow;
    }
    emit(selection_to_json(*found));
    return kOk;
}

int run_f_exact(const Options& o) {
    Graph g = load_graph(o.graph_path);
    FExactResult res = f_exact(g, o.n, o.node_cap);
    json value;
    if (res.value) value = *res.value;
    emit(json{{"value", value},
              {"lower_bound", res.lower_bound},
              {"witness", family_to_json(res.witness_bad_family)}});
    if (o.verbose) {
        if (res.value)
            std::cerr << "f = " << *res.value << "\n";
        else
            std::cerr << "cap exceeded; f >= " << res.lower_bound << "\n";
    }
    return res.value ? kOk : kCap;
}

int run_check_chromatic(const Options& o) {
    Graph g = load_graph(o.graph_path);
    ChromaticCheckReport rep = check_chromatic_bound(g, o.n, o.trials, o.seed, o.cap);
    emit(chromatic_report_to_json(rep));
    if (o.verbose)
        std::cerr << rep.passes << "/" << rep.trials << " trials found a rainbow"
                  << (rep.vacuous ? " (vacuous)" : "") << "\n";
    return rep.passes == rep.trials ? kOk : kNoRainbow;
}

int run_matching_rainbow(const Options& o) {
    Graph g = load_graph(o.graph_path);
    json j = load_json(o.family_path);
    if (!j.is_object() || !j.contains("n") || !j.contains("matchings"))
        throw std::runtime_error("matchings file needs fields \"n\" and \"matchings\"");
    int n = j.at("n").get<int>();
    std::vector<std::vector<Edge>> matchings;
    for (const auto& m : j.at("matchings")) {
        std::vector<Edge> edges;
        for (const auto& e : m) {
            if (!e.is_array() || e.size() != 2)
                throw std::runtime_error("each matching edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        matchings.push_back(std::move(edges));
    }
    MatchingOutcome out = rainbow_induced_matching(g, n, matchings, o.cap);
    if (const auto* rep = std::get_if<FailureReport>(&out)) {
        emit(failure_to_json(*rep));
        return kNoRainbow;
    }
    const auto& sel = std::get<MatchingSelection>(out);
    json picks = json::array();
    for (const auto& [edge, idx] : sel.picks)
        picks.push_back(json{{"edge", {edge.first, edge.second}}, {"set_index", idx}});
    emit(json{{"picks", picks}});
    return kOk;
}

int run_m_bound(const Options& o) {
    std::cout << m_bound(o.d, o.n, o.p, o.r) << "\n";
    return kOk;
}

int run_audit(const Options& o) {
    Graph g = load_graph(o.graph_path);
    ColorAssignment base = low_treedepth_coloring(g, o.p, o.cap);
    LinearOrder order = wcol(g, o.r, parse_mode(o.mode)).witness;
    ColorAssignment refined = excellent_refinement(g, base, o.r, order);
    std::int64_t budget = excellence_budget(g, o.r, parse_mode(o.mode));
    SplitMix64 rng(o.seed);
    std::vector<std::vector<int>> samples;
    for (int t = 0; t < o.trials; ++t) {
        if (g.vertex_count() == 0) break;
        int size = 1 + static_cast<int>(rng.below(std::min(g.vertex_count(), 8)));
        std::vector<int> sample;
        for (int i = 0; i < size; ++i)
            sample.push_back(static_cast<int>(rng.below(g.vertex_count())));
        std::sort(sample.begin(), sample.end());
        sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
        samples.push_back(std::move(sample));
    }
    AuditReport rep = audit_excellence(g, base, refined, o.r, budget, samples);
    emit(json{{"budget", budget},
              {"samples", rep.samples},
              {"failures", rep.failures},
              {"passed", rep.passed},
              {"violations", rep.violations}});
    return rep.passed ? kOk : kNoRainbow;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow independent set toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("-g,--graph", o.graph_path, "graph file, - for stdin");
    };
    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("-f,--family", o.family_path, "family JSON file, - for stdin")
            ->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--verbose", o.verbose, "human summary on standard error");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a named graph");
    gen->add_option("--kind", o.kind,
                    "path, cycle, complete, empty, star, multipartite, petersen");
    gen->add_option("-n", o.n, "vertex count (leaves for star)");
    gen->add_option("--parts", o.parts, "comma list of part sizes for multipartite");

    CLI::App* pw = app.add_subcommand("power", "r-th power of a graph");
    add_graph(pw);
    pw->add_option("-r", o.r, "power radius");

    CLI::App* td = app.add_subcommand("treedepth", "exact tree-depth and forest");
    add_graph(td);
    td->add_option("--cap", o.cap, "vertex cap for the exact search");

    CLI::App* wc = app.add_subcommand("wcol", "weak r-coloring number");
    add_graph(wc);
    wc->add_option("-r", o.r, "radius");
    wc->add_option("--mode", o.mode, "exact or heuristic");

    CLI::App* ltd = app.add_subcommand("ltd-color", "low tree-depth coloring");
    add_graph(ltd);
    ltd->add_option("-p", o.p, "union size the coloring must survive")->required();
    ltd->add_option("--cap", o.cap, "vertex cap for the exact tree-depth search");

    CLI::App* cl = app.add_subcommand("closure", "r-shortest-path closure of a vertex set");
    add_graph(cl);
    cl->add_option("-r", o.r, "radius");
    cl->add_option("--set", o.set_list, "comma list of vertices")->required();

    CLI::App* rf = app.add_subcommand("refine", "excellent refinement of a low td coloring");
    add_graph(rf);
    rf->add_option("-r", o.r, "radius");
    rf->add_option("-p", o.p, "union size for the base coloring")->required();
    rf->add_option("--mode", o.mode, "exact or heuristic order");
    rf->add_option("--cap", o.cap, "vertex cap for the exact tree-depth search");

    CLI::App* ex = app.add_subcommand("extract", "rainbow extraction via tree-depth");
    add_graph(ex);
    add_family(ex);
    ex->add_option("-r", o.r, "power radius");
    ex->add_option("--cap", o.cap, "vertex cap for the exact tree-depth search");

    CLI::App* exbe = app.add_subcommand("extract-be",
                                        "rainbow extraction via the sparsity pipeline");
    add_graph(exbe);
    add_family(exbe);
    exbe->add_option("-r", o.r, "power radius");
    exbe->add_option("-n", o.n, "set size");
    exbe->add_option("--mode", o.mode, "exact or heuristic wcol");
    exbe->add_option("--cap", o.cap, "vertex cap for the exact tree-depth search");

    CLI::App* ro = app.add_subcommand("rainbow-oracle", "exhaustive rainbow search");
    add_graph(ro);
    add_family(ro);
    ro->add_option("--cap", o.node_cap, "search node cap");

    CLI::App* fe = app.add_subcommand("f-exact", "exact rainbow threshold f_G(n)");
    add_graph(fe);
    fe->add_option("-n", o.n, "set size");
    fe->add_option("--cap", o.node_cap, "search node cap");

    CLI::App* cc = app.add_subcommand("check-chromatic", "statistical chromatic bound check");
    add_graph(cc);
    cc->add_option("-n", o.n, "set size");
    cc->add_option("--trials", o.trials, "number of random families");
    cc->add_option("--seed", o.seed, "master seed");
    cc->add_option("--cap", o.cap, "vertex cap for chromatic number");

    CLI::App* mr = app.add_subcommand("matching-rainbow",
                                      "rainbow induced matching via subdivision");
    add_graph(mr);
    add_family(mr);
    mr->add_option("--cap", o.cap, "vertex cap for the exact tree-depth search");

    CLI::App* mb = app.add_subcommand("m-bound", "family-size threshold M(d,n,p,r)");
    mb->add_option("-d", o.d, "tree height")->required();
    mb->add_option("-n", o.n, "set size")->required();
    mb->add_option("-p", o.p, "remaining budget parameter")->required();
    mb->add_option("-r", o.r, "power radius")->required();

    CLI::App* au = app.add_subcommand("audit", "closure and color budget audit");
    add_graph(au);
    au->add_option("-r", o.r, "radius");
    au->add_option("-p", o.p, "union size for the base coloring")->required();
    au->add_option("--mode", o.mode, "exact or heuristic order");
    au->add_option("--seed", o.seed, "sample seed");
    au->add_option("--trials", o.trials, "number of sampled sets");
    au->add_option("--cap", o.cap, "vertex cap for the exact tree-depth search");

    for (CLI::App* cmd : app.get_subcommands(nullptr)) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) return run_gen(o);
        if (pw->parsed()) return run_power(o);
        if (td->parsed()) return run_treedepth(o);
        if (wc->parsed()) return run_wcol(o);
        if (ltd->parsed()) return run_ltd_color(o);
        if (cl->parsed()) return run_closure(o);
        if (rf->parsed()) return run_refine(o);
        if (ex->parsed()) return run_extract(o);
        if (exbe->parsed()) return run_extract_be(o);
        if (ro->parsed()) return run_rainbow_oracle(o);
        if (fe->parsed()) return run_f_exact(o);
        if (cc->parsed()) return run_check_chromatic(o);
        if (mr->parsed()) return run_matching_rainbow(o);
        if (mb->parsed()) return run_m_bound(o);
        if (au->parsed()) return run_audit(o);
    } catch (const cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
