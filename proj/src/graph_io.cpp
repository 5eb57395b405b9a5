#include "riset/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace riset {
namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

// Splits a stream into meaningful lines, skipping blanks and `c` comments.
std::vector<std::pair<int, std::string>> meaningful_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == 'c') continue;
        out.emplace_back(no, line.substr(start));
    }
    return out;
}

// Parses `<tag> <int>...` with exactly `want` integers and nothing trailing.
std::vector<long> fields(int line_no, const std::string& line, char tag, int want) {
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head.size() != 1 || head[0] != tag)
        fail(line_no, "expected '" + std::string(1, tag) + "' line, got '" + line + "'");
    std::vector<long> vals;
    long v;
    while (ss >> v) vals.push_back(v);
    if (!ss.eof()) fail(line_no, "non-numeric field in '" + line + "'");
    if (static_cast<int>(vals.size()) != want)
        fail(line_no, "expected " + std::to_string(want) + " fields in '" + line + "'");
    return vals;
}

}  // namespace

Graph read_graph(std::istream& in) {
    auto lines = meaningful_lines(in);
    if (lines.empty()) throw std::runtime_error("empty graph input");
    auto head = fields(lines[0].first, lines[0].second, 'p', 2);
    long n = head[0], m = head[1];
    if (n < 0 || m < 0) fail(lines[0].first, "negative count in header");
    Graph g(static_cast<int>(n));
    if (static_cast<long>(lines.size()) - 1 != m)
        throw std::runtime_error("header declares " + std::to_string(m) + " edges, found " +
                                 std::to_string(lines.size() - 1) + " edge lines");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto ev = fields(lines[i].first, lines[i].second, 'e', 2);
        long u = ev[0], v = ev[1];
        if (u < 1 || u > n || v < 1 || v > n)
            fail(lines[i].first, "endpoint out of range 1.." + std::to_string(n));
        if (u == v) fail(lines[i].first, "self-loop");
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return read_graph(ss);
}

std::string format_graph(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

RootedForest read_forest(std::istream& in) {
    auto lines = meaningful_lines(in);
    std::vector<std::optional<int>> parent;
    std::vector<bool> seen;
    for (const auto& [no, line] : lines) {
        auto vv = fields(no, line, 'v', 2);
        long id = vv[0], par = vv[1];
        if (id < 0) fail(no, "negative vertex id");
        if (par < -1) fail(no, "parent must be a vertex id or -1");
        if (static_cast<std::size_t>(id) >= parent.size()) {
            parent.resize(id + 1);
            seen.resize(id + 1, false);
        }
        if (seen[id]) fail(no, "duplicate vertex " + std::to_string(id));
        seen[id] = true;
        parent[id] = par == -1 ? std::nullopt : std::optional<int>(static_cast<int>(par));
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw std::runtime_error("vertex " + std::to_string(i) + " has no line");
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (parent[i] && static_cast<std::size_t>(*parent[i]) >= parent.size())
            throw std::runtime_error("vertex " + std::to_string(i) + " has out-of-range parent");
    return RootedForest::from_parents(parent);
}

void write_forest(std::ostream& out, const RootedForest& f) {
    for (int v = 0; v < f.size(); ++v) {
        auto p = f.parent(v);
        out << "v " << v << ' ' << (p ? *p : -1) << '\n';
    }
}

RootedForest parse_forest(const std::string& text) {
    std::istringstream ss(text);
    return read_forest(ss);
}

std::string format_forest(const RootedForest& f) {
    std::ostringstream ss;
    write_forest(ss, f);
    return ss.str();
}

}  // namespace riset
