#pragma once

#include <iosfwd>
#include <string>

#include "riset/forest.hpp"
#include "riset/graph.hpp"

namespace riset {

// Graph text format (DIMACS-like):
//   line 1: `p <n> <m>`, then m lines `e <u> <v>` with 1-indexed endpoints.
//   Blank lines and `c`-prefixed comments are ignored anywhere.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// Forest text format: one line per vertex `v <id> <parent-id|-1>`,
// 0-indexed ids covering the whole universe. Comments/blank lines as above.
RootedForest read_forest(std::istream& in);
void write_forest(std::ostream& out, const RootedForest& f);
RootedForest parse_forest(const std::string& text);
std::string format_forest(const RootedForest& f);

}  // namespace riset
