#ifndef PAIRDOM_GRAPH_IO_HPP
#define PAIRDOM_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "pairdom/graph.hpp"

namespace pairdom {

// Line-oriented DIMACS-style graph format, 1-indexed:
//   c <comment>
//   p edge <n> <m>      exactly once, before any e/l line
//   e <u> <v>           exactly m lines
//   l <v> <role>        optional role label, role is a non-whitespace token
// Parsing is strict: unknown line types, duplicate headers, stray tokens and
// edge-count mismatches are SYNTAX errors.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

} // namespace pairdom

#endif
