#pragma once

#include <iosfwd>
#include <string>

#include "quasipart/graph.hpp"

namespace quasipart {

// Text format, one instance per file:
//
//   qcg 1 <n> <m_und> <m_arc>
//   v <id> <edge ids in cyclic rotation order>     (n lines)
//   e <id> <endpoint> <endpoint> [virtual]         (m_und lines)
//   a <id> <tail> <head> <length>                  (m_arc lines)
//
// Ids are dense and 0-based. '#' starts a comment. Lengths are decimal
// literals; writing uses the shortest representation that round-trips.
PlanarDigraph read_graph(std::istream& in);
PlanarDigraph read_graph_file(const std::string& path);

// `header` lines are emitted as comments before the data.
void write_graph(std::ostream& out, const PlanarDigraph& g, const std::string& header = "");
void write_graph_file(const std::string& path, const PlanarDigraph& g,
                      const std::string& header = "");

std::string format_length(double x);

}  // namespace quasipart
