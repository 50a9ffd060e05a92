#include "quasipart/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "quasipart/errors.hpp"

namespace quasipart {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

std::uint32_t parse_id(std::string_view token, std::size_t line, std::uint64_t bound,
                       const char* what) {
  const std::uint64_t value = parse_count(token, line, what);
  if (value >= bound) {
    throw ParseError(line, std::string(what) + " " + std::string(token) + " out of range");
  }
  return static_cast<std::uint32_t>(value);
}

double parse_length(std::string_view token, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value) ||
      value < 0.0) {
    throw ParseError(line, "invalid arc length '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

PlanarDigraph read_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m_und = 0, m_arc = 0;
  std::vector<std::optional<std::vector<EdgeId>>> rotation;
  std::vector<std::optional<Edge>> edges;
  std::vector<std::optional<Arc>> arcs;
  std::vector<std::size_t> arc_line;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto tok = tokenize(raw);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 5 || tok[0] != "qcg" || tok[1] != "1") {
        throw ParseError(line_no, "expected header 'qcg 1 <n> <m_und> <m_arc>'");
      }
      n = parse_count(tok[2], line_no, "vertex count");
      m_und = parse_count(tok[3], line_no, "edge count");
      m_arc = parse_count(tok[4], line_no, "arc count");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      rotation.resize(n);
      edges.resize(m_und);
      arcs.resize(m_arc);
      arc_line.resize(m_arc);
      have_header = true;
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() < 2) throw ParseError(line_no, "vertex line needs an id");
      const VertexId v = parse_id(tok[1], line_no, n, "vertex id");
      if (rotation[v]) throw ParseError(line_no, "duplicate vertex " + std::to_string(v));
      std::vector<EdgeId> order;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        order.push_back(parse_id(tok[i], line_no, m_und, "edge id"));
      }
      rotation[v] = std::move(order);
    } else if (tok[0] == "e") {
      if (tok.size() != 4 && !(tok.size() == 5 && tok[4] == "virtual")) {
        throw ParseError(line_no, "edge line is 'e <id> <endpoint> <endpoint> [virtual]'");
      }
      const EdgeId e = parse_id(tok[1], line_no, m_und, "edge id");
      if (edges[e]) throw ParseError(line_no, "duplicate edge " + std::to_string(e));
      Edge edge{parse_id(tok[2], line_no, n, "vertex id"), parse_id(tok[3], line_no, n, "vertex id"),
                tok.size() == 5};
      if (edge.u == edge.v) throw ParseError(line_no, "self-loop edge");
      edges[e] = edge;
    } else if (tok[0] == "a") {
      if (tok.size() != 5) throw ParseError(line_no, "arc line is 'a <id> <tail> <head> <length>'");
      const ArcId a = parse_id(tok[1], line_no, m_arc, "arc id");
      if (arcs[a]) throw ParseError(line_no, "duplicate arc " + std::to_string(a));
      Arc arc{parse_id(tok[2], line_no, n, "vertex id"), parse_id(tok[3], line_no, n, "vertex id"),
              parse_length(tok[4], line_no), kNoEdge};
      if (arc.tail == arc.head) throw ParseError(line_no, "self-loop arc");
      arcs[a] = arc;
      arc_line[a] = line_no;
    } else {
      throw ParseError(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  for (std::uint64_t v = 0; v < n; ++v) {
    if (!rotation[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " not listed");
  }
  for (std::uint64_t e = 0; e < m_und; ++e) {
    if (!edges[e]) throw ParseError(line_no, "edge " + std::to_string(e) + " not listed");
  }

  // Each arc sits on the edge slot of its endpoint pair; antiparallel arcs
  // share it.
  std::vector<std::vector<EdgeId>> slots(n);
  for (EdgeId e = 0; e < m_und; ++e) {
    slots[edges[e]->u].push_back(e);
    slots[edges[e]->v].push_back(e);
  }
  std::vector<Arc> final_arcs;
  final_arcs.reserve(m_arc);
  for (std::uint64_t a = 0; a < m_arc; ++a) {
    if (!arcs[a]) throw ParseError(line_no, "arc " + std::to_string(a) + " not listed");
    Arc arc = *arcs[a];
    for (EdgeId e : slots[arc.tail]) {
      const Edge& ed = *edges[e];
      if (!ed.is_virtual && ((ed.u == arc.tail && ed.v == arc.head) ||
                             (ed.v == arc.tail && ed.u == arc.head))) {
        arc.edge = e;
        break;
      }
    }
    if (arc.edge == kNoEdge) {
      throw ParseError(arc_line[a], "arc has no real embedding edge between its endpoints");
    }
    final_arcs.push_back(arc);
  }

  std::vector<Edge> final_edges;
  for (auto& e : edges) final_edges.push_back(*e);
  std::vector<std::vector<EdgeId>> final_rotation;
  for (auto& r : rotation) final_rotation.push_back(std::move(*r));
  try {
    return PlanarDigraph(n, std::move(final_edges), std::move(final_arcs),
                         std::move(final_rotation));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

PlanarDigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return read_graph(in);
}

std::string format_length(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void write_graph(std::ostream& out, const PlanarDigraph& g, const std::string& header) {
  std::istringstream lines(header);
  for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  out << "qcg 1 " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.arc_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v;
    for (EdgeId e : g.rotation(v)) out << ' ' << e;
    out << '\n';
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "e " << e << ' ' << ed.u << ' ' << ed.v << (ed.is_virtual ? " virtual" : "") << '\n';
  }
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    out << "a " << a << ' ' << arc.tail << ' ' << arc.head << ' ' << format_length(arc.length)
        << '\n';
  }
}

void write_graph_file(const std::string& path, const PlanarDigraph& g,
                      const std::string& header) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write graph file " + path);
  write_graph(out, g, header);
}

}  // namespace quasipart
