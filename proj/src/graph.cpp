#include "quasipart/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "quasipart/errors.hpp"

namespace quasipart {

PlanarDigraph::PlanarDigraph(std::size_t vertex_count, std::vector<Edge> edges,
                             std::vector<Arc> arcs, std::vector<std::vector<EdgeId>> rotation)
    : edges_(std::move(edges)), arcs_(std::move(arcs)), rotation_(std::move(rotation)) {
  if (rotation_.size() != vertex_count) {
    throw StructureError("rotation system must list every vertex");
  }
  const std::size_t n = vertex_count;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= n || ed.v >= n) {
      throw InputError("edge " + std::to_string(e) + " has an invalid endpoint");
    }
    if (ed.u == ed.v) throw InputError("edge " + std::to_string(e) + " is a self-loop");
  }

  pos_u_.assign(edges_.size(), UINT32_MAX);
  pos_v_.assign(edges_.size(), UINT32_MAX);
  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = rotation_[v];
    for (std::uint32_t i = 0; i < rot.size(); ++i) {
      const EdgeId e = rot[i];
      if (e >= edges_.size()) {
        throw StructureError("rotation of vertex " + std::to_string(v) + " names unknown edge");
      }
      auto& slot = edges_[e].u == v ? pos_u_[e] : pos_v_[e];
      if ((edges_[e].u != v && edges_[e].v != v) || slot != UINT32_MAX) {
        throw StructureError("edge " + std::to_string(e) + " misplaced in rotation of vertex " +
                             std::to_string(v));
      }
      slot = i;
    }
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (pos_u_[e] == UINT32_MAX || pos_v_[e] == UINT32_MAX) {
      throw StructureError("edge " + std::to_string(e) + " missing from a rotation");
    }
  }

  out_.assign(n, {});
  in_.assign(n, {});
  edge_arcs_.assign(edges_.size(), {});
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.tail >= n || arc.head >= n) {
      throw InputError("arc " + std::to_string(a) + " has an invalid endpoint");
    }
    if (arc.tail == arc.head) throw InputError("arc " + std::to_string(a) + " is a self-loop");
    if (!std::isfinite(arc.length) || arc.length < 0.0) {
      throw InputError("arc " + std::to_string(a) + " has a negative or non-finite length");
    }
    if (arc.edge >= edges_.size()) {
      throw InputError("arc " + std::to_string(a) + " refers to an unknown edge");
    }
    const Edge& ed = edges_[arc.edge];
    if (ed.is_virtual) {
      throw InputError("arc " + std::to_string(a) + " placed on a virtual edge");
    }
    const bool matches = (ed.u == arc.tail && ed.v == arc.head) ||
                         (ed.v == arc.tail && ed.u == arc.head);
    if (!matches) {
      throw InputError("arc " + std::to_string(a) + " endpoints differ from its edge");
    }
    out_[arc.tail].push_back(a);
    in_[arc.head].push_back(a);
    edge_arcs_[arc.edge].push_back(a);
  }

  if (!satisfies_euler(*this)) {
    throw StructureError("rotation system is not a planar embedding (Euler check failed)");
  }
}

EdgeId PlanarDigraph::rotation_next(VertexId v, EdgeId e) const {
  const auto& rot = rotation_[v];
  const std::uint32_t i = edges_[e].u == v ? pos_u_[e] : pos_v_[e];
  return rot[(i + 1) % rot.size()];
}

Dart PlanarDigraph::face_next(Dart d) const {
  const VertexId y = dart_head(d);
  const EdgeId next = rotation_next(y, d.edge);
  return Dart{next, edges_[next].u == y};
}

bool PlanarDigraph::has_virtual_edges() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_virtual; });
}

bool PlanarDigraph::has_parallel_edges() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

bool operator==(const PlanarDigraph& a, const PlanarDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.arc_count() != b.arc_count()) {
    return false;
  }
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    const Edge &x = a.edges_[e], &y = b.edges_[e];
    if (x.u != y.u || x.v != y.v || x.is_virtual != y.is_virtual) return false;
  }
  for (std::size_t i = 0; i < a.arc_count(); ++i) {
    const Arc &x = a.arcs_[i], &y = b.arcs_[i];
    if (x.tail != y.tail || x.head != y.head || x.length != y.length || x.edge != y.edge) {
      return false;
    }
  }
  return a.rotation_ == b.rotation_;
}

std::vector<std::vector<Dart>> trace_faces(const PlanarDigraph& g) {
  std::vector<char> seen(2 * g.edge_count(), 0);
  auto index = [](Dart d) { return 2 * static_cast<std::size_t>(d.edge) + (d.forward ? 0 : 1); };
  std::vector<std::vector<Dart>> faces;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (bool fwd : {true, false}) {
      Dart start{e, fwd};
      if (seen[index(start)]) continue;
      std::vector<Dart> face;
      Dart d = start;
      do {
        seen[index(d)] = 1;
        face.push_back(d);
        d = g.face_next(d);
      } while (!(d == start));
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

bool satisfies_euler(const PlanarDigraph& g) {
  const std::size_t n = g.vertex_count();
  // Union-find over vertices for the connected components.
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);

  std::vector<long> balance(n, 0);  // v - e + f per component root
  for (VertexId v = 0; v < n; ++v) balance[find(v)] += 1;
  for (const Edge& e : g.edges()) balance[find(e.u)] -= 1;
  for (const auto& face : trace_faces(g)) balance[find(g.dart_tail(face.front()))] += 1;
  for (VertexId v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    long b = balance[v];
    if (g.rotation(v).empty()) b += 1;  // isolated vertex: the one face
    if (b != 2) return false;
  }
  return true;
}

PlanarDigraph reverse(const PlanarDigraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (Arc& a : arcs) std::swap(a.tail, a.head);
  std::vector<std::vector<EdgeId>> rotation(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    rotation[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  }
  return PlanarDigraph(g.vertex_count(), std::move(edges), std::move(arcs), std::move(rotation));
}

DirectedPath make_path(const PlanarDigraph& g, VertexId start, std::span<const ArcId> arcs,
                       Orientation o) {
  if (!g.valid_vertex(start)) throw InputError("path start is not a vertex");
  DirectedPath path;
  path.vertices.push_back(start);
  for (ArcId a : arcs) {
    if (a >= g.arc_count()) throw InputError("path uses an unknown arc");
    if (g.arc_source(a, o) != path.vertices.back()) {
      throw InputError("path arcs do not form a chain");
    }
    path.arcs.push_back(a);
    path.vertices.push_back(g.arc_target(a, o));
    path.length += g.arc(a).length;
  }
  return path;
}

Cutset Cutset::all(std::size_t arc_count) {
  Cutset c(arc_count);
  std::fill(c.member_.begin(), c.member_.end(), 1);
  c.size_ = arc_count;
  return c;
}

bool Cutset::insert(ArcId a) {
  if (a >= member_.size()) throw InputError("cutset arc id out of range");
  if (member_[a]) return false;
  member_[a] = 1;
  ++size_;
  return true;
}

void Cutset::merge(const Cutset& other) {
  for (ArcId a : other.ids()) insert(a);
}

std::vector<ArcId> Cutset::ids() const {
  std::vector<ArcId> out;
  out.reserve(size_);
  for (ArcId a = 0; a < member_.size(); ++a) {
    if (member_[a]) out.push_back(a);
  }
  return out;
}

}  // namespace quasipart
