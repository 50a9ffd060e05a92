#include "quasipart/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "quasipart/errors.hpp"
#include "quasipart/paths.hpp"

namespace quasipart {

EmbeddingBuilder::EmbeddingBuilder(std::size_t vertex_count) : rotation_(vertex_count) {}

EmbeddingBuilder::EmbeddingBuilder(const PlanarDigraph& g)
    : edges_(g.edges().begin(), g.edges().end()),
      arcs_(g.arcs().begin(), g.arcs().end()),
      rotation_(g.vertex_count()) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    rotation_[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  }
}

VertexId EmbeddingBuilder::add_vertex() {
  rotation_.emplace_back();
  return static_cast<VertexId>(rotation_.size() - 1);
}

EdgeId EmbeddingBuilder::insert_edge(VertexId u, EdgeId after_u, VertexId v, EdgeId after_v,
                                     bool is_virtual) {
  if (u >= rotation_.size() || v >= rotation_.size()) {
    throw InputError("edge endpoint is not a vertex");
  }
  const auto e = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, is_virtual});
  auto place = [&](VertexId w, EdgeId after) {
    auto& rot = rotation_[w];
    if (after == kNoEdge) {
      rot.push_back(e);
      return;
    }
    auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end()) throw InputError("corner edge is not incident to the vertex");
    rot.insert(it + 1, e);
  };
  place(u, after_u);
  place(v, after_v);
  return e;
}

ArcId EmbeddingBuilder::add_arc(VertexId tail, VertexId head, double length, EdgeId edge) {
  arcs_.push_back(Arc{tail, head, length, edge});
  return static_cast<ArcId>(arcs_.size() - 1);
}

PlanarDigraph EmbeddingBuilder::build() const {
  return PlanarDigraph(rotation_.size(), edges_, arcs_, rotation_);
}

PlanarDigraph merge_parallel_edges(const PlanarDigraph& g) {
  std::map<std::pair<VertexId, VertexId>, EdgeId> representative;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto key = std::minmax(ed.u, ed.v);
    auto [it, inserted] = representative.emplace(key, e);
    if (!inserted && g.edge(it->second).is_virtual && !ed.is_virtual) it->second = e;
  }
  std::vector<EdgeId> renumber(g.edge_count(), kNoEdge);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (representative.at(std::minmax(ed.u, ed.v)) == e) {
      renumber[e] = static_cast<EdgeId>(edges.size());
      edges.push_back(ed);
    }
  }
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (Arc& a : arcs) {
    const Edge& ed = g.edge(a.edge);
    a.edge = renumber[representative.at(std::minmax(ed.u, ed.v))];
  }
  std::vector<std::vector<EdgeId>> rotation(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId e : g.rotation(v)) {
      if (renumber[e] != kNoEdge) rotation[v].push_back(renumber[e]);
    }
  }
  return PlanarDigraph(g.vertex_count(), std::move(edges), std::move(arcs), std::move(rotation));
}

PlanarDigraph triangulate(const PlanarDigraph& g) {
  if (g.vertex_count() < 3) return g;
  if (weak_components(g).size() != 1) {
    throw StructureError("triangulate needs a connected underlying graph");
  }
  if (g.has_parallel_edges()) {
    throw StructureError("triangulate needs an underlying graph without parallel edges");
  }

  EmbeddingBuilder builder(g);
  std::set<std::pair<VertexId, VertexId>> adjacent;
  for (const Edge& e : g.edges()) adjacent.insert(std::minmax(e.u, e.v));

  struct Step {
    VertexId from;
    EdgeId edge;
  };
  for (const auto& face : trace_faces(g)) {
    std::vector<Step> walk;
    for (const Dart& d : face) walk.push_back({g.dart_tail(d), d.edge});

    while (walk.size() > 3) {
      const std::size_t k = walk.size();
      auto vertex_at = [&](std::size_t i) { return walk[i % k].from; };
      std::size_t chosen = k;
      // Prefer chords that keep the graph simple.
      for (std::size_t i = 0; i < k && chosen == k; ++i) {
        const VertexId a = vertex_at(i), b = vertex_at(i + 2);
        if (a != b && !adjacent.contains(std::minmax(a, b))) chosen = i;
      }
      for (std::size_t i = 0; i < k && chosen == k; ++i) {
        if (vertex_at(i) != vertex_at(i + 2)) chosen = i;
      }
      if (chosen == k) throw InternalError("face cannot be split without a self-loop");

      std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(chosen), walk.end());
      // Chord from the corner (walk.back().edge, walk[0].edge) at walk[0].from
      // to the corner (walk[1].edge, walk[2].edge) at walk[2].from.
      const VertexId a = walk[0].from, b = walk[2].from;
      const EdgeId chord = builder.insert_edge(a, walk.back().edge, b, walk[1].edge, true);
      adjacent.insert(std::minmax(a, b));
      walk[0] = Step{a, chord};
      walk.erase(walk.begin() + 1);
    }
  }
  return builder.build();
}

Minor delete_arcs(const PlanarDigraph& g, const Cutset& removed) {
  Minor minor;
  const std::size_t n = g.vertex_count();
  minor.vertex_origin.resize(n);
  std::iota(minor.vertex_origin.begin(), minor.vertex_origin.end(), VertexId{0});
  minor.local_of = minor.vertex_origin;
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (removed.contains(a)) continue;
    arcs.push_back(g.arc(a));
    minor.arc_origin.push_back(a);
  }
  std::vector<std::vector<EdgeId>> rotation(n);
  for (VertexId v = 0; v < n; ++v) rotation[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  minor.graph = PlanarDigraph(n, std::vector<Edge>(g.edges().begin(), g.edges().end()),
                              std::move(arcs), std::move(rotation));
  return minor;
}

Minor induced_subgraph(const PlanarDigraph& g, std::span<const VertexId> kept) {
  return contract_and_restrict(g, {}, kept);
}

Minor contract_and_restrict(const PlanarDigraph& g, std::span<const VertexId> contracted,
                            std::span<const VertexId> kept) {
  const std::size_t n = g.vertex_count();
  enum : char { kDeleted = 0, kKept = 1, kContracted = 2 };
  std::vector<char> status(n, kDeleted);
  for (VertexId v : kept) {
    if (!g.valid_vertex(v) || status[v] != kDeleted) throw InputError("bad kept vertex list");
    status[v] = kKept;
  }
  for (VertexId v : contracted) {
    if (!g.valid_vertex(v) || status[v] != kDeleted) throw InputError("bad contracted vertex list");
    status[v] = kContracted;
  }

  std::vector<std::vector<EdgeId>> rot(n);
  for (VertexId v = 0; v < n; ++v) rot[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  std::vector<VertexId> eu(g.edge_count()), ev(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    eu[e] = g.edge(e).u;
    ev[e] = g.edge(e).v;
  }
  std::vector<char> edge_gone(g.edge_count(), 0);

  VertexId super = kNoVertex;
  if (!contracted.empty()) {
    super = *std::min_element(contracted.begin(), contracted.end());
    // Spanning tree of the contracted set in BFS order.
    std::vector<std::pair<EdgeId, VertexId>> tree;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue{super};
    seen[super] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      for (EdgeId e : g.rotation(v)) {
        const VertexId w = g.other_end(e, v);
        if (status[w] != kContracted || seen[w]) continue;
        seen[w] = 1;
        queue.push_back(w);
        tree.emplace_back(e, w);
      }
    }
    if (queue.size() != contracted.size()) {
      throw StructureError("contracted vertex set is not connected");
    }
    for (const auto& [e, x] : tree) {
      // e now joins super and x: splice x's rotation into super's at e.
      auto& rs = rot[super];
      auto& rx = rot[x];
      const auto is = std::find(rs.begin(), rs.end(), e) - rs.begin();
      const auto ix = std::find(rx.begin(), rx.end(), e) - rx.begin();
      std::vector<EdgeId> merged(rs.begin(), rs.begin() + is);
      merged.insert(merged.end(), rx.begin() + ix + 1, rx.end());
      merged.insert(merged.end(), rx.begin(), rx.begin() + ix);
      merged.insert(merged.end(), rs.begin() + is + 1, rs.end());
      for (EdgeId f : rx) {
        if (f == e) continue;
        if (eu[f] == x) eu[f] = super;
        if (ev[f] == x) ev[f] = super;
      }
      rs = std::move(merged);
      rx.clear();
      edge_gone[e] = 1;
    }
  }

  Minor minor;
  minor.local_of.assign(n, kNoVertex);
  if (super != kNoVertex) {
    minor.super_vertex = 0;
    minor.vertex_origin.push_back(kNoVertex);
    for (VertexId v : contracted) minor.local_of[v] = 0;
  }
  std::vector<VertexId> kept_sorted(kept.begin(), kept.end());
  std::sort(kept_sorted.begin(), kept_sorted.end());
  for (VertexId v : kept_sorted) {
    minor.local_of[v] = static_cast<VertexId>(minor.vertex_origin.size());
    minor.vertex_origin.push_back(v);
  }

  std::vector<EdgeId> renumber(g.edge_count(), kNoEdge);
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (edge_gone[e]) continue;
    const VertexId a = minor.local_of[eu[e]], b = minor.local_of[ev[e]];
    if (a == kNoVertex || b == kNoVertex || a == b) continue;
    renumber[e] = static_cast<EdgeId>(edges.size());
    edges.push_back(Edge{a, b, g.edge(e).is_virtual});
  }
  std::vector<std::vector<EdgeId>> rotation(minor.vertex_origin.size());
  for (VertexId local = 0; local < rotation.size(); ++local) {
    const VertexId host = local == minor.super_vertex ? super : minor.vertex_origin[local];
    for (EdgeId e : rot[host]) {
      if (renumber[e] != kNoEdge) rotation[local].push_back(renumber[e]);
    }
  }
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    if (renumber[arc.edge] == kNoEdge) continue;
    arcs.push_back(Arc{minor.local_of[arc.tail], minor.local_of[arc.head], arc.length,
                       renumber[arc.edge]});
    minor.arc_origin.push_back(a);
  }
  const std::size_t local_count = rotation.size();
  minor.graph = PlanarDigraph(local_count, std::move(edges), std::move(arcs), std::move(rotation));
  return minor;
}

}  // namespace quasipart
