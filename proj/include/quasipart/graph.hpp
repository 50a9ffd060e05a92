#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace quasipart {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using ArcId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();
inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

// Distance to an unreachable vertex. Lengths are finite, so this value never
// arises from a sum of lengths.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Traversal direction. kReverse walks every arc from head to tail, which is
// the same as working on reverse(G) without materializing it.
enum class Orientation { kForward, kReverse };

inline Orientation flip(Orientation o) {
  return o == Orientation::kForward ? Orientation::kReverse : Orientation::kForward;
}

// Undirected embedding slot. Virtual edges are added by triangulation and
// never carry arcs.
struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  bool is_virtual = false;
};

struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  double length = 0.0;
  EdgeId edge = kNoEdge;
};

// Half-edge of the embedding: `edge` traversed from u to v when forward.
struct Dart {
  EdgeId edge = kNoEdge;
  bool forward = true;

  friend bool operator==(const Dart&, const Dart&) = default;
};

// Planar digraph with non-negative arc lengths and a rotation system for the
// underlying undirected multigraph. Immutable once constructed; the
// constructor validates every invariant, including the Euler face count of
// the embedding on each connected component.
class PlanarDigraph {
 public:
  PlanarDigraph() = default;
  PlanarDigraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Arc> arcs,
                std::vector<std::vector<EdgeId>> rotation);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Arc> arcs() const { return arcs_; }

  std::span<const EdgeId> rotation(VertexId v) const { return rotation_[v]; }
  std::span<const ArcId> out_arcs(VertexId v) const { return out_[v]; }
  std::span<const ArcId> in_arcs(VertexId v) const { return in_[v]; }
  std::span<const ArcId> edge_arcs(EdgeId e) const { return edge_arcs_[e]; }

  // Arcs leaving v when walking in orientation o.
  std::span<const ArcId> arcs_from(VertexId v, Orientation o) const {
    return o == Orientation::kForward ? out_arcs(v) : in_arcs(v);
  }
  VertexId arc_source(ArcId a, Orientation o) const {
    return o == Orientation::kForward ? arcs_[a].tail : arcs_[a].head;
  }
  VertexId arc_target(ArcId a, Orientation o) const {
    return o == Orientation::kForward ? arcs_[a].head : arcs_[a].tail;
  }

  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  // Successor of e in the cyclic rotation at v.
  EdgeId rotation_next(VertexId v, EdgeId e) const;

  VertexId dart_tail(Dart d) const { return d.forward ? edges_[d.edge].u : edges_[d.edge].v; }
  VertexId dart_head(Dart d) const { return d.forward ? edges_[d.edge].v : edges_[d.edge].u; }
  // Next dart along the face to the left of d.
  Dart face_next(Dart d) const;

  bool has_virtual_edges() const;
  bool has_parallel_edges() const;

  bool valid_vertex(VertexId v) const { return v < vertex_count(); }

  friend bool operator==(const PlanarDigraph& a, const PlanarDigraph& b);

 private:
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<EdgeId>> rotation_;
  // Position of each edge in the rotation of its u and v endpoints.
  std::vector<std::uint32_t> pos_u_, pos_v_;
  std::vector<std::vector<ArcId>> out_, in_, edge_arcs_;
};

// Faces of the embedding as dart cycles. Isolated vertices contribute no dart
// cycle.
std::vector<std::vector<Dart>> trace_faces(const PlanarDigraph& g);

// Euler check v - e + f == 2 on every connected component; isolated vertices
// count as one face.
bool satisfies_euler(const PlanarDigraph& g);

// Same arcs with tail and head swapped, identical arc ids and embedding.
PlanarDigraph reverse(const PlanarDigraph& g);

// Directed path given by its vertex sequence and the arcs between them.
struct DirectedPath {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arcs;
  double length = 0.0;

  bool empty() const { return vertices.empty(); }
  VertexId head() const { return vertices.front(); }
  VertexId tail() const { return vertices.back(); }
};

// Builds a path from a start vertex and the arcs to follow, traversed in
// orientation o. Throws InputError if consecutive arcs do not chain.
DirectedPath make_path(const PlanarDigraph& g, VertexId start, std::span<const ArcId> arcs,
                       Orientation o = Orientation::kForward);

// Set of arc ids of a host graph.
class Cutset {
 public:
  Cutset() = default;
  explicit Cutset(std::size_t arc_count) : member_(arc_count, 0) {}

  static Cutset all(std::size_t arc_count);

  // Returns true when the arc was not yet present.
  bool insert(ArcId a);
  bool contains(ArcId a) const { return a < member_.size() && member_[a] != 0; }
  void merge(const Cutset& other);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t arc_capacity() const { return member_.size(); }
  std::vector<ArcId> ids() const;

  friend bool operator==(const Cutset& a, const Cutset& b) {
    return a.size_ == b.size_ && a.ids() == b.ids();
  }

 private:
  std::vector<std::uint8_t> member_;
  std::size_t size_ = 0;
};

}  // namespace quasipart
