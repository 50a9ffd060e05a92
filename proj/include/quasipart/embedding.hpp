#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quasipart/graph.hpp"

namespace quasipart {

// Mutable rotation system used to assemble PlanarDigraph values. Edges are
// inserted into explicit corners so planarity is preserved by construction;
// build() re-validates everything.
class EmbeddingBuilder {
 public:
  explicit EmbeddingBuilder(std::size_t vertex_count = 0);
  explicit EmbeddingBuilder(const PlanarDigraph& g);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexId add_vertex();

  // Inserts a new edge u-v placed right after `after_u` in the rotation of u
  // and right after `after_v` in the rotation of v. kNoEdge appends, which is
  // only meaningful for a vertex whose rotation is empty or when the caller
  // lays out rotations in order.
  EdgeId insert_edge(VertexId u, EdgeId after_u, VertexId v, EdgeId after_v,
                     bool is_virtual = false);
  // Appends to both rotations.
  EdgeId add_edge(VertexId u, VertexId v, bool is_virtual = false) {
    return insert_edge(u, kNoEdge, v, kNoEdge, is_virtual);
  }
  ArcId add_arc(VertexId tail, VertexId head, double length, EdgeId edge);

  void set_rotation(VertexId v, std::vector<EdgeId> order) { rotation_[v] = std::move(order); }
  std::span<const EdgeId> rotation(VertexId v) const { return rotation_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  PlanarDigraph build() const;

 private:
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<EdgeId>> rotation_;
};

// Keeps one edge per unordered vertex pair (a real one when available) and
// moves the arcs of dropped parallels onto it. Arc ids are unchanged; edge
// ids are renumbered.
PlanarDigraph merge_parallel_edges(const PlanarDigraph& g);

// Adds virtual edges until every face of the embedding is bounded by exactly
// three edges. Requires a connected underlying graph without parallel edges;
// graphs with fewer than three vertices are returned unchanged. Arcs, arc
// ids and the relative order of original edges in every rotation are kept.
PlanarDigraph triangulate(const PlanarDigraph& g);

// A graph derived from a host by deleting and contracting vertices, with the
// maps needed to translate vertices and arcs back.
struct Minor {
  PlanarDigraph graph;
  // Host vertex of each local vertex; kNoVertex for a contracted super-vertex.
  std::vector<VertexId> vertex_origin;
  // Host arc of each local arc.
  std::vector<ArcId> arc_origin;
  // Local vertex of each host vertex (kNoVertex when deleted); contracted
  // host vertices map to the super-vertex.
  std::vector<VertexId> local_of;
  // Local id of the super-vertex, kNoVertex if nothing was contracted.
  VertexId super_vertex = kNoVertex;
};

// Same vertices, edges and embedding with the `removed` arcs dropped.
Minor delete_arcs(const PlanarDigraph& g, const Cutset& removed);

// Subgraph induced by `kept` (local ids follow ascending host ids).
Minor induced_subgraph(const PlanarDigraph& g, std::span<const VertexId> kept);

// Contracts `contracted` (must induce a connected subgraph of the underlying
// graph) into a single super-vertex with local id 0, keeps `kept`, deletes
// everything else. Parallel edges are kept, self-loops dropped; the rotation
// of the super-vertex is obtained by splicing rotations along a spanning tree.
Minor contract_and_restrict(const PlanarDigraph& g, std::span<const VertexId> contracted,
                            std::span<const VertexId> kept);

}  // namespace quasipart
