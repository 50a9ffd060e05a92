#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quasipart/graph.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/wave.hpp"

namespace quasipart {

// Rooted spanning tree of a graph's vertices whose tree edges live in a
// (possibly triangulated) supergraph. parent_arc is the arc of the original
// graph realizing the tree edge, or kNoArc for connector edges joining parts
// that the root cannot reach.
struct SpanningTree {
  VertexId root = kNoVertex;
  std::vector<VertexId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<ArcId> parent_arc;

  // Vertices from v up to the root, v first.
  std::vector<VertexId> root_path(VertexId v) const;
};

// Shortest-path out-tree of a layer from its root. Throws StructureError if
// the layer is not (1, scale)-layered.
ShortestPathTree layered_tree(const LayerGraph& layer);

// Shortest-path out-tree of h from root, expressed on the edges of tri (a
// triangulation of h with the same arc ids). Vertices the root cannot reach
// hang below connector edges of tri, each part being a shortest-path tree
// of the unreached vertices.
SpanningTree search_tree(const PlanarDigraph& h, const PlanarDigraph& tri, VertexId root);

// Weight on each side of the fundamental cycle of the non-tree edge e,
// ignoring vertices on the root paths of either endpoint of e.
struct CycleSides {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t max() const { return first > second ? first : second; }
};
CycleSides cycle_sides(const PlanarDigraph& tri, const SpanningTree& tree, EdgeId e,
                       std::span<const std::size_t> weights);

// Non-tree edge of the triangulation minimizing the heavier side of its
// fundamental cycle (smallest edge id on ties).
EdgeId fundamental_cycle_separator(const PlanarDigraph& tri, const SpanningTree& tree,
                                   std::span<const std::size_t> weights);

struct SeparatorPaths {
  // Shortest paths of the graph the separator was computed on.
  std::vector<DirectedPath> paths;
  // Orientation of that graph relative to the host it came from.
  Orientation orientation = Orientation::kForward;
  // Union of path vertices, ascending.
  std::vector<VertexId> vertices;
  VertexId root = kNoVertex;
  EdgeId cycle_edge = kNoEdge;
};

// Balanced separator made of the two root paths of a fundamental cycle,
// each split into shortest paths. With root == kNoVertex the root is the
// vertex reaching the most vertices, then with the smallest
// out-eccentricity. Requires h to be connected; every weak component left
// after removing the separator has at most ceil(2n/3) vertices, otherwise
// InternalError is thrown. The root weighs 0 when `weightless_root` is set.
SeparatorPaths find_separator(const PlanarDigraph& h, VertexId root,
                              Orientation orientation = Orientation::kForward,
                              bool weightless_root = false);

// find_separator on a layer rooted at its super-root, after checking that
// the layer is layered at its scale.
SeparatorPaths three_path_separator(const LayerGraph& layer);

// Largest weak component of h once `removed` vertices are deleted.
std::size_t max_component_after_removal(const PlanarDigraph& h,
                                        std::span<const VertexId> removed);

}  // namespace quasipart
