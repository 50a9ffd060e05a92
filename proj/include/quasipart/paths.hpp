#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quasipart/graph.hpp"

namespace quasipart {

// Restrictions applied to a search. `removed` arcs are skipped; when
// `allowed` is non-empty only vertices with a nonzero entry are visited.
struct SearchOptions {
  Orientation orientation = Orientation::kForward;
  double radius = kInfinity;
  const Cutset* removed = nullptr;
  std::span<const char> allowed = {};
};

// Shortest-path forest from a set of sources. parent[v] is the arc used to
// reach v (kNoArc for sources and unreached vertices).
struct ShortestPathTree {
  std::vector<double> dist;
  std::vector<ArcId> parent;

  bool reached(VertexId v) const { return dist[v] != kInfinity; }
};

// Dijkstra from all sources at distance 0. Vertices farther than the radius
// are left at kInfinity.
ShortestPathTree shortest_path_tree(const PlanarDigraph& g, std::span<const VertexId> sources,
                                    const SearchOptions& options = {});
ShortestPathTree shortest_path_tree(const PlanarDigraph& g, VertexId source,
                                    const SearchOptions& options = {});

// Exact d_G(u, v); kInfinity when v is unreachable from u.
double shortest_path_dist(const PlanarDigraph& g, VertexId u, VertexId v);

// {u : d(center, u) <= r}, ascending. With kReverse this is the in-ball.
std::vector<VertexId> quasiball(const PlanarDigraph& g, VertexId center, double r,
                                Orientation o = Orientation::kForward);

// Tree path from the root of its search to v, in search orientation.
DirectedPath tree_path(const PlanarDigraph& g, const ShortestPathTree& tree, VertexId v,
                       Orientation o = Orientation::kForward);

// One shortest path from u to v, or an empty path when unreachable.
DirectedPath shortest_path(const PlanarDigraph& g, VertexId u, VertexId v);

// True iff the path is simple and its length equals the exact distance
// between its endpoints in orientation o.
bool is_shortest_path(const PlanarDigraph& g, const DirectedPath& path,
                      Orientation o = Orientation::kForward);

// Vertices reachable from the sources (flags indexed by vertex).
std::vector<char> reachable(const PlanarDigraph& g, std::span<const VertexId> sources,
                            const SearchOptions& options = {});

// Connected components of the underlying undirected graph (real and virtual
// edges), restricted to allowed vertices when given. Component vertex lists
// are ascending; components are ordered by their smallest vertex.
std::vector<std::vector<VertexId>> weak_components(const PlanarDigraph& g,
                                                   std::span<const char> allowed = {});

// n x n exact distance matrix (row = source).
std::vector<std::vector<double>> all_pairs_distances(const PlanarDigraph& g);

// Result of a (t, scale)-layeredness check.
struct LayeredCheck {
  bool layered = false;
  // Witness spanning tree: parent arc of each vertex (kNoArc at the root).
  std::vector<ArcId> parent;
  // Number of shortest subpaths the root path of each vertex is split into.
  std::vector<int> pieces;
  // A vertex that cannot be covered, when not layered.
  VertexId offending = kNoVertex;
};

// Decides whether g has a rooted spanning out-tree whose root-to-leaf paths
// are concatenations of at most t shortest paths, each of length <= scale.
LayeredCheck check_layered(const PlanarDigraph& g, VertexId root, int t, double scale);

}  // namespace quasipart
