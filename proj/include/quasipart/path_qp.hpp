#pragma once

#include <cstddef>
#include <vector>

#include "quasipart/graph.hpp"
#include "quasipart/random.hpp"
#include "quasipart/shock.hpp"

namespace quasipart {

struct PathQPResult {
  DirectedPath path;
  // First shock: out-balls grown from the path, centers taken walking the
  // path backwards from its last vertex.
  ShockResult away;
  // Second shock: in-balls, centers taken walking the path forwards.
  ShockResult toward;
  // Union of both shock cutsets.
  Cutset cutset;
  // Per position on the path, the position of its portal.
  std::vector<std::size_t> away_portal;
  std::vector<std::size_t> toward_portal;
};

enum class PortalSide { kAway, kToward };

// Quasipartitions the neighbourhood of the shortest path q with ball scale
// delta. The length of q is independent of delta.
PathQPResult path_quasipartition(const PlanarDigraph& h, const DirectedPath& q, double delta,
                                 Rng& rng, bool check_shortest = true);

// Portal of path vertex x. Throws InputError when x is not on the path.
VertexId portal_of(const PathQPResult& result, VertexId x, PortalSide side);

}  // namespace quasipart
