#include "quasipart/path_qp.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "quasipart/errors.hpp"
#include "quasipart/paths.hpp"

namespace quasipart {
namespace {

std::vector<std::size_t> assign_portals(const DirectedPath& q, const ShockResult& shock,
                                        bool backwards) {
  const std::size_t len = q.vertices.size();
  std::vector<std::size_t> position(shock.centers.size());
  for (std::size_t i = 0; i < shock.centers.size(); ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      if (q.vertices[j] == shock.centers[i]) {
        position[i] = j;
        break;
      }
    }
  }
  std::vector<std::size_t> portal(len);
  if (backwards) {
    // Centers sit at decreasing positions; a center owns everything from
    // itself down to just above the next center.
    for (std::size_t i = 0; i < position.size(); ++i) {
      const std::size_t hi = position[i];
      const std::size_t lo = i + 1 < position.size() ? position[i + 1] + 1 : 0;
      for (std::size_t j = lo; j <= hi; ++j) portal[j] = hi;
    }
  } else {
    for (std::size_t i = 0; i < position.size(); ++i) {
      const std::size_t lo = position[i];
      const std::size_t hi = i + 1 < position.size() ? position[i + 1] : len;
      for (std::size_t j = lo; j < hi; ++j) portal[j] = lo;
    }
  }
  return portal;
}

ShockResult trivial_shock(VertexId v, std::size_t arc_count) {
  ShockResult r;
  r.clusters = {{v}};
  r.centers = {v};
  r.radii = {0.0};
  r.cutset = Cutset(arc_count);
  r.cluster_of = {0};
  return r;
}

}  // namespace

PathQPResult path_quasipartition(const PlanarDigraph& h, const DirectedPath& q, double delta,
                                 Rng& rng, bool check_shortest) {
  if (q.empty()) throw PreconditionError("path is empty");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ParameterError("ball scale must be positive and finite");
  }
  for (VertexId v : q.vertices) {
    if (!h.valid_vertex(v)) throw PreconditionError("path vertex out of range");
  }
  if (check_shortest && !is_shortest_path(h, q)) {
    throw PreconditionError("path is not a shortest path");
  }

  PathQPResult result;
  result.path = q;
  if (h.vertex_count() < 2) {
    result.away = trivial_shock(q.head(), h.arc_count());
    result.toward = trivial_shock(q.head(), h.arc_count());
    result.cutset = Cutset(h.arc_count());
  } else {
    std::vector<VertexId> backwards(q.vertices.rbegin(), q.vertices.rend());
    Rng away_rng = rng.split("away");
    Rng toward_rng = rng.split("toward");
    result.away = sample_shock(h, delta, order_strategy(std::move(backwards)), away_rng,
                               Orientation::kForward);
    result.toward =
        sample_shock(h, delta, order_strategy(q.vertices), toward_rng, Orientation::kReverse);
    result.cutset = result.away.cutset;
    result.cutset.merge(result.toward.cutset);
  }
  result.away_portal = assign_portals(q, result.away, true);
  result.toward_portal = assign_portals(q, result.toward, false);
  return result;
}

VertexId portal_of(const PathQPResult& result, VertexId x, PortalSide side) {
  const auto& vs = result.path.vertices;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j] == x) {
      const auto& portal = side == PortalSide::kAway ? result.away_portal : result.toward_portal;
      return vs[portal[j]];
    }
  }
  throw InputError("vertex " + std::to_string(x) + " is not on the path");
}

}  // namespace quasipart
