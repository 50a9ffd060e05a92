#include "quasipart/shock.hpp"

#include <cmath>
#include <deque>
#include <memory>
#include <string>

#include "quasipart/errors.hpp"
#include "quasipart/paths.hpp"

namespace quasipart {

TruncExp::TruncExp(double scale, std::size_t population)
    : scale_(scale), population_(population) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ParameterError("radius scale must be positive and finite");
  }
  if (population < 2) throw ParameterError("population must be at least 2");
  const double n = static_cast<double>(population);
  upper_ = scale * std::log(n);
  norm_ = n / (n - 1.0);
}

double TruncExp::sample(Rng& rng) const {
  const double n = static_cast<double>(population_);
  const double u = rng.uniform();
  double x = -scale_ * std::log1p(-u * (1.0 - 1.0 / n));
  if (x >= upper_) x = std::nextafter(upper_, 0.0);
  return x < 0.0 ? 0.0 : x;
}

double TruncExp::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= upper_) return 1.0;
  return norm_ * -std::expm1(-x / scale_);
}

double TruncExp::pdf(double x) const {
  if (x < 0.0 || x >= upper_) return 0.0;
  return norm_ * std::exp(-x / scale_) / scale_;
}

ShockResult sample_shock(const PlanarDigraph& h, double delta, const ShockStrategy& strategy,
                         Rng& rng, Orientation o) {
  const TruncExp dist(delta, h.vertex_count());
  const std::size_t n = h.vertex_count();
  ShockResult result;
  result.cutset = Cutset(h.arc_count());
  result.cluster_of.assign(n, ShockResult::kNoCluster);
  std::vector<char> marked(n, 0);
  std::size_t marked_count = 0;

  while (marked_count < n) {
    const VertexId center =
        strategy(ShockState{marked, result.centers, result.radii});
    if (center == kNoVertex) break;
    if (center >= n) throw ContractError("strategy returned an invalid vertex");
    if (marked[center]) {
      throw ContractError("strategy returned marked vertex " + std::to_string(center));
    }
    const double radius = dist.sample(rng);
    SearchOptions options;
    options.orientation = o;
    options.radius = radius;
    const ShortestPathTree tree = shortest_path_tree(h, center, options);

    const std::size_t index = result.clusters.size();
    std::vector<VertexId> cluster;
    for (VertexId v = 0; v < n; ++v) {
      if (tree.reached(v) && !marked[v]) {
        marked[v] = 1;
        result.cluster_of[v] = index;
        cluster.push_back(v);
      }
    }
    marked_count += cluster.size();
    for (VertexId x : cluster) {
      for (ArcId a : h.arcs_from(x, o)) {
        if (!marked[h.arc_target(a, o)]) result.cutset.insert(a);
      }
    }
    result.clusters.push_back(std::move(cluster));
    result.centers.push_back(center);
    result.radii.push_back(radius);
  }
  return result;
}

ShockStrategy order_strategy(std::vector<VertexId> order) {
  auto shared = std::make_shared<const std::vector<VertexId>>(std::move(order));
  return [shared](const ShockState& state) {
    for (VertexId v : *shared) {
      if (!state.marked[v]) return v;
    }
    return kNoVertex;
  };
}

ShockStrategy id_order_strategy(std::size_t vertex_count) {
  return [vertex_count](const ShockState& state) {
    for (VertexId v = 0; v < vertex_count; ++v) {
      if (!state.marked[v]) return v;
    }
    return kNoVertex;
  };
}

ShockStrategy nearest_unmarked_strategy(const PlanarDigraph& h) {
  const PlanarDigraph* graph = &h;
  return [graph](const ShockState& state) {
    const std::size_t n = graph->vertex_count();
    if (state.centers.empty()) {
      for (VertexId v = 0; v < n; ++v) {
        if (!state.marked[v]) return v;
      }
      return kNoVertex;
    }
    // Breadth-first over the underlying graph from the last center.
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue{state.centers.back()};
    seen[state.centers.back()] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      if (!state.marked[v]) return v;
      for (EdgeId e : graph->rotation(v)) {
        const VertexId w = graph->other_end(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      if (!state.marked[v]) return v;
    }
    return kNoVertex;
  };
}

}  // namespace quasipart
