#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "quasipart/graph.hpp"
#include "quasipart/random.hpp"

namespace quasipart {

// Exponential distribution with mean `scale`, truncated to [0, scale * ln n)
// and renormalized.
class TruncExp {
 public:
  TruncExp(double scale, std::size_t population);

  double scale() const { return scale_; }
  std::size_t population() const { return population_; }
  // Exclusive upper end of the support.
  double upper() const { return upper_; }

  double sample(Rng& rng) const;
  double cdf(double x) const;
  double pdf(double x) const;

 private:
  double scale_;
  std::size_t population_;
  double upper_;
  double norm_;
};

// What a strategy gets to see before choosing the next center.
struct ShockState {
  std::span<const char> marked;
  std::span<const VertexId> centers;
  std::span<const double> radii;
};

// Returns the next center (must be unmarked) or kNoVertex to stop.
using ShockStrategy = std::function<VertexId(const ShockState&)>;

struct ShockResult {
  std::vector<std::vector<VertexId>> clusters;
  std::vector<VertexId> centers;
  std::vector<double> radii;
  Cutset cutset;
  // Cluster index of every vertex, or kNoCluster when never marked.
  std::vector<std::size_t> cluster_of;

  static constexpr std::size_t kNoCluster = static_cast<std::size_t>(-1);
};

// Runs a shock with radius scale `delta`. With Orientation::kReverse balls
// are in-balls and the cut arcs are those entering a cluster from outside
// the clusters formed so far.
ShockResult sample_shock(const PlanarDigraph& h, double delta, const ShockStrategy& strategy,
                         Rng& rng, Orientation o = Orientation::kForward);

// First unmarked vertex of `order`; stops once all of them are marked.
ShockStrategy order_strategy(std::vector<VertexId> order);
// Ascending ids over all vertices.
ShockStrategy id_order_strategy(std::size_t vertex_count);
// Picks the unmarked vertex nearest (hop count in the underlying graph) to
// the previous center, so the choice depends on earlier radii.
ShockStrategy nearest_unmarked_strategy(const PlanarDigraph& h);

}  // namespace quasipart
