#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quasipart/graph.hpp"
#include "quasipart/random.hpp"
#include "quasipart/relation.hpp"
#include "quasipart/wave.hpp"

namespace quasipart {

struct LayerQPConfig {
  double layer_scale = 1.0;
  double target = 1.0;
  double c1 = 8.0;
  std::size_t base_size = 3;
  // 0 selects ceil(log_{3/2} n) + 2.
  std::size_t depth_guard = 0;

  // delta = target / (c1 * (1 + ln n)).
  double ball_scale(std::size_t n) const;
  std::size_t depth_limit(std::size_t n) const;
};

// One recursive call. Vertex ids are local to the layer graph.
struct RecursionNode {
  std::size_t depth = 0;
  std::vector<VertexId> vertices;
  std::vector<DirectedPath> separator_paths;
  // Arcs cut by the path quasipartitions run for each separator path.
  std::vector<std::vector<ArcId>> path_cuts;
  double ball_scale = 0.0;
  bool base_case = false;
  std::vector<std::size_t> children;
};

struct RecursionTrace {
  std::vector<RecursionNode> nodes;  // nodes[0] is the whole layer
  std::size_t max_depth = 0;
};

struct LayerQPResult {
  Cutset cutset;
  // Recursion depth at which each cut arc was first cut (layer arc ids).
  std::vector<std::size_t> cut_depth;
  RecursionTrace trace;
};

LayerQPResult layer_quasipartition(const LayerGraph& layer, const LayerQPConfig& config,
                                   Rng& rng);

struct PartitionConfig {
  double c1 = 8.0;
  std::size_t base_size = 3;
  std::size_t depth_guard = 0;
};

enum class CutSource { kPrecut, kWave, kLayer };

struct Provenance {
  CutSource source = CutSource::kPrecut;
  std::size_t layer = 0;
  std::size_t depth = 0;

  // precut | wave | layer:<i>:<depth>
  std::string label() const;
};

struct PartitionSample {
  Cutset cutset;
  // Indexed by arc id; meaningful for cut arcs only.
  std::vector<Provenance> provenance;
  // Waves over g minus the precut arcs; their cuts use the arc ids of g.
  std::vector<WaveDecomposition> waves;
  std::size_t layer_count = 0;
  std::size_t max_depth = 0;
};

// Cuts every arc longer than delta, samples one wave per weak component of
// what remains and quasipartitions each layer at target delta / 3.
PartitionSample planar_quasipartition(const PlanarDigraph& g, double delta, Rng& rng,
                                      const PartitionConfig& config = {});

// Sample k of a run seeded with `seed`.
PartitionSample sample_at(const PlanarDigraph& g, double delta, std::uint64_t seed,
                          std::size_t k, const PartitionConfig& config = {});

// Samples 0..count-1 of a run; identical for any number of jobs.
std::vector<PartitionSample> sample_many(const PlanarDigraph& g, double delta,
                                         std::size_t count, std::uint64_t seed,
                                         const PartitionConfig& config = {}, unsigned jobs = 1);

}  // namespace quasipart
