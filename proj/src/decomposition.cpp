#include "quasipart/decomposition.hpp"

#include <cmath>
#include <limits>

#include "quasipart/embedding.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/parallel.hpp"
#include "quasipart/path_qp.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/separator.hpp"

namespace quasipart {
namespace {

constexpr std::size_t kNotCut = std::numeric_limits<std::size_t>::max();

// Pieces of p of length at most delta; a piece is a single vertex when the
// next arc alone is longer than delta.
std::vector<DirectedPath> segment(const PlanarDigraph& h, const DirectedPath& p, double delta) {
  std::vector<DirectedPath> out;
  std::size_t start = 0;
  const std::size_t k = p.vertices.size();
  while (start < k) {
    std::size_t end = start + 1;
    double length = 0.0;
    while (end < k && length + h.arc(p.arcs[end - 1]).length <= delta) {
      length += h.arc(p.arcs[end - 1]).length;
      ++end;
    }
    out.push_back(make_path(h, p.vertices[start],
                            std::span<const ArcId>(p.arcs).subspan(start, end - 1 - start)));
    start = end;
  }
  return out;
}

}  // namespace

double LayerQPConfig::ball_scale(std::size_t n) const {
  return target / (c1 * (1.0 + std::log(static_cast<double>(std::max<std::size_t>(n, 1)))));
}

std::size_t LayerQPConfig::depth_limit(std::size_t n) const {
  if (depth_guard != 0) return depth_guard;
  if (n <= 1) return 2;
  return static_cast<std::size_t>(
             std::ceil(std::log(static_cast<double>(n)) / std::log(1.5))) + 2;
}

LayerQPResult layer_quasipartition(const LayerGraph& layer, const LayerQPConfig& config,
                                   Rng& rng) {
  if (!(config.target > 0.0) || !(config.c1 > 0.0) || config.base_size < 1) {
    throw ParameterError("invalid layer quasipartition configuration");
  }
  const PlanarDigraph& h = layer.graph();
  const std::size_t n = h.vertex_count();
  const double delta = config.ball_scale(n);
  const std::size_t limit = config.depth_limit(n);
  const Orientation orientation = layer.reversed ? Orientation::kReverse : Orientation::kForward;

  LayerQPResult result;
  result.cutset = Cutset(h.arc_count());
  result.cut_depth.assign(h.arc_count(), kNotCut);
  const auto cut = [&](ArcId a, std::size_t depth) {
    if (result.cutset.insert(a)) result.cut_depth[a] = depth;
  };

  RecursionNode top;
  top.vertices.resize(n);
  for (VertexId v = 0; v < n; ++v) top.vertices[v] = v;
  result.trace.nodes.push_back(std::move(top));

  // Nodes are processed in creation order, so children follow their parent.
  for (std::size_t index = 0; index < result.trace.nodes.size(); ++index) {
    const std::size_t depth = result.trace.nodes[index].depth;
    if (depth > limit) throw InternalError("recursion depth guard exceeded");
    result.trace.max_depth = std::max(result.trace.max_depth, depth);
    const std::vector<VertexId> vertices = result.trace.nodes[index].vertices;
    result.trace.nodes[index].ball_scale = delta;
    const Minor sub = induced_subgraph(h, vertices);
    const PlanarDigraph& hc = sub.graph;

    if (vertices.size() <= config.base_size) {
      result.trace.nodes[index].base_case = true;
      for (ArcId a = 0; a < hc.arc_count(); ++a) {
        if (hc.arc(a).length >= delta) cut(sub.arc_origin[a], depth);
      }
      continue;
    }

    SeparatorPaths sep;
    if (index == 0) {
      sep = three_path_separator(layer);
    } else {
      sep = find_separator(hc, kNoVertex, orientation);
    }
    Rng node_rng = rng.split(index);
    std::uint64_t key = 0;
    std::vector<std::vector<ArcId>> path_cuts;
    for (const DirectedPath& p : sep.paths) {
      std::vector<ArcId> cuts;
      for (const DirectedPath& piece : segment(hc, p, delta)) {
        Rng piece_rng = node_rng.split(key++);
        const PathQPResult qp = path_quasipartition(hc, piece, delta, piece_rng, false);
        for (ArcId a : qp.cutset.ids()) {
          cuts.push_back(sub.arc_origin[a]);
          cut(sub.arc_origin[a], depth);
        }
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      path_cuts.push_back(std::move(cuts));
    }

    std::vector<char> allowed(hc.vertex_count(), 1);
    for (VertexId v : sep.vertices) allowed[v] = 0;
    std::vector<std::size_t> children;
    for (const auto& comp : weak_components(hc, allowed)) {
      RecursionNode child;
      child.depth = depth + 1;
      for (VertexId v : comp) child.vertices.push_back(sub.vertex_origin[v]);
      children.push_back(result.trace.nodes.size());
      result.trace.nodes.push_back(std::move(child));
    }
    RecursionNode& node = result.trace.nodes[index];
    for (const DirectedPath& p : sep.paths) {
      DirectedPath mapped = p;
      for (VertexId& v : mapped.vertices) v = sub.vertex_origin[v];
      for (ArcId& a : mapped.arcs) a = sub.arc_origin[a];
      node.separator_paths.push_back(std::move(mapped));
    }
    node.path_cuts = std::move(path_cuts);
    node.children = std::move(children);
  }
  return result;
}

std::string Provenance::label() const {
  switch (source) {
    case CutSource::kPrecut:
      return "precut";
    case CutSource::kWave:
      return "wave";
    case CutSource::kLayer:
      return "layer:" + std::to_string(layer) + ":" + std::to_string(depth);
  }
  return "?";
}

PartitionSample planar_quasipartition(const PlanarDigraph& g, double delta, Rng& rng,
                                      const PartitionConfig& config) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ParameterError("delta must be positive");
  PartitionSample sample;
  sample.cutset = Cutset(g.arc_count());
  sample.provenance.assign(g.arc_count(), Provenance{});
  const auto cut = [&](ArcId a, Provenance p) {
    if (sample.cutset.insert(a)) sample.provenance[a] = p;
  };

  Cutset long_arcs(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (g.arc(a).length > delta) {
      long_arcs.insert(a);
      cut(a, Provenance{CutSource::kPrecut, 0, 0});
    }
  }
  const Minor base = delete_arcs(g, long_arcs);
  const PlanarDigraph& gb = base.graph;

  Rng wave_rng = rng.split("wave");
  sample.waves = sample_waves(gb, delta, wave_rng);
  for (const auto& wave : sample.waves) {
    for (ArcId a : wave.cut.ids()) cut(base.arc_origin[a], Provenance{CutSource::kWave, 0, 0});
  }

  LayerQPConfig lc;
  lc.layer_scale = 3.0 * delta;
  lc.target = delta / 3.0;
  lc.c1 = config.c1;
  lc.base_size = config.base_size;
  lc.depth_guard = config.depth_guard;
  Rng layer_rng = rng.split("layers");
  for (std::size_t w = 0; w < sample.waves.size(); ++w) {
    const auto& wave = sample.waves[w];
    Rng wave_layers = layer_rng.split(w);
    for (std::size_t i = 0; i < wave.layer_count(); ++i) {
      const LayerGraph layer = extract_layer(gb, wave, i);
      ++sample.layer_count;
      Rng one = wave_layers.split(i);
      const LayerQPResult qp = layer_quasipartition(layer, lc, one);
      sample.max_depth = std::max(sample.max_depth, qp.trace.max_depth);
      for (ArcId a : qp.cutset.ids()) {
        cut(base.arc_origin[layer.minor.arc_origin[a]],
            Provenance{CutSource::kLayer, i, qp.cut_depth[a]});
      }
    }
  }
  // Report wave cuts with the arc ids of g.
  for (auto& wave : sample.waves) {
    Cutset mapped(g.arc_count());
    for (ArcId a : wave.cut.ids()) mapped.insert(base.arc_origin[a]);
    wave.cut = std::move(mapped);
  }
  return sample;
}

PartitionSample sample_at(const PlanarDigraph& g, double delta, std::uint64_t seed,
                          std::size_t k, const PartitionConfig& config) {
  Rng rng = Rng(seed).split(static_cast<std::uint64_t>(k));
  return planar_quasipartition(g, delta, rng, config);
}

std::vector<PartitionSample> sample_many(const PlanarDigraph& g, double delta,
                                         std::size_t count, std::uint64_t seed,
                                         const PartitionConfig& config, unsigned jobs) {
  std::vector<PartitionSample> samples(count);
  parallel_for(count, jobs, [&](std::size_t k) { samples[k] = sample_at(g, delta, seed, k, config); });
  return samples;
}

}  // namespace quasipart
