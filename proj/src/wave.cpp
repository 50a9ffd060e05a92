#include "quasipart/wave.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include <nlohmann/json.hpp>
#include "quasipart/errors.hpp"
#include "quasipart/paths.hpp"

namespace quasipart {
namespace {

// Weak components over arcs only; edges without arcs do not connect.
std::vector<std::vector<VertexId>> arc_components(const PlanarDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Orientation o : {Orientation::kForward, Orientation::kReverse}) {
        for (ArcId a : g.arcs_from(v, o)) {
          const VertexId w = g.arc_target(a, o);
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

WaveDecomposition sample_wave(const PlanarDigraph& g, VertexId source, double delta, Rng& rng) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ParameterError("wave scale must be positive");
  if (!g.valid_vertex(source)) throw InputError("wave source out of range");
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (g.arc(a).length > delta) {
      throw PreconditionError("arc " + std::to_string(a) + " is longer than the wave scale");
    }
  }
  const std::size_t n = g.vertex_count();
  WaveDecomposition wave;
  wave.source = source;
  wave.scale = delta;
  wave.layer_of.assign(n, kNoLayer);
  wave.cut = Cutset(g.arc_count());

  // Limit the wave to the weak component of the source.
  std::vector<char> component(n, 0);
  std::size_t remaining = 0;
  for (const auto& comp : arc_components(g)) {
    if (std::binary_search(comp.begin(), comp.end(), source)) {
      for (VertexId v : comp) component[v] = 1;
      remaining = comp.size();
    }
  }

  std::vector<VertexId> prefix{source};
  for (std::size_t i = 0; remaining > 0; ++i) {
    const double tau = delta * rng.uniform();
    SearchOptions options;
    options.radius = 2.0 * delta + tau;
    options.orientation = WaveDecomposition::inward(i) ? Orientation::kReverse
                                                        : Orientation::kForward;
    const ShortestPathTree tree = shortest_path_tree(g, prefix, options);
    std::vector<VertexId> layer;
    for (VertexId u = 0; u < n; ++u) {
      if (component[u] && tree.reached(u) && wave.layer_of[u] == kNoLayer) layer.push_back(u);
    }
    for (VertexId u : layer) wave.layer_of[u] = i;
    if (i > 0) {
      // Odd layers cut arcs from the previous layer into them, even layers
      // cut arcs from them back into the previous layer.
      for (VertexId u : layer) {
        const Orientation o = WaveDecomposition::inward(i) ? Orientation::kReverse
                                                            : Orientation::kForward;
        for (ArcId a : g.arcs_from(u, o)) {
          if (wave.layer_of[g.arc_target(a, o)] == i - 1) wave.cut.insert(a);
        }
      }
    }
    remaining -= layer.size();
    if (i == 0) prefix.clear();
    prefix.insert(prefix.end(), layer.begin(), layer.end());
    wave.offsets.push_back(tau);
    wave.layers.push_back(std::move(layer));
  }
  return wave;
}

std::vector<WaveDecomposition> sample_waves(const PlanarDigraph& g, double delta, Rng& rng) {
  std::vector<WaveDecomposition> waves;
  std::uint64_t key = 0;
  for (const auto& comp : arc_components(g)) {
    Rng child = rng.split(key++);
    waves.push_back(sample_wave(g, comp.front(), delta, child));
  }
  return waves;
}

LayerGraph extract_layer(const PlanarDigraph& g, const WaveDecomposition& wave, std::size_t i) {
  if (i >= wave.layer_count()) throw InputError("layer index out of range");
  LayerGraph layer;
  layer.index = i;
  layer.reversed = WaveDecomposition::inward(i);
  layer.scale = 3.0 * wave.scale;
  if (i == 0) {
    layer.minor = induced_subgraph(g, wave.layers[0]);
    layer.root = layer.minor.local_of[wave.source];
  } else {
    std::vector<VertexId> earlier;
    for (std::size_t j = 0; j < i; ++j) {
      earlier.insert(earlier.end(), wave.layers[j].begin(), wave.layers[j].end());
    }
    std::sort(earlier.begin(), earlier.end());
    layer.minor = contract_and_restrict(g, earlier, wave.layers[i]);
    layer.root = layer.minor.super_vertex;
  }
  if (layer.reversed) layer.minor.graph = reverse(layer.minor.graph);
  return layer;
}

PathLayers path_layers(const WaveDecomposition& wave, const DirectedPath& p) {
  PathLayers result;
  if (p.empty()) return result;
  std::size_t lo = kNoLayer, hi = 0;
  bool reached = true;
  for (std::size_t j = 0; j < p.vertices.size(); ++j) {
    const std::size_t l = wave.layer_of[p.vertices[j]];
    if (l == kNoLayer) {
      reached = false;
    } else {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    if (!result.pieces.empty() && result.pieces.back().layer == l) {
      result.pieces.back().end = j + 1;
    } else {
      result.pieces.push_back({l, j, j + 1});
    }
  }
  result.base = lo;
  result.within_three = reached && hi - lo <= 2;
  std::vector<std::size_t> seen;
  result.contiguous = reached;
  for (const auto& piece : result.pieces) {
    if (std::find(seen.begin(), seen.end(), piece.layer) != seen.end()) result.contiguous = false;
    seen.push_back(piece.layer);
  }
  return result;
}

PathLayers locate_path_layers(const WaveDecomposition& wave, const DirectedPath& p) {
  if (p.length > wave.scale) throw PreconditionError("path is longer than the wave scale");
  PathLayers result = path_layers(wave, p);
  if (!result.within_three || !result.contiguous || result.pieces.size() > 3) {
    throw InternalError("path does not split into three contiguous layer runs");
  }
  return result;
}

void write_wave_dump(std::ostream& out, const std::vector<WaveDecomposition>& waves) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& wave : waves) {
    nlohmann::json w;
    w["source"] = wave.source;
    w["scale"] = wave.scale;
    w["offsets"] = wave.offsets;
    w["layers"] = wave.layers;
    w["cut"] = wave.cut.ids();
    doc.push_back(std::move(w));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace quasipart
