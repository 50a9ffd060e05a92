#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "quasipart/embedding.hpp"
#include "quasipart/graph.hpp"
#include "quasipart/random.hpp"

namespace quasipart {

inline constexpr std::size_t kNoLayer = static_cast<std::size_t>(-1);

// Alternating out/in layering grown from a source. Layer i is disjoint from
// all earlier layers; even layers grow outwards from the union of earlier
// layers and odd layers grow inwards into it.
struct WaveDecomposition {
  VertexId source = kNoVertex;
  double scale = 0.0;
  std::vector<double> offsets;
  std::vector<std::vector<VertexId>> layers;
  // Layer of every host vertex; kNoLayer outside the source's weak component.
  std::vector<std::size_t> layer_of;
  // Arcs between consecutive layers pointing against the growth direction.
  Cutset cut;

  static bool inward(std::size_t i) { return i % 2 == 1; }
  std::size_t layer_count() const { return layers.size(); }
};

// Requires every arc length to be at most delta.
WaveDecomposition sample_wave(const PlanarDigraph& g, VertexId source, double delta, Rng& rng);

// One independent wave per weak component (connected through arcs), sourced
// at its smallest vertex.
std::vector<WaveDecomposition> sample_waves(const PlanarDigraph& g, double delta, Rng& rng);

// Layer i with all earlier layers contracted into a root and all later
// layers deleted. Odd layers are stored reversed so that every vertex is
// within 3 * scale of the root in the stored orientation; arc ids of the
// minor are unaffected by the reversal.
struct LayerGraph {
  std::size_t index = 0;
  Minor minor;
  VertexId root = kNoVertex;
  bool reversed = false;
  double scale = 0.0;

  const PlanarDigraph& graph() const { return minor.graph; }
};

LayerGraph extract_layer(const PlanarDigraph& g, const WaveDecomposition& wave, std::size_t i);

// A path split into maximal runs of vertices sharing a layer.
struct PathLayers {
  struct Piece {
    std::size_t layer;
    std::size_t begin;  // first vertex position
    std::size_t end;    // one past the last vertex position
  };
  std::size_t base = kNoLayer;
  std::vector<Piece> pieces;
  // All vertices lie in layers base, base + 1, base + 2.
  bool within_three = false;
  // Every layer is visited by a single run.
  bool contiguous = false;
};

// Describes how p meets the layers without judging it.
PathLayers path_layers(const WaveDecomposition& wave, const DirectedPath& p);

// Same, but requires length(p) <= scale and throws InternalError unless the
// path splits into at most three contiguous runs within three consecutive
// layers.
PathLayers locate_path_layers(const WaveDecomposition& wave, const DirectedPath& p);

// JSON dump of layer assignment, offsets and cut arcs.
void write_wave_dump(std::ostream& out, const std::vector<WaveDecomposition>& waves);

}  // namespace quasipart
