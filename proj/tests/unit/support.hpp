#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "quasipart/embedding.hpp"
#include "quasipart/graph.hpp"
#include "quasipart/instances.hpp"

namespace qtest {

using namespace quasipart;

// 0 -> 1 -> ... -> k with the given lengths.
inline PlanarDigraph chain(const std::vector<double>& lengths) {
  EmbeddingBuilder b(lengths.size() + 1);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const EdgeId e = b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    b.add_arc(static_cast<VertexId>(i), static_cast<VertexId>(i + 1), lengths[i], e);
  }
  return b.build();
}

// Centre 0 with arcs 0 -> i of the given length.
inline PlanarDigraph star(std::size_t leaves, double length) {
  EmbeddingBuilder b(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) {
    const EdgeId e = b.add_edge(0, static_cast<VertexId>(i));
    b.add_arc(0, static_cast<VertexId>(i), length, e);
  }
  return b.build();
}

inline PlanarDigraph grid(int rows, int cols, std::uint64_t seed, int max_length = 10,
                          OrientationPolicy o = OrientationPolicy::kBothDirections) {
  InstanceSpec spec;
  spec.family = Family::kGrid;
  spec.rows = rows;
  spec.cols = cols;
  spec.lengths = LengthDistribution::uniform(max_length);
  spec.orientation = o;
  spec.seed = seed;
  return generate(spec);
}

inline PlanarDigraph triangulation(int n, std::uint64_t seed,
                                   OrientationPolicy o = OrientationPolicy::kBothDirections) {
  InstanceSpec spec;
  spec.family = Family::kTriangulation;
  spec.size = n;
  spec.orientation = o;
  spec.seed = seed;
  return generate(spec);
}

// Same graph with new arc lengths.
inline PlanarDigraph with_lengths(const PlanarDigraph& g, const std::vector<double>& lengths) {
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  for (std::size_t a = 0; a < arcs.size(); ++a) arcs[a].length = lengths[a];
  std::vector<std::vector<EdgeId>> rotation;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    rotation.emplace_back(g.rotation(v).begin(), g.rotation(v).end());
  }
  return PlanarDigraph(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()),
                       std::move(arcs), std::move(rotation));
}

// Floyd-Warshall over the arc list.
inline std::vector<std::vector<double>> floyd(const PlanarDigraph& g, const Cutset* removed = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInfinity));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (removed && removed->contains(a)) continue;
    const Arc& arc = g.arc(a);
    d[arc.tail][arc.head] = std::min(d[arc.tail][arc.head], arc.length);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Boolean transitive closure of the arcs that survive `removed`.
inline std::vector<std::vector<char>> closure(const PlanarDigraph& g, const Cutset& removed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    if (!removed.contains(a)) r[g.arc(a).tail][g.arc(a).head] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

// Union-find component sizes of the undirected graph over `keep` vertices.
inline std::size_t largest_component(const PlanarDigraph& g, const std::vector<char>& keep) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) parent[find(e.u)] = find(e.v);
  }
  std::vector<std::size_t> size(g.vertex_count(), 0);
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) best = std::max(best, ++size[find(v)]);
  }
  return best;
}

}  // namespace qtest
