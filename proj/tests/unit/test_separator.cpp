#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "quasipart/embedding.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/random.hpp"
#include "quasipart/separator.hpp"
#include "quasipart/wave.hpp"
#include "support.hpp"

using namespace quasipart;

namespace {

std::size_t largest_without(const PlanarDigraph& g, const std::vector<VertexId>& removed) {
  std::vector<char> keep(g.vertex_count(), 1);
  for (VertexId v : removed) keep[v] = 0;
  return qtest::largest_component(g, keep);
}

void expect_valid(const PlanarDigraph& h, const SeparatorPaths& sep, double scale) {
  std::vector<VertexId> vertices;
  for (const auto& p : sep.paths) {
    EXPECT_TRUE(is_shortest_path(h, p));
    EXPECT_LE(p.length, scale);
    for (ArcId a : p.arcs) EXPECT_LT(a, h.arc_count());
    vertices.insert(vertices.end(), p.vertices.begin(), p.vertices.end());
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  EXPECT_EQ(vertices, sep.vertices);
  const std::size_t n = h.vertex_count();
  EXPECT_LE(largest_without(h, sep.vertices), (2 * n + 2) / 3);
  EXPECT_EQ(max_component_after_removal(h, sep.vertices), largest_without(h, sep.vertices));
}

// A layer containing every vertex of the grid.
LayerGraph whole_layer(const PlanarDigraph& g) {
  Rng rng(1);
  const auto wave = sample_wave(g, 0, 1000.0, rng);
  return extract_layer(g, wave, 0);
}

}  // namespace

TEST(Separator, TriangleHasOneNonTreeEdge) {
  EmbeddingBuilder b(3);
  const EdgeId e01 = b.add_edge(0, 1);
  const EdgeId e12 = b.add_edge(1, 2);
  const EdgeId e20 = b.add_edge(2, 0);
  b.add_arc(0, 1, 1, e01);
  b.add_arc(1, 2, 1, e12);
  b.add_arc(0, 2, 1, e20);
  const auto h = b.build();
  const auto tri = triangulate(h);
  const auto tree = search_tree(h, tri, 0);
  EXPECT_EQ(tree.parent[1], 0u);
  EXPECT_EQ(tree.parent[2], 0u);
  const std::vector<std::size_t> weights(3, 1);
  const EdgeId e = fundamental_cycle_separator(tri, tree, weights);
  EXPECT_EQ(e, e12);
  const auto sides = cycle_sides(tri, tree, e, weights);
  EXPECT_EQ(sides.first, 0u);
  EXPECT_EQ(sides.second, 0u);
}

TEST(Separator, GridExhaustive) {
  const auto h = qtest::grid(3, 3, 4);
  const auto tri = triangulate(h);
  const auto tree = search_tree(h, tri, 0);
  const std::vector<std::size_t> weights(9, 1);
  std::vector<char> is_tree(tri.edge_count(), 0);
  for (EdgeId e : tree.parent_edge)
    if (e != kNoEdge) is_tree[e] = 1;

  bool some_qualifies = false;
  for (EdgeId e = 0; e < tri.edge_count(); ++e) {
    if (is_tree[e]) continue;
    auto cycle = tree.root_path(tri.edge(e).u);
    const auto other = tree.root_path(tri.edge(e).v);
    cycle.insert(cycle.end(), other.begin(), other.end());
    std::sort(cycle.begin(), cycle.end());
    cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
    const auto sides = cycle_sides(tri, tree, e, weights);
    EXPECT_EQ(sides.first + sides.second + cycle.size(), 9u);
    // Each component off the cycle sits on one side.
    const std::size_t comp = largest_without(tri, cycle);
    EXPECT_LE(comp, sides.max());
    if (sides.max() <= 6) some_qualifies = true;
  }
  EXPECT_TRUE(some_qualifies);
  const EdgeId chosen = fundamental_cycle_separator(tri, tree, weights);
  EXPECT_FALSE(is_tree[chosen]);
  EXPECT_LE(cycle_sides(tri, tree, chosen, weights).max(), 6u);
}

TEST(Separator, AllWeightOnOneVertex) {
  const auto h = qtest::grid(4, 4, 2);
  const auto tri = triangulate(h);
  const auto tree = search_tree(h, tri, 0);
  std::vector<std::size_t> weights(16, 0);
  weights[10] = 1;
  const EdgeId e = fundamental_cycle_separator(tri, tree, weights);
  EXPECT_LE(3 * cycle_sides(tri, tree, e, weights).max(), 2u);
}

TEST(Separator, TinyGraphs) {
  const auto h = qtest::chain({1, 1});
  const auto sep = find_separator(h, 0);
  EXPECT_EQ(sep.paths.size(), 3u);
  EXPECT_EQ(sep.vertices, (std::vector<VertexId>{0, 1, 2}));
  for (const auto& p : sep.paths) EXPECT_EQ(p.vertices.size(), 1u);
}

TEST(Separator, PathShapedGraph) {
  const auto h = qtest::chain(std::vector<double>(9, 1.0));
  const auto sep = find_separator(h, 0);
  expect_valid(h, sep, 9.0);
  EXPECT_LE(largest_without(h, sep.vertices), 7u);
}

TEST(Separator, GridLayer) {
  const auto g = qtest::grid(8, 8, 6);
  const auto layer = whole_layer(g);
  ASSERT_EQ(layer.graph().vertex_count(), 64u);
  const auto sep = three_path_separator(layer);
  EXPECT_LE(sep.paths.size(), 3u);
  EXPECT_EQ(sep.orientation, Orientation::kForward);
  expect_valid(layer.graph(), sep, layer.scale);
  EXPECT_LE(largest_without(layer.graph(), sep.vertices), 43u);
}

TEST(Separator, LayersOfBothParities) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = qtest::grid(9, 9, seed, 5, OrientationPolicy::kBothDirections);
    Rng rng(seed);
    const auto wave = sample_wave(g, 0, 5.0, rng);
    for (std::size_t i = 0; i < wave.layer_count(); ++i) {
      if (wave.layers[i].empty()) continue;
      const auto layer = extract_layer(g, wave, i);
      const auto sep = three_path_separator(layer);
      EXPECT_EQ(sep.orientation, i % 2 ? Orientation::kReverse : Orientation::kForward);
      EXPECT_LE(sep.paths.size(), 3u);
      expect_valid(layer.graph(), sep, layer.scale);
    }
  }
}

TEST(Separator, LayeredTree) {
  const auto s = qtest::star(5, 1.0);
  LayerGraph star_layer;
  star_layer.minor.graph = s;
  star_layer.root = 0;
  star_layer.scale = 1.0;
  const auto t = layered_tree(star_layer);
  for (VertexId v = 1; v <= 5; ++v) EXPECT_EQ(s.arc(t.parent[v]).tail, 0u);

  const auto g = qtest::grid(6, 6, 3);
  const auto layer = whole_layer(g);
  const auto tree = layered_tree(layer);
  const auto d = qtest::floyd(layer.graph());
  for (VertexId v = 0; v < layer.graph().vertex_count(); ++v) {
    EXPECT_EQ(tree.dist[v], d[layer.root][v]);
  }

  LayerGraph tight = layer;
  tight.scale = 1.0;
  EXPECT_THROW(layered_tree(tight), StructureError);
  EXPECT_THROW(three_path_separator(tight), StructureError);
}

TEST(Separator, OddLayerTreeIsInReversedGraph) {
  const auto g = qtest::grid(8, 8, 11, 5);
  Rng rng(3);
  const auto wave = sample_wave(g, 0, 5.0, rng);
  for (std::size_t i = 1; i < wave.layer_count(); i += 2) {
    if (wave.layers[i].empty()) continue;
    const auto layer = extract_layer(g, wave, i);
    ASSERT_TRUE(layer.reversed);
    const auto tree = layered_tree(layer);
    for (VertexId v = 0; v < layer.graph().vertex_count(); ++v) {
      const auto p = tree_path(layer.graph(), tree, v);
      EXPECT_TRUE(is_shortest_path(layer.graph(), p));
      EXPECT_LT(p.length, layer.scale);
    }
  }
}

TEST(Separator, RandomTriangulations) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto h = qtest::triangulation(40, seed, OrientationPolicy::kRandomSingle);
    const auto sep = find_separator(h, kNoVertex);
    expect_valid(h, sep, kInfinity);
  }
}

TEST(Separator, Errors) {
  EmbeddingBuilder b(5);
  b.add_edge(0, 1);
  b.add_edge(2, 3);
  EXPECT_THROW(find_separator(b.build(), 0), PreconditionError);
  EXPECT_THROW(find_separator(qtest::chain({1, 1, 1, 1}), 9), InputError);
}
