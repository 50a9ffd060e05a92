#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "quasipart/decomposition.hpp"
#include "quasipart/embedding.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/random.hpp"
#include "quasipart/wave.hpp"
#include "support.hpp"

using namespace quasipart;

namespace {

LayerGraph as_layer(const PlanarDigraph& g, VertexId root, double scale) {
  LayerGraph layer;
  std::vector<VertexId> all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  layer.minor = induced_subgraph(g, all);
  layer.root = root;
  layer.scale = scale;
  return layer;
}

// Largest d(u, v) over pairs related after removing f.
double worst_related(const PlanarDigraph& g, const Cutset& f) {
  const auto d = qtest::floyd(g);
  const auto r = qtest::closure(g, f);
  double worst = 0.0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (r[u][v]) worst = std::max(worst, d[u][v]);
  return worst;
}

}  // namespace

TEST(LayerQP, BaseCaseKeepsShortArc) {
  LayerQPConfig cfg;
  cfg.target = 1.0;
  cfg.c1 = 1.0;
  const double delta = cfg.ball_scale(2);
  EXPECT_DOUBLE_EQ(delta, 1.0 / (1.0 + std::log(2.0)));
  Rng rng(1);
  const auto short_arc = layer_quasipartition(as_layer(qtest::chain({0.5}), 0, 1.0), cfg, rng);
  EXPECT_TRUE(short_arc.cutset.empty());
  ASSERT_EQ(short_arc.trace.nodes.size(), 1u);
  EXPECT_TRUE(short_arc.trace.nodes[0].base_case);
  const auto long_arc = layer_quasipartition(as_layer(qtest::chain({0.75}), 0, 1.0), cfg, rng);
  EXPECT_EQ(long_arc.cutset.ids(), std::vector<ArcId>{0});
  const auto exact = layer_quasipartition(as_layer(qtest::chain({delta}), 0, 1.0), cfg, rng);
  EXPECT_EQ(exact.cutset.size(), 1u);
}

TEST(LayerQP, ConfigDefaults) {
  LayerQPConfig cfg;
  EXPECT_EQ(cfg.c1, 8.0);
  EXPECT_EQ(cfg.base_size, 3u);
  EXPECT_EQ(cfg.depth_limit(64), 13u);
  cfg.depth_guard = 5;
  EXPECT_EQ(cfg.depth_limit(64), 5u);
}

TEST(LayerQP, RecursionTrace) {
  const auto g = qtest::grid(8, 8, 3);
  const auto layer = as_layer(g, 0, 1000.0);
  LayerQPConfig cfg;
  cfg.layer_scale = layer.scale;
  cfg.target = 20.0;
  Rng rng(5);
  const auto result = layer_quasipartition(layer, cfg, rng);
  const auto& nodes = result.trace.nodes;
  const std::size_t limit = cfg.depth_limit(64);
  EXPECT_LE(result.trace.max_depth, limit);
  EXPECT_EQ(nodes[0].vertices.size(), 64u);

  std::vector<std::size_t> participation(g.arc_count(), 0);
  for (const auto& node : nodes) {
    std::vector<char> in(64, 0);
    for (VertexId v : node.vertices) in[v] = 1;
    for (ArcId a = 0; a < g.arc_count(); ++a)
      participation[a] += in[g.arc(a).tail] && in[g.arc(a).head];
    if (node.base_case) {
      EXPECT_LE(node.vertices.size(), cfg.base_size);
      continue;
    }
    std::vector<char> keep = in;
    for (const auto& p : node.separator_paths) {
      for (VertexId v : p.vertices) {
        EXPECT_TRUE(in[v]);
        keep[v] = 0;
      }
    }
    // Children are the components left by the separator, in order.
    std::size_t covered = 0;
    for (std::size_t c : node.children) {
      EXPECT_EQ(nodes[c].depth, node.depth + 1);
      for (VertexId v : nodes[c].vertices) EXPECT_TRUE(keep[v]);
      covered += nodes[c].vertices.size();
      EXPECT_LE(nodes[c].vertices.size(), (2 * node.vertices.size() + 2) / 3);
    }
    EXPECT_EQ(covered, static_cast<std::size_t>(std::count(keep.begin(), keep.end(), 1)));
    EXPECT_EQ(node.path_cuts.size(), node.separator_paths.size());
    for (const auto& cuts : node.path_cuts)
      for (ArcId a : cuts) EXPECT_TRUE(result.cutset.contains(a));
  }
  for (std::size_t count : participation) EXPECT_LE(count, limit);
  for (ArcId a : result.cutset.ids()) EXPECT_LE(result.cut_depth[a], result.trace.max_depth);
}

TEST(LayerQP, BoundedOnGridLayer) {
  const auto g = qtest::grid(8, 8, 7, 5);
  Rng wave_rng(2);
  const auto wave = sample_wave(g, 0, 1000.0, wave_rng);
  const auto layer = extract_layer(g, wave, 0);
  LayerQPConfig cfg;
  cfg.layer_scale = layer.scale;
  cfg.target = 20.0 / 3.0;
  for (int s = 0; s < 50; ++s) {
    Rng rng = Rng(11).split(s);
    const auto r = layer_quasipartition(layer, cfg, rng);
    EXPECT_LE(worst_related(layer.graph(), r.cutset), cfg.target);
  }
}

TEST(LayerQP, DepthGuard) {
  const auto g = qtest::grid(8, 8, 3);
  LayerQPConfig cfg;
  cfg.target = 20.0;
  cfg.depth_guard = 1;
  Rng rng(1);
  EXPECT_THROW(layer_quasipartition(as_layer(g, 0, 1000.0), cfg, rng), InternalError);
  cfg.depth_guard = 0;
  cfg.target = 0.0;
  EXPECT_THROW(layer_quasipartition(as_layer(g, 0, 1000.0), cfg, rng), ParameterError);
}

TEST(Planar, SingleVertex) {
  const auto g = EmbeddingBuilder(1).build();
  Rng rng(1);
  const auto s = planar_quasipartition(g, 1.0, rng);
  EXPECT_TRUE(s.cutset.empty());
  EXPECT_EQ(s.layer_count, 1u);
}

TEST(Planar, ZeroLengthArcNeverCut) {
  auto lengths = std::vector<double>();
  const auto base = qtest::grid(6, 6, 4);
  for (const Arc& a : base.arcs()) lengths.push_back(a.length);
  for (ArcId a = 0; a < lengths.size(); a += 7) lengths[a] = 0.0;
  const auto g = qtest::with_lengths(base, lengths);
  for (std::size_t k = 0; k < 200; ++k) {
    const auto s = sample_at(g, 12.0, 3, k);
    const auto related = qtest::closure(g, s.cutset);
    for (ArcId a = 0; a < lengths.size(); a += 7) {
      ASSERT_FALSE(s.cutset.contains(a));
      ASSERT_TRUE(related[g.arc(a).tail][g.arc(a).head]);
    }
  }
}

TEST(Planar, LongArcIsPrecut) {
  const auto g = qtest::chain({4.0});
  for (std::size_t k = 0; k < 20; ++k) {
    const auto s = sample_at(g, 2.0, 1, k);
    EXPECT_EQ(s.cutset.ids(), std::vector<ArcId>{0});
    EXPECT_EQ(s.provenance[0].label(), "precut");
    const auto related = qtest::closure(g, s.cutset);
    EXPECT_FALSE(related[0][1]);
  }
}

TEST(Planar, UnionStructure) {
  const auto g = qtest::grid(7, 7, 9, 12);
  const double delta = 10.0;
  for (std::size_t k = 0; k < 30; ++k) {
    const auto s = sample_at(g, delta, 17, k);
    Cutset wave_cut(g.arc_count());
    for (const auto& w : s.waves) wave_cut.merge(w.cut);
    Cutset rebuilt(g.arc_count());
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      const bool longer = g.arc(a).length > delta;
      if (longer) {
        EXPECT_TRUE(s.cutset.contains(a));
        EXPECT_EQ(s.provenance[a].source, CutSource::kPrecut);
      } else if (wave_cut.contains(a)) {
        EXPECT_TRUE(s.cutset.contains(a));
        EXPECT_EQ(s.provenance[a].source, CutSource::kWave);
      } else if (s.cutset.contains(a)) {
        EXPECT_EQ(s.provenance[a].source, CutSource::kLayer);
        EXPECT_LE(s.provenance[a].depth, s.max_depth);
        // Layer cuts stay inside one layer or touch the layers below it.
        const auto& w = s.waves[0];
        const std::size_t i = s.provenance[a].layer;
        EXPECT_LE(w.layer_of[g.arc(a).tail], i);
        EXPECT_LE(w.layer_of[g.arc(a).head], i);
        EXPECT_TRUE(w.layer_of[g.arc(a).tail] == i || w.layer_of[g.arc(a).head] == i);
      }
    }
  }
}

TEST(Planar, BoundedAtDelta) {
  const auto g = qtest::grid(6, 6, 21);
  const double delta = 15.0;
  for (std::size_t k = 0; k < 100; ++k) {
    const auto s = sample_at(g, delta, 8, k);
    ASSERT_LE(worst_related(g, s.cutset), delta) << "sample " << k;
  }
}

TEST(Planar, SampleManyIsDeterministic) {
  const auto g = qtest::grid(6, 6, 2);
  const auto one = sample_many(g, 400.0, 1, 44);
  Rng rng = Rng(44).split(std::uint64_t{0});
  EXPECT_EQ(one[0].cutset, planar_quasipartition(g, 400.0, rng).cutset);
  const auto a = sample_many(g, 400.0, 24, 44, {}, 1);
  const auto b = sample_many(g, 400.0, 24, 44, {}, 4);
  std::set<std::vector<ArcId>> distinct;
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].cutset, b[k].cutset);
    EXPECT_EQ(a[k].cutset, sample_at(g, 400.0, 44, k).cutset);
    distinct.insert(a[k].cutset.ids());
  }
  EXPECT_GT(distinct.size(), 1u);
}

TEST(Planar, Parameters) {
  const auto g = qtest::chain({1.0});
  Rng rng(1);
  EXPECT_THROW(planar_quasipartition(g, 0.0, rng), ParameterError);
  EXPECT_THROW(planar_quasipartition(g, kInfinity, rng), ParameterError);
}
