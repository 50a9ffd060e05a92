#include <gtest/gtest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "quasipart/embedding.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/graph.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/random.hpp"
#include "quasipart/relation.hpp"
#include "support.hpp"

using namespace quasipart;
using qtest::chain;

TEST(Distances, IdentityIsZero) {
  const auto g = qtest::grid(4, 4, 3);
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(shortest_path_dist(g, v, v), 0.0);
}

TEST(Distances, ChainSumsAndUnreachable) {
  const auto g = chain({2, 3});
  EXPECT_EQ(shortest_path_dist(g, 0, 2), 5.0);
  EXPECT_EQ(shortest_path_dist(g, 2, 0), kInfinity);
  EXPECT_TRUE(std::isinf(shortest_path_dist(g, 1, 0)));
}

TEST(Distances, InvalidVertex) {
  const auto g = chain({1});
  EXPECT_THROW(shortest_path_dist(g, 0, 2), InputError);
  EXPECT_THROW(quasiball(g, 5, 1.0), InputError);
}

TEST(Distances, MatchFloydWarshall) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = qtest::triangulation(25, seed, OrientationPolicy::kRandomSingle);
    const auto expected = qtest::floyd(g);
    const auto actual = all_pairs_distances(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ASSERT_EQ(actual[u][v], expected[u][v]) << u << "->" << v;
        ASSERT_EQ(shortest_path_dist(g, u, v), expected[u][v]);
      }
    }
  }
}

TEST(Distances, TriangleInequality) {
  const auto g = qtest::grid(5, 5, 11, 10, OrientationPolicy::kRandomSingle);
  const auto d = all_pairs_distances(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) ASSERT_LE(d[u][w], d[u][v] + d[v][w]);
}

TEST(Distances, ShortestPathIsShortest) {
  const auto g = qtest::grid(6, 6, 2);
  const auto d = qtest::floyd(g);
  for (VertexId v = 0; v < g.vertex_count(); v += 5) {
    const auto p = shortest_path(g, 0, v);
    EXPECT_EQ(p.length, d[0][v]);
    EXPECT_TRUE(is_shortest_path(g, p));
    EXPECT_EQ(p.head(), 0u);
    EXPECT_EQ(p.tail(), v);
  }
  EXPECT_TRUE(shortest_path(chain({1}), 1, 0).empty());
}

TEST(Distances, NonShortestPathRejected) {
  // 0 -> 1 -> 2 of length 2 plus a direct arc 0 -> 2 of length 1.
  EmbeddingBuilder b(3);
  const EdgeId e01 = b.add_edge(0, 1);
  const EdgeId e12 = b.add_edge(1, 2);
  const EdgeId e02 = b.add_edge(0, 2);
  const ArcId a01 = b.add_arc(0, 1, 1, e01);
  const ArcId a12 = b.add_arc(1, 2, 1, e12);
  b.add_arc(0, 2, 1, e02);
  const auto g = b.build();
  const std::vector<ArcId> arcs{a01, a12};
  const auto p = make_path(g, 0, arcs);
  EXPECT_EQ(p.length, 2.0);
  EXPECT_FALSE(is_shortest_path(g, p));
  const std::vector<ArcId> broken{a12, a01};
  EXPECT_THROW(make_path(g, 0, broken), InputError);
}

TEST(Quasiball, Examples) {
  const auto g = chain({1, 1});
  EXPECT_EQ(quasiball(g, 0, 1), (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(quasiball(reverse(g), 0, 1), (std::vector<VertexId>{0}));
  EXPECT_EQ(quasiball(g, 0, 1, Orientation::kReverse), (std::vector<VertexId>{0}));
  EXPECT_EQ(quasiball(g, 2, 5, Orientation::kReverse), (std::vector<VertexId>{0, 1, 2}));
}

TEST(Quasiball, ZeroRadiusFollowsZeroArcs) {
  const auto g = chain({0, 0, 1});
  EXPECT_EQ(quasiball(g, 0, 0), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(quasiball(g, 3, 0), (std::vector<VertexId>{3}));
}

TEST(Quasiball, MatchesDistanceDefinition) {
  const auto g = qtest::grid(5, 5, 8);
  const auto d = qtest::floyd(g);
  for (double r : {0.0, 3.0, 7.5, 12.0}) {
    for (VertexId c = 0; c < g.vertex_count(); c += 3) {
      std::vector<VertexId> expected;
      for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (d[c][u] <= r) expected.push_back(u);
      EXPECT_EQ(quasiball(g, c, r), expected);
    }
  }
}

TEST(Reverse, SingleArc) {
  const auto g = chain({5});
  const auto r = reverse(g);
  ASSERT_EQ(r.arc_count(), 1u);
  EXPECT_EQ(r.arc(0).tail, 1u);
  EXPECT_EQ(r.arc(0).head, 0u);
  EXPECT_EQ(r.arc(0).length, 5.0);
}

TEST(Reverse, ArclessAndInvolution) {
  EmbeddingBuilder b(2);
  b.add_edge(0, 1);
  const auto arcless = b.build();
  EXPECT_EQ(reverse(arcless), arcless);
  const auto g = qtest::triangulation(20, 4, OrientationPolicy::kRandomSingle);
  EXPECT_EQ(reverse(reverse(g)), g);
}

TEST(Reverse, DistancesTranspose) {
  const auto g = qtest::grid(4, 5, 9, 10, OrientationPolicy::kRandomSingle);
  const auto d = qtest::floyd(g);
  const auto r = all_pairs_distances(reverse(g));
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(r[u][v], d[v][u]);
}

TEST(Relation, Examples) {
  const auto g = chain({1, 1});
  Quasipartition none(g, Cutset(g.arc_count()), 1.0);
  EXPECT_TRUE(relation_contains(none, 0, 2));
  EXPECT_FALSE(relation_contains(none, 2, 0));

  Quasipartition all(g, Cutset::all(g.arc_count()), 1.0);
  for (VertexId u = 0; u < 3; ++u)
    for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(relation_contains(all, u, v), u == v);

  Cutset bc(g.arc_count());
  bc.insert(1);
  Quasipartition cut(g, bc, 1.0);
  EXPECT_TRUE(relation_contains(cut, 0, 1));
  EXPECT_FALSE(relation_contains(cut, 0, 2));
}

TEST(Relation, Materialize) {
  using Pairs = std::vector<std::pair<VertexId, VertexId>>;
  const auto single = EmbeddingBuilder(1).build();
  EXPECT_EQ(materialize_relation(Quasipartition(single, Cutset(0), 1.0)), (Pairs{{0, 0}}));
  const auto two = EmbeddingBuilder(2).build();
  EXPECT_EQ(materialize_relation(Quasipartition(two, Cutset(0), 1.0)), (Pairs{{0, 0}, {1, 1}}));
  const auto ab = chain({1});
  EXPECT_EQ(materialize_relation(Quasipartition(ab, Cutset(1), 1.0)),
            (Pairs{{0, 0}, {0, 1}, {1, 1}}));
}

TEST(Relation, MaterializeCap) {
  const auto g = qtest::grid(9, 8, 1);
  Quasipartition q(g, Cutset(g.arc_count()), 1.0);
  EXPECT_THROW(materialize_relation(q), SizeError);
  EXPECT_NO_THROW(materialize_relation(q, 100));
}

TEST(Relation, MatchesClosureOracle) {
  const auto g = qtest::triangulation(12, 6, OrientationPolicy::kRandomSingle);
  Rng rng(17);
  Cutset f(g.arc_count());
  for (ArcId a = 0; a < g.arc_count(); ++a)
    if (rng.below(3) == 0) f.insert(a);
  const auto expected = qtest::closure(g, f);
  Quasipartition q(g, f, 1.0);
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      EXPECT_EQ(q.contains(u, v), expected[u][v] != 0);
}

TEST(Cutset, Operations) {
  Cutset c(5);
  EXPECT_TRUE(c.empty());
  EXPECT_TRUE(c.insert(3));
  EXPECT_FALSE(c.insert(3));
  EXPECT_TRUE(c.insert(1));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.ids(), (std::vector<ArcId>{1, 3}));
  Cutset d(5);
  d.insert(4);
  d.insert(1);
  c.merge(d);
  EXPECT_EQ(c.ids(), (std::vector<ArcId>{1, 3, 4}));
  EXPECT_FALSE(c.contains(0));
  EXPECT_FALSE(c.contains(99));
  EXPECT_EQ(Cutset::all(3).size(), 3u);
}

TEST(Construction, RejectsBadInput) {
  {
    EmbeddingBuilder b(2);
    const EdgeId e = b.add_edge(0, 1);
    b.add_arc(0, 1, -1, e);
    EXPECT_THROW(b.build(), Error);
  }
  {
    EmbeddingBuilder b(2);
    const EdgeId e = b.add_edge(0, 1);
    b.add_arc(0, 1, std::nan(""), e);
    EXPECT_THROW(b.build(), Error);
  }
  {
    EmbeddingBuilder b(2);
    const EdgeId e = b.add_edge(0, 1, true);
    b.add_arc(0, 1, 1, e);
    EXPECT_THROW(b.build(), Error);
  }
}

TEST(Construction, RejectsNonPlanarRotation) {
  // K4 with every rotation in ascending neighbour order has genus 1.
  EmbeddingBuilder b(4);
  std::vector<std::vector<EdgeId>> at(4);
  EdgeId id[4][4];
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) {
      id[u][v] = id[v][u] = b.add_edge(u, v);
    }
  }
  for (VertexId u = 0; u < 4; ++u) {
    std::vector<EdgeId> order;
    for (VertexId v = 0; v < 4; ++v)
      if (v != u) order.push_back(id[u][v]);
    b.set_rotation(u, order);
  }
  EXPECT_THROW(b.build(), StructureError);
}

TEST(Triangulate, TriangleUnchanged) {
  const auto g = qtest::triangulation(3, 1);
  EXPECT_EQ(triangulate(g), g);
}

TEST(Triangulate, FourCycle) {
  EmbeddingBuilder b(4);
  for (VertexId v = 0; v < 4; ++v) {
    const EdgeId e = b.add_edge(v, (v + 1) % 4);
    b.add_arc(v, (v + 1) % 4, 1, e);
  }
  const auto t = triangulate(b.build());
  EXPECT_EQ(t.edge_count(), 6u);
  const auto faces = trace_faces(t);
  EXPECT_EQ(faces.size(), 4u);
  for (const auto& f : faces) EXPECT_EQ(f.size(), 3u);
  std::size_t virtual_edges = 0;
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (t.edge(e).is_virtual) {
      ++virtual_edges;
      EXPECT_TRUE(t.edge_arcs(e).empty());
    }
  }
  EXPECT_EQ(virtual_edges, 2u);
}

TEST(Triangulate, GridKeepsDistancesAndTriangulatesEveryFace) {
  const auto g = qtest::grid(3, 3, 5);
  const auto t = triangulate(g);
  EXPECT_EQ(t.edge_count(), 21u);
  EXPECT_EQ(t.arc_count(), g.arc_count());
  const auto faces = trace_faces(t);
  EXPECT_EQ(faces.size(), 2 * t.edge_count() / 3);
  for (const auto& f : faces) EXPECT_EQ(f.size(), 3u);
  EXPECT_TRUE(satisfies_euler(t));
  EXPECT_EQ(all_pairs_distances(t), qtest::floyd(g));
  // Original edges keep their relative rotation order.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<EdgeId> real;
    for (EdgeId e : t.rotation(v))
      if (!t.edge(e).is_virtual) real.push_back(e);
    ASSERT_EQ(real.size(), g.rotation(v).size());
    const auto first = std::find(real.begin(), real.end(), g.rotation(v)[0]);
    ASSERT_NE(first, real.end());
    std::rotate(real.begin(), first, real.end());
    EXPECT_EQ(real, std::vector<EdgeId>(g.rotation(v).begin(), g.rotation(v).end()));
  }
}

TEST(Triangulate, LargerInstances) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = qtest::grid(5, 7, seed, 10, OrientationPolicy::kRandomSingle);
    const auto t = triangulate(g);
    EXPECT_EQ(t.edge_count(), 3 * g.vertex_count() - 6);
    EXPECT_EQ(trace_faces(t).size(), 2 * t.edge_count() / 3);
    EXPECT_EQ(all_pairs_distances(t), all_pairs_distances(g));
  }
}

TEST(Triangulate, DisconnectedRejected) {
  EmbeddingBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(2, 3);
  EXPECT_THROW(triangulate(b.build()), StructureError);
}

TEST(Layered, Examples) {
  const auto s = qtest::star(5, 1);
  const auto star_check = check_layered(s, 0, 1, 1);
  EXPECT_TRUE(star_check.layered);
  for (VertexId v = 1; v <= 5; ++v) EXPECT_EQ(s.arc(star_check.parent[v]).tail, 0u);

  const auto c = chain({1, 1, 1});
  const auto one = check_layered(c, 0, 1, 2);
  EXPECT_FALSE(one.layered);
  EXPECT_EQ(one.offending, 3u);
  const auto two = check_layered(c, 0, 2, 2);
  EXPECT_TRUE(two.layered);
  EXPECT_EQ(two.pieces[3], 2);
}

TEST(Layered, UnreachableVertex) {
  const auto c = chain({1, 1});
  const auto r = check_layered(c, 1, 3, 10);
  EXPECT_FALSE(r.layered);
  EXPECT_EQ(r.offending, 0u);
}

TEST(Faces, EulerOnGenerated) {
  EXPECT_TRUE(satisfies_euler(qtest::grid(6, 4, 1)));
  EXPECT_TRUE(satisfies_euler(qtest::triangulation(40, 2)));
  EXPECT_TRUE(satisfies_euler(EmbeddingBuilder(3).build()));
}

TEST(Minor, InducedSubgraphAndDeleteArcs) {
  const auto g = qtest::grid(3, 3, 4);
  const std::vector<VertexId> kept{0, 1, 3, 4};
  const auto m = induced_subgraph(g, kept);
  EXPECT_EQ(m.graph.vertex_count(), 4u);
  EXPECT_EQ(m.graph.arc_count(), 8u);
  for (ArcId a = 0; a < m.graph.arc_count(); ++a) {
    const Arc& local = m.graph.arc(a);
    const Arc& host = g.arc(m.arc_origin[a]);
    EXPECT_EQ(m.vertex_origin[local.tail], host.tail);
    EXPECT_EQ(m.vertex_origin[local.head], host.head);
    EXPECT_EQ(local.length, host.length);
  }
  Cutset drop(g.arc_count());
  drop.insert(0);
  drop.insert(5);
  const auto d = delete_arcs(g, drop);
  EXPECT_EQ(d.graph.arc_count(), g.arc_count() - 2);
  EXPECT_EQ(d.graph.vertex_count(), g.vertex_count());
  EXPECT_EQ(all_pairs_distances(d.graph), qtest::floyd(g, &drop));
}

TEST(Minor, ContractAndRestrict) {
  const auto g = qtest::grid(3, 3, 4);
  const std::vector<VertexId> contracted{0, 1, 2};
  const std::vector<VertexId> kept{3, 4, 5};
  const auto m = contract_and_restrict(g, contracted, kept);
  EXPECT_EQ(m.super_vertex, 0u);
  EXPECT_EQ(m.graph.vertex_count(), 4u);
  // Three vertical edges in each direction plus the middle row.
  EXPECT_EQ(m.graph.arc_count(), 6u + 4u);
  EXPECT_TRUE(satisfies_euler(m.graph));
  for (VertexId v : contracted) EXPECT_EQ(m.local_of[v], 0u);
  for (VertexId v = 6; v < 9; ++v) EXPECT_EQ(m.local_of[v], kNoVertex);
}
