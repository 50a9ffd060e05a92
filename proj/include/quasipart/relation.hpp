#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quasipart/graph.hpp"

namespace quasipart {

// Quasipartition induced by a cutset: (u, v) is related iff v is reachable
// from u once the cut arcs are deleted. The relation is never stored; it is
// answered by reachability queries on the host.
class Quasipartition {
 public:
  Quasipartition(const PlanarDigraph& host, Cutset cutset, double scale);

  const PlanarDigraph& host() const { return *host_; }
  const Cutset& cutset() const { return cutset_; }
  double scale() const { return scale_; }

  bool contains(VertexId u, VertexId v) const;
  // All v with (u, v) in the relation, as flags.
  std::vector<char> related_from(VertexId u) const;

 private:
  const PlanarDigraph* host_;
  Cutset cutset_;
  double scale_;
};

bool relation_contains(const Quasipartition& q, VertexId u, VertexId v);

inline constexpr std::size_t kDefaultRelationCap = 64;

// Every related pair, sorted. Throws SizeError above `cap` vertices.
std::vector<std::pair<VertexId, VertexId>> materialize_relation(
    const Quasipartition& q, std::size_t cap = kDefaultRelationCap);

}  // namespace quasipart
