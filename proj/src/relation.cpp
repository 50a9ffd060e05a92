#include "quasipart/relation.hpp"

#include <string>

#include "quasipart/errors.hpp"
#include "quasipart/paths.hpp"

namespace quasipart {

Quasipartition::Quasipartition(const PlanarDigraph& host, Cutset cutset, double scale)
    : host_(&host), cutset_(std::move(cutset)), scale_(scale) {
  if (cutset_.arc_capacity() != host.arc_count()) {
    throw InputError("cutset size does not match the host graph");
  }
}

std::vector<char> Quasipartition::related_from(VertexId u) const {
  return reachable(*host_, std::span<const VertexId>(&u, 1), {.removed = &cutset_});
}

bool Quasipartition::contains(VertexId u, VertexId v) const {
  if (!host_->valid_vertex(u) || !host_->valid_vertex(v)) {
    throw InputError("invalid vertex id");
  }
  return u == v || related_from(u)[v] != 0;
}

bool relation_contains(const Quasipartition& q, VertexId u, VertexId v) {
  return q.contains(u, v);
}

std::vector<std::pair<VertexId, VertexId>> materialize_relation(const Quasipartition& q,
                                                                std::size_t cap) {
  const std::size_t n = q.host().vertex_count();
  if (n > cap) {
    throw SizeError("relation materialization capped at " + std::to_string(cap) + " vertices");
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    const auto related = q.related_from(u);
    for (VertexId v = 0; v < n; ++v) {
      if (related[v]) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

}  // namespace quasipart
