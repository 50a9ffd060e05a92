#include "quasipart/instances.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "quasipart/embedding.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/graph_io.hpp"
#include "quasipart/random.hpp"

namespace quasipart {
namespace {

double draw_length(const LengthDistribution& dist, Rng& rng) {
  if (dist.kind == LengthDistribution::Kind::kConstant) return dist.constant;
  return static_cast<double>(1 + rng.below(static_cast<std::uint64_t>(dist.max_length)));
}

void validate_lengths(const LengthDistribution& dist) {
  if (dist.kind == LengthDistribution::Kind::kUniformInteger && dist.max_length < 1) {
    throw InputError("maximum length must be at least 1");
  }
  if (dist.kind == LengthDistribution::Kind::kConstant && !(dist.constant >= 0.0)) {
    throw InputError("constant length must be non-negative");
  }
}

// Puts arcs on every edge of the builder according to the policy.
void add_arcs(EmbeddingBuilder& builder, const InstanceSpec& spec, Rng& rng) {
  const std::size_t m = builder.edge_count();
  for (EdgeId e = 0; e < m; ++e) {
    const Edge ed = builder.edge(e);
    const VertexId lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
    switch (spec.orientation) {
      case OrientationPolicy::kBothDirections:
        builder.add_arc(lo, hi, draw_length(spec.lengths, rng), e);
        builder.add_arc(hi, lo, draw_length(spec.lengths, rng), e);
        break;
      case OrientationPolicy::kRandomSingle:
        if (rng.below(2) == 0) {
          builder.add_arc(lo, hi, draw_length(spec.lengths, rng), e);
        } else {
          builder.add_arc(hi, lo, draw_length(spec.lengths, rng), e);
        }
        break;
      case OrientationPolicy::kDagByCoordinate:
        builder.add_arc(lo, hi, draw_length(spec.lengths, rng), e);
        break;
    }
  }
}

}  // namespace

PlanarDigraph gen_grid(int rows, int cols, const InstanceSpec& spec) {
  if (rows < 1 || cols < 1) throw InputError("grid dimensions must be at least 1");
  validate_lengths(spec.lengths);
  Rng rng(spec.seed);
  const auto id = [cols](int r, int c) { return static_cast<VertexId>(r * cols + c); };
  EmbeddingBuilder builder(static_cast<std::size_t>(rows) * cols);
  std::vector<EdgeId> east(builder.vertex_count(), kNoEdge), south(builder.vertex_count(), kNoEdge);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) east[id(r, c)] = builder.add_edge(id(r, c), id(r, c + 1));
  }
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) south[id(r, c)] = builder.add_edge(id(r, c), id(r + 1, c));
  }
  // Counter-clockwise with rows growing downwards: east, north, west, south.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::vector<EdgeId> order;
      if (c + 1 < cols) order.push_back(east[id(r, c)]);
      if (r > 0) order.push_back(south[id(r - 1, c)]);
      if (c > 0) order.push_back(east[id(r, c - 1)]);
      if (r + 1 < rows) order.push_back(south[id(r, c)]);
      builder.set_rotation(id(r, c), std::move(order));
    }
  }
  add_arcs(builder, spec, rng);
  return builder.build();
}

PlanarDigraph gen_triangulation(int n, const InstanceSpec& spec) {
  if (n < 3) throw InputError("a triangulation needs at least 3 vertices");
  validate_lengths(spec.lengths);
  Rng rng(spec.seed);
  EmbeddingBuilder builder(3);
  const EdgeId e01 = builder.add_edge(0, 1);
  const EdgeId e12 = builder.add_edge(1, 2);
  const EdgeId e20 = builder.add_edge(2, 0);

  // Face walk v[0] -> v[1] -> v[2] -> v[0] with e[i] joining v[i], v[i+1].
  struct Face {
    std::array<VertexId, 3> v;
    std::array<EdgeId, 3> e;
  };
  std::vector<Face> faces;
  for (const auto& walk : trace_faces(builder.build())) {
    Face f{};
    for (int i = 0; i < 3; ++i) {
      const Edge& ed = builder.edge(walk[i].edge);
      f.v[i] = walk[i].forward ? ed.u : ed.v;
      f.e[i] = walk[i].edge;
    }
    faces.push_back(f);
  }
  (void)e01;
  (void)e12;
  (void)e20;

  for (int k = 3; k < n; ++k) {
    const std::size_t pick = rng.below(faces.size());
    const Face f = faces[pick];
    const VertexId a = f.v[0], b = f.v[1], c = f.v[2];
    const VertexId x = builder.add_vertex();
    // Each spoke goes into the corner where the face enters that vertex.
    const EdgeId ea = builder.insert_edge(a, f.e[2], x, kNoEdge);
    const EdgeId eb = builder.insert_edge(b, f.e[0], x, ea);
    const EdgeId ec = builder.insert_edge(c, f.e[1], x, ea);
    faces[pick] = Face{{a, b, x}, {f.e[0], eb, ea}};
    faces.push_back(Face{{b, c, x}, {f.e[1], ec, eb}});
    faces.push_back(Face{{c, a, x}, {f.e[2], ea, ec}});
  }
  add_arcs(builder, spec, rng);
  return builder.build();
}

PlanarDigraph gen_chain(int k, const InstanceSpec& spec) {
  if (k < 1) throw InputError("a chain needs at least one arc");
  validate_lengths(spec.lengths);
  Rng rng(spec.seed);
  EmbeddingBuilder builder(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i < k; ++i) {
    const EdgeId e = builder.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    builder.add_arc(static_cast<VertexId>(i), static_cast<VertexId>(i + 1),
                    draw_length(spec.lengths, rng), e);
  }
  return builder.build();
}

PlanarDigraph generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::kGrid:
      return gen_grid(spec.rows, spec.cols, spec);
    case Family::kTriangulation:
      return gen_triangulation(spec.size, spec);
    case Family::kChain:
      return gen_chain(spec.size, spec);
  }
  throw InputError("unknown family");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kGrid:
      return "grid";
    case Family::kTriangulation:
      return "triangulation";
    case Family::kChain:
      return "chain";
  }
  return "?";
}

std::string to_string(OrientationPolicy p) {
  switch (p) {
    case OrientationPolicy::kBothDirections:
      return "both";
    case OrientationPolicy::kRandomSingle:
      return "single";
    case OrientationPolicy::kDagByCoordinate:
      return "dag";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "grid") return Family::kGrid;
  if (name == "triangulation") return Family::kTriangulation;
  if (name == "chain") return Family::kChain;
  throw InputError("unknown family '" + name + "'");
}

OrientationPolicy parse_orientation(const std::string& name) {
  if (name == "both") return OrientationPolicy::kBothDirections;
  if (name == "single") return OrientationPolicy::kRandomSingle;
  if (name == "dag") return OrientationPolicy::kDagByCoordinate;
  throw InputError("unknown orientation policy '" + name + "'");
}

std::string describe(const InstanceSpec& spec) {
  std::ostringstream out;
  out << "family=" << to_string(spec.family);
  if (spec.family == Family::kGrid) {
    out << " rows=" << spec.rows << " cols=" << spec.cols;
  } else {
    out << " size=" << spec.size;
  }
  if (spec.lengths.kind == LengthDistribution::Kind::kConstant) {
    out << " lengths=const:" << format_length(spec.lengths.constant);
  } else {
    out << " lengths=uniform:" << spec.lengths.max_length;
  }
  out << " orientation=" << to_string(spec.orientation) << " seed=" << spec.seed;
  return out.str();
}

}  // namespace quasipart
