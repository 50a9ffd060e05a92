#pragma once

#include <cstdint>
#include <string>

#include "quasipart/graph.hpp"

namespace quasipart {

enum class Family { kGrid, kTriangulation, kChain };
enum class OrientationPolicy { kBothDirections, kRandomSingle, kDagByCoordinate };

struct LengthDistribution {
  enum class Kind { kUniformInteger, kConstant } kind = Kind::kUniformInteger;
  // Uniform integers in [1, max_length] for kUniformInteger.
  int max_length = 10;
  double constant = 1.0;

  static LengthDistribution uniform(int max_length) {
    return {Kind::kUniformInteger, max_length, 1.0};
  }
  static LengthDistribution fixed(double value) { return {Kind::kConstant, 1, value}; }
};

struct InstanceSpec {
  Family family = Family::kGrid;
  int rows = 1;      // grid
  int cols = 1;      // grid
  int size = 3;      // triangulation vertex count, chain arc count
  LengthDistribution lengths;
  OrientationPolicy orientation = OrientationPolicy::kBothDirections;
  std::uint64_t seed = 0;
};

// Vertex (r, c) has id r * cols + c. Arcs of both-direction grids get
// independent lengths; dag-by-coordinate points every arc to the larger id.
PlanarDigraph gen_grid(int rows, int cols, const InstanceSpec& spec);

// Random maximal planar graph: start from a triangle and repeatedly insert a
// vertex into a uniformly chosen face.
PlanarDigraph gen_triangulation(int n, const InstanceSpec& spec);

// Directed chain 0 -> 1 -> ... -> k.
PlanarDigraph gen_chain(int k, const InstanceSpec& spec);

PlanarDigraph generate(const InstanceSpec& spec);

std::string to_string(Family f);
std::string to_string(OrientationPolicy p);
Family parse_family(const std::string& name);
OrientationPolicy parse_orientation(const std::string& name);

// One-line, reproducible description of a spec.
std::string describe(const InstanceSpec& spec);

}  // namespace quasipart
