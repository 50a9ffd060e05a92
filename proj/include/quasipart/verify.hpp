#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quasipart/decomposition.hpp"
#include "quasipart/graph.hpp"
#include "quasipart/shock.hpp"

namespace quasipart {

// Three binomial standard errors around p_bar = min(1, bound).
double confidence_radius(double bound, std::size_t samples);

// One row of a frequency table: how often an arc (or ordered pair) was hit
// over `samples` runs, against `bound` with confidence radius `ci`.
struct FrequencyRow {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  ArcId arc = kNoArc;
  double distance = 0.0;
  std::size_t hits = 0;
  std::size_t samples = 0;
  double frequency = 0.0;
  double bound = 0.0;
  double ci = 0.0;
  bool pass = true;
};

void write_csv(std::ostream& out, const std::vector<FrequencyRow>& rows);

struct BoundednessReport {
  bool pass = true;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  double distance = 0.0;
  double bound = 0.0;
};

// Exact: every (u, v) with v reachable from u in g - f has d_g(u, v) <= bound.
BoundednessReport check_bounded(const PlanarDigraph& g, const Cutset& f, double bound);
// Same with a precomputed distance matrix of g.
BoundednessReport check_bounded(const PlanarDigraph& g,
                                const std::vector<std::vector<double>>& dist, const Cutset& f,
                                double bound);

enum class PairScope { kArcs, kAllPairs };

// Produces the cutset of sample k.
using CutSampler = std::function<Cutset(std::size_t k)>;

struct LipschitzReport {
  double delta = 0.0;
  std::size_t samples = 0;
  PairScope scope = PairScope::kArcs;
  // Pairs with 0 < d <= delta; frequency = share of samples separating them.
  std::vector<FrequencyRow> pairs;
  // max frequency * delta / d, its pair, and 3 standard errors on it.
  double beta_hat = 0.0;
  std::size_t worst = static_cast<std::size_t>(-1);
  double beta_ci = 0.0;
  double beta_limit = 0.0;
  bool pass = true;
};

// Pairs are judged against beta_limit * d / delta plus the confidence
// radius; beta_limit = infinity only reports.
LipschitzReport estimate_lipschitz(const PlanarDigraph& g, double delta, const CutSampler& sampler,
                                   std::size_t samples, PairScope scope,
                                   double beta_limit = kInfinity, unsigned jobs = 1);

// Samplers by name: "planar" runs the full quasipartition, "wave" a single
// wave per component. Sample k uses Rng(seed).split(k).
CutSampler named_sampler(const std::string& name, const PlanarDigraph& g, double delta,
                         std::uint64_t seed, const PartitionConfig& config = {});

struct ShockLemmaReport {
  bool pass = true;
  std::vector<FrequencyRow> arcs;
  std::size_t offenders = 0;
};

// Per-arc cut frequency <= 2 d / delta + ci for the given strategy.
ShockLemmaReport check_shock_lemma(const PlanarDigraph& h, double delta,
                                   const ShockStrategy& strategy, std::size_t samples,
                                   std::uint64_t seed, unsigned jobs = 1);

struct PathQPLemmaReport {
  bool pass = true;
  // Part one: per-arc cut frequency against 4 d / ball scale.
  std::vector<FrequencyRow> arcs;
  std::size_t offenders = 0;
  // Part two: pairs joined through the path with distance above the bound.
  double pair_bound = 0.0;
  std::size_t pair_violations = 0;
  double worst_pair_distance = 0.0;
  // Exact structural facts checked in every sample.
  std::size_t return_violations = 0;
  std::size_t portal_violations = 0;
};

PathQPLemmaReport check_pathqp_lemma(const PlanarDigraph& h, const DirectedPath& q,
                                     double ball_scale, std::size_t samples,
                                     std::uint64_t seed, unsigned jobs = 1);

struct WaveLemmaReport {
  bool pass = true;
  // Part one: per-arc cut frequency against 2 d / delta.
  std::vector<FrequencyRow> arcs;
  std::size_t offenders = 0;
  // Part two: probed paths of length <= delta.
  std::size_t probes = 0;
  std::size_t spread_violations = 0;      // paths of g outside three layers
  std::size_t contiguity_violations = 0;  // paths of g - cut not in <= 3 runs
  // Part three: layers failing the layered check at 3 delta.
  std::size_t layers = 0;
  std::size_t layering_violations = 0;
};

WaveLemmaReport check_wave_lemma(const PlanarDigraph& g, VertexId source, double delta,
                                 std::size_t samples, std::uint64_t seed,
                                 std::size_t probes_per_sample = 50, unsigned jobs = 1);

struct AxiomReport {
  bool pass = true;
  bool reflexive = true;
  bool transitive = true;
  std::size_t pairs = 0;
};

// Materializes the relation of g - f (at most 64 vertices) and compares it
// with its reflexive transitive closure.
AxiomReport check_quasipartition_axioms(const PlanarDigraph& g, const Cutset& f);

nlohmann::json to_json(const FrequencyRow& row);
nlohmann::json to_json(const BoundednessReport& report);
nlohmann::json to_json(const LipschitzReport& report);
nlohmann::json to_json(const ShockLemmaReport& report);
nlohmann::json to_json(const PathQPLemmaReport& report);
nlohmann::json to_json(const WaveLemmaReport& report);
nlohmann::json to_json(const AxiomReport& report);

}  // namespace quasipart
