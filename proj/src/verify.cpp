#include "quasipart/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "quasipart/embedding.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/graph_io.hpp"
#include "quasipart/parallel.hpp"
#include "quasipart/path_qp.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/relation.hpp"
#include "quasipart/wave.hpp"

namespace quasipart {
namespace {

// Integer tallies summed over samples. Samples are split into contiguous
// chunks, one per job, and chunk tallies are added afterwards, so the
// result does not depend on the number of jobs.
struct Tally {
  std::vector<std::size_t> hits;
  std::vector<std::size_t> events;
  double maximum = 0.0;

  Tally(std::size_t width, std::size_t event_count) : hits(width, 0), events(event_count, 0) {}

  void add(const Tally& other) {
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += other.hits[i];
    for (std::size_t i = 0; i < events.size(); ++i) events[i] += other.events[i];
    maximum = std::max(maximum, other.maximum);
  }
};

template <typename Fn>
Tally tally(std::size_t samples, std::size_t width, std::size_t event_count, unsigned jobs,
            Fn&& fn) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, samples));
  std::vector<Tally> parts(chunks, Tally(width, event_count));
  parallel_for(chunks, static_cast<unsigned>(chunks), [&](std::size_t c) {
    const std::size_t lo = samples * c / chunks;
    const std::size_t hi = samples * (c + 1) / chunks;
    for (std::size_t k = lo; k < hi; ++k) fn(k, parts[c]);
  });
  Tally total(width, event_count);
  for (const Tally& part : parts) total.add(part);
  return total;
}

FrequencyRow arc_row(const PlanarDigraph& g, ArcId a, double distance, std::size_t hits,
                     std::size_t samples, double bound) {
  FrequencyRow row;
  row.u = g.arc(a).tail;
  row.v = g.arc(a).head;
  row.arc = a;
  row.distance = distance;
  row.hits = hits;
  row.samples = samples;
  row.frequency = static_cast<double>(hits) / static_cast<double>(samples);
  row.bound = bound;
  row.ci = confidence_radius(bound, samples);
  row.pass = row.frequency <= bound + row.ci;
  return row;
}

std::vector<double> arc_distances(const PlanarDigraph& g) {
  std::vector<double> d(g.arc_count());
  std::map<VertexId, std::vector<ArcId>> by_tail;
  for (ArcId a = 0; a < g.arc_count(); ++a) by_tail[g.arc(a).tail].push_back(a);
  for (const auto& [tail, arcs] : by_tail) {
    const ShortestPathTree tree = shortest_path_tree(g, tail);
    for (ArcId a : arcs) d[a] = tree.dist[g.arc(a).head];
  }
  return d;
}

}  // namespace

double confidence_radius(double bound, std::size_t samples) {
  if (samples == 0) return kInfinity;
  const double p = std::clamp(bound, 0.0, 1.0);
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

void write_csv(std::ostream& out, const std::vector<FrequencyRow>& rows) {
  out << "u,v,arc,d,p_hat,hits,samples,bound,ci,pass\n";
  for (const auto& r : rows) {
    out << r.u << ',' << r.v << ',';
    if (r.arc != kNoArc) out << r.arc;
    out << ',' << format_length(r.distance) << ',' << format_length(r.frequency) << ','
        << r.hits << ',' << r.samples << ',' << format_length(r.bound) << ','
        << format_length(r.ci) << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

BoundednessReport check_bounded(const PlanarDigraph& g, const Cutset& f, double bound) {
  return check_bounded(g, all_pairs_distances(g), f, bound);
}

BoundednessReport check_bounded(const PlanarDigraph& g,
                                const std::vector<std::vector<double>>& dist, const Cutset& f,
                                double bound) {
  BoundednessReport report;
  report.bound = bound;
  SearchOptions options;
  options.removed = &f;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const std::vector<char> reach = reachable(g, std::span<const VertexId>(&u, 1), options);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (reach[v] && dist[u][v] > bound) {
        report.pass = false;
        report.u = u;
        report.v = v;
        report.distance = dist[u][v];
        return report;
      }
    }
  }
  return report;
}

LipschitzReport estimate_lipschitz(const PlanarDigraph& g, double delta, const CutSampler& sampler,
                                   std::size_t samples, PairScope scope, double beta_limit,
                                   unsigned jobs) {
  if (samples == 0) throw ParameterError("at least one sample is required");
  const std::size_t n = g.vertex_count();
  LipschitzReport report;
  report.delta = delta;
  report.samples = samples;
  report.scope = scope;
  report.beta_limit = beta_limit;

  // Candidate pairs grouped by source.
  std::vector<std::vector<std::pair<VertexId, double>>> targets(n);
  if (scope == PairScope::kArcs) {
    const std::vector<double> d = arc_distances(g);
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      const VertexId u = g.arc(a).tail, v = g.arc(a).head;
      if (!(d[a] > 0.0) || d[a] > delta) continue;
      bool duplicate = false;
      for (const auto& [t, w] : targets[u]) duplicate = duplicate || t == v;
      if (!duplicate) targets[u].push_back({v, d[a]});
    }
  } else {
    for (VertexId u = 0; u < n; ++u) {
      const ShortestPathTree tree = shortest_path_tree(g, u);
      for (VertexId v = 0; v < n; ++v) {
        if (tree.dist[v] > 0.0 && tree.dist[v] <= delta) targets[u].push_back({v, tree.dist[v]});
      }
    }
  }
  std::vector<std::size_t> offset(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) offset[u + 1] = offset[u] + targets[u].size();

  const Tally counts = tally(samples, offset[n], 0, jobs, [&](std::size_t k, Tally& t) {
    const Cutset f = sampler(k);
    SearchOptions options;
    options.removed = &f;
    for (VertexId u = 0; u < n; ++u) {
      if (targets[u].empty()) continue;
      const std::vector<char> reach = reachable(g, std::span<const VertexId>(&u, 1), options);
      for (std::size_t j = 0; j < targets[u].size(); ++j) {
        if (!reach[targets[u][j].first]) ++t.hits[offset[u] + j];
      }
    }
  });

  std::map<std::pair<VertexId, VertexId>, ArcId> arc_of;
  if (scope == PairScope::kArcs) {
    for (ArcId a = g.arc_count(); a-- > 0;) arc_of[{g.arc(a).tail, g.arc(a).head}] = a;
  }
  for (VertexId u = 0; u < n; ++u) {
    for (std::size_t j = 0; j < targets[u].size(); ++j) {
      const auto [v, d] = targets[u][j];
      FrequencyRow row;
      row.u = u;
      row.v = v;
      if (scope == PairScope::kArcs) row.arc = arc_of[{u, v}];
      row.distance = d;
      row.hits = counts.hits[offset[u] + j];
      row.samples = samples;
      row.frequency = static_cast<double>(row.hits) / static_cast<double>(samples);
      row.bound = beta_limit * d / delta;
      row.ci = confidence_radius(row.bound, samples);
      row.pass = row.frequency <= row.bound + row.ci;
      report.pass = report.pass && row.pass;
      const double beta = row.frequency * delta / d;
      if (report.worst == static_cast<std::size_t>(-1) || beta > report.beta_hat) {
        report.beta_hat = beta;
        report.worst = report.pairs.size();
        const double p = row.frequency;
        report.beta_ci = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) * delta / d;
      }
      report.pairs.push_back(row);
    }
  }
  return report;
}

CutSampler named_sampler(const std::string& name, const PlanarDigraph& g, double delta,
                         std::uint64_t seed, const PartitionConfig& config) {
  const PlanarDigraph* graph = &g;
  if (name == "planar") {
    return [graph, delta, seed, config](std::size_t k) {
      return sample_at(*graph, delta, seed, k, config).cutset;
    };
  }
  if (name == "wave") {
    return [graph, delta, seed](std::size_t k) {
      Cutset cut(graph->arc_count());
      for (ArcId a = 0; a < graph->arc_count(); ++a) {
        if (graph->arc(a).length > delta) cut.insert(a);
      }
      const Minor base = delete_arcs(*graph, cut);
      Rng rng = Rng(seed).split(static_cast<std::uint64_t>(k));
      for (const auto& wave : sample_waves(base.graph, delta, rng)) {
        for (ArcId a : wave.cut.ids()) cut.insert(base.arc_origin[a]);
      }
      return cut;
    };
  }
  throw InputError("unknown sampler '" + name + "'");
}

ShockLemmaReport check_shock_lemma(const PlanarDigraph& h, double delta,
                                   const ShockStrategy& strategy, std::size_t samples,
                                   std::uint64_t seed, unsigned jobs) {
  if (samples == 0) throw ParameterError("at least one sample is required");
  const std::vector<double> d = arc_distances(h);
  const Tally counts = tally(samples, h.arc_count(), 0, jobs, [&](std::size_t k, Tally& t) {
    Rng rng = Rng(seed).split(static_cast<std::uint64_t>(k));
    const ShockResult shock = sample_shock(h, delta, strategy, rng);
    for (ArcId a : shock.cutset.ids()) ++t.hits[a];
  });
  ShockLemmaReport report;
  for (ArcId a = 0; a < h.arc_count(); ++a) {
    report.arcs.push_back(arc_row(h, a, d[a], counts.hits[a], samples, 2.0 * d[a] / delta));
    if (!report.arcs.back().pass) ++report.offenders;
  }
  report.pass = report.offenders == 0;
  return report;
}

PathQPLemmaReport check_pathqp_lemma(const PlanarDigraph& h, const DirectedPath& q,
                                     double ball_scale, std::size_t samples,
                                     std::uint64_t seed, unsigned jobs) {
  if (samples == 0) throw ParameterError("at least one sample is required");
  if (q.empty() || !is_shortest_path(h, q)) throw PreconditionError("path is not a shortest path");
  const std::size_t n = h.vertex_count();
  const auto dist = all_pairs_distances(h);
  const std::vector<double> d = arc_distances(h);
  PathQPLemmaReport report;
  const double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
  report.pair_bound = 2.0 * q.length + 2.0 * ball_scale * ln_n + 2.0 * ball_scale;

  enum { kPairs, kReturn, kPortal };
  const Tally counts = tally(samples, h.arc_count(), 3, jobs, [&](std::size_t k, Tally& t) {
    Rng rng = Rng(seed).split(static_cast<std::uint64_t>(k));
    const PathQPResult qp = path_quasipartition(h, q, ball_scale, rng, false);
    for (ArcId a : qp.cutset.ids()) ++t.hits[a];

    // Pairs joined by a surviving path through a path vertex.
    bool violated = false;
    for (VertexId z : q.vertices) {
      SearchOptions options;
      options.removed = &qp.cutset;
      options.orientation = Orientation::kReverse;
      const auto into = reachable(h, std::span<const VertexId>(&z, 1), options);
      options.orientation = Orientation::kForward;
      const auto from = reachable(h, std::span<const VertexId>(&z, 1), options);
      for (VertexId x = 0; x < n; ++x) {
        if (!into[x]) continue;
        for (VertexId y = 0; y < n; ++y) {
          if (!from[y]) continue;
          t.maximum = std::max(t.maximum, dist[x][y]);
          if (dist[x][y] > report.pair_bound) violated = true;
        }
      }
    }
    if (violated) ++t.events[kPairs];

    // Nothing outside a prefix of the in-balls reaches into it.
    std::vector<VertexId> prefix;
    std::vector<char> in_prefix(n, 0);
    bool leaked = false;
    for (const auto& cluster : qp.toward.clusters) {
      for (VertexId v : cluster) {
        prefix.push_back(v);
        in_prefix[v] = 1;
      }
      SearchOptions options;
      options.removed = &qp.toward.cutset;
      options.orientation = Orientation::kReverse;
      const auto back = reachable(h, prefix, options);
      for (VertexId v = 0; v < n; ++v) leaked = leaked || (back[v] && !in_prefix[v]);
    }
    if (leaked) ++t.events[kReturn];

    bool misplaced = false;
    for (std::size_t j = 0; j < q.vertices.size(); ++j) {
      misplaced = misplaced || qp.toward_portal[j] > j || qp.away_portal[j] < j;
    }
    for (VertexId c : qp.away.centers) misplaced = misplaced || portal_of(qp, c, PortalSide::kAway) != c;
    for (VertexId c : qp.toward.centers) {
      misplaced = misplaced || portal_of(qp, c, PortalSide::kToward) != c;
    }
    if (misplaced) ++t.events[kPortal];
  });

  for (ArcId a = 0; a < h.arc_count(); ++a) {
    report.arcs.push_back(arc_row(h, a, d[a], counts.hits[a], samples, 4.0 * d[a] / ball_scale));
    if (!report.arcs.back().pass) ++report.offenders;
  }
  report.pair_violations = counts.events[kPairs];
  report.return_violations = counts.events[kReturn];
  report.portal_violations = counts.events[kPortal];
  report.worst_pair_distance = counts.maximum;
  report.pass = report.offenders == 0 && report.pair_violations == 0 &&
                report.return_violations == 0 && report.portal_violations == 0;
  return report;
}

WaveLemmaReport check_wave_lemma(const PlanarDigraph& g, VertexId source, double delta,
                                 std::size_t samples, std::uint64_t seed,
                                 std::size_t probes_per_sample, unsigned jobs) {
  if (samples == 0) throw ParameterError("at least one sample is required");
  const std::vector<double> d = arc_distances(g);
  const std::size_t n = g.vertex_count();

  enum { kProbes, kSpread, kContiguity, kLayers, kLayering };
  const Tally counts = tally(samples, g.arc_count(), 5, jobs, [&](std::size_t k, Tally& t) {
    const Rng base = Rng(seed).split(static_cast<std::uint64_t>(k));
    Rng wave_rng = base.split("wave");
    Rng probe_rng = base.split("probes");
    const WaveDecomposition wave = sample_wave(g, source, delta, wave_rng);
    for (ArcId a : wave.cut.ids()) ++t.hits[a];

    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (wave.layer_of[v] != kNoLayer) members.push_back(v);
    }
    // Even probes walk g, odd probes walk g minus the wave cut.
    for (std::size_t p = 0; p < probes_per_sample; ++p) {
      const bool survives = p % 2 == 1;
      const VertexId u = members[probe_rng.below(members.size())];
      SearchOptions options;
      options.radius = delta;
      if (survives) options.removed = &wave.cut;
      const ShortestPathTree tree = shortest_path_tree(g, u, options);
      std::vector<VertexId> ends;
      for (VertexId v = 0; v < n; ++v) {
        if (v != u && tree.reached(v)) ends.push_back(v);
      }
      const VertexId v = ends.empty() ? u : ends[probe_rng.below(ends.size())];
      const DirectedPath path = tree_path(g, tree, v);
      const PathLayers located = path_layers(wave, path);
      ++t.events[kProbes];
      if (!located.within_three) ++t.events[kSpread];
      if (survives && (!located.contiguous || located.pieces.size() > 3)) ++t.events[kContiguity];
    }

    for (std::size_t i = 0; i < wave.layer_count(); ++i) {
      const LayerGraph layer = extract_layer(g, wave, i);
      ++t.events[kLayers];
      if (!check_layered(layer.graph(), layer.root, 1, 3.0 * delta).layered) ++t.events[kLayering];
    }
  });

  WaveLemmaReport report;
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    report.arcs.push_back(arc_row(g, a, d[a], counts.hits[a], samples, 2.0 * d[a] / delta));
    if (!report.arcs.back().pass) ++report.offenders;
  }
  report.probes = counts.events[kProbes];
  report.spread_violations = counts.events[kSpread];
  report.contiguity_violations = counts.events[kContiguity];
  report.layers = counts.events[kLayers];
  report.layering_violations = counts.events[kLayering];
  report.pass = report.offenders == 0 && report.spread_violations == 0 &&
                report.contiguity_violations == 0 && report.layering_violations == 0;
  return report;
}

AxiomReport check_quasipartition_axioms(const PlanarDigraph& g, const Cutset& f) {
  const std::size_t n = g.vertex_count();
  const Quasipartition q(g, f, 0.0);
  const auto pairs = materialize_relation(q);
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : pairs) rel[u][v] = 1;
  AxiomReport report;
  report.pairs = pairs.size();
  for (VertexId v = 0; v < n; ++v) report.reflexive = report.reflexive && rel[v][v];
  auto closure = rel;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!closure[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (closure[k][j]) closure[i][j] = 1;
      }
    }
  }
  report.transitive = closure == rel;
  report.pass = report.reflexive && report.transitive;
  return report;
}

nlohmann::json to_json(const FrequencyRow& row) {
  nlohmann::json j;
  j["u"] = row.u;
  j["v"] = row.v;
  if (row.arc != kNoArc) j["arc"] = row.arc;
  j["d"] = row.distance;
  j["p_hat"] = row.frequency;
  j["hits"] = row.hits;
  j["samples"] = row.samples;
  j["bound"] = row.bound;
  j["ci"] = row.ci;
  j["pass"] = row.pass;
  return j;
}

nlohmann::json to_json(const BoundednessReport& report) {
  nlohmann::json j;
  j["pass"] = report.pass;
  j["bound"] = report.bound;
  if (!report.pass) {
    j["witness"] = {{"u", report.u}, {"v", report.v}, {"d", report.distance}};
  }
  return j;
}

nlohmann::json to_json(const LipschitzReport& report) {
  nlohmann::json j;
  j["pass"] = report.pass;
  j["delta"] = report.delta;
  j["samples"] = report.samples;
  j["scope"] = report.scope == PairScope::kArcs ? "arcs" : "all-pairs";
  j["pairs"] = report.pairs.size();
  j["beta_hat"] = report.beta_hat;
  j["beta_ci"] = report.beta_ci;
  if (std::isfinite(report.beta_limit)) j["beta_limit"] = report.beta_limit;
  if (report.worst < report.pairs.size()) j["worst"] = to_json(report.pairs[report.worst]);
  return j;
}

nlohmann::json to_json(const ShockLemmaReport& report) {
  return {{"pass", report.pass}, {"arcs", report.arcs.size()}, {"offenders", report.offenders}};
}

nlohmann::json to_json(const PathQPLemmaReport& report) {
  return {{"pass", report.pass},
          {"arcs", report.arcs.size()},
          {"offenders", report.offenders},
          {"pair_bound", report.pair_bound},
          {"worst_pair_distance", report.worst_pair_distance},
          {"pair_violations", report.pair_violations},
          {"return_violations", report.return_violations},
          {"portal_violations", report.portal_violations}};
}

nlohmann::json to_json(const WaveLemmaReport& report) {
  return {{"pass", report.pass},
          {"arcs", report.arcs.size()},
          {"offenders", report.offenders},
          {"probes", report.probes},
          {"spread_violations", report.spread_violations},
          {"contiguity_violations", report.contiguity_violations},
          {"layers", report.layers},
          {"layering_violations", report.layering_violations}};
}

nlohmann::json to_json(const AxiomReport& report) {
  return {{"pass", report.pass},
          {"reflexive", report.reflexive},
          {"transitive", report.transitive},
          {"pairs", report.pairs}};
}

}  // namespace quasipart
