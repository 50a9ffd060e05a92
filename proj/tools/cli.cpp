#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "quasipart/decomposition.hpp"
#include "quasipart/errors.hpp"
#include "quasipart/graph_io.hpp"
#include "quasipart/instances.hpp"
#include "quasipart/paths.hpp"
#include "quasipart/verify.hpp"
#include "quasipart/wave.hpp"

namespace quasipart::cli {
namespace {

const char* const kVersion = QUASIPART_VERSION;
const std::vector<std::string> kSuites = {"shock", "pathqp", "wave", "axioms", "bounded", "lipschitz"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFlags {
  std::string graph;
  std::string family = "grid";
  int rows = 8;
  int cols = 8;
  int size = 30;
  int max_length = 10;
  double constant = -1.0;
  std::string orientation = "both";

  void add_to(CLI::App* app) {
    app->add_option("--graph", graph, "Instance file (overrides the generator flags)");
    add_generator(app);
  }
  void add_generator(CLI::App* app) {
    app->add_option("--family", family, "grid | triangulation | chain")
        ->check(CLI::IsMember({"grid", "triangulation", "chain"}))
        ->capture_default_str();
    app->add_option("--rows", rows, "Grid rows")->capture_default_str();
    app->add_option("--cols", cols, "Grid columns")->capture_default_str();
    app->add_option("--size", size, "Triangulation vertices or chain arcs")->capture_default_str();
    app->add_option("--max-length", max_length, "Lengths uniform in [1, L]")->capture_default_str();
    app->add_option("--const-length", constant, "Use this length for every arc");
    app->add_option("--orientation", orientation, "both | single | dag")
        ->check(CLI::IsMember({"both", "single", "dag"}))
        ->capture_default_str();
  }

  InstanceSpec spec(std::uint64_t seed) const {
    InstanceSpec s;
    s.family = parse_family(family);
    s.rows = rows;
    s.cols = cols;
    s.size = size;
    s.lengths = constant >= 0.0 ? LengthDistribution::fixed(constant)
                                : LengthDistribution::uniform(max_length);
    s.orientation = parse_orientation(orientation);
    s.seed = seed;
    return s;
  }

  // Bad generator flags are usage errors, not input errors.
  PlanarDigraph build(std::uint64_t seed) const {
    try {
      return generate(spec(seed));
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }

  PlanarDigraph load(std::uint64_t seed) const {
    if (!graph.empty()) return read_graph_file(graph);
    return build(seed);
  }

  nlohmann::json to_json(std::uint64_t seed) const {
    if (!graph.empty()) return {{"graph", graph}};
    return {{"instance", describe(spec(seed))}};
  }
};

std::string header_lines(const RunConfig& config) {
  return "quasipart " + std::string(kVersion) + "\nconfig " + config.to_json().dump();
}

std::string comment_block(const RunConfig& config) {
  std::string out;
  std::istringstream lines(header_lines(config));
  for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw InputError("cannot write '" + path + "'");
}

double half_diameter(const PlanarDigraph& g) {
  double diameter = 0.0;
  for (const auto& row : all_pairs_distances(g)) {
    for (double d : row) {
      if (d != kInfinity) diameter = std::max(diameter, d);
    }
  }
  return diameter / 2.0;
}

int cmd_generate(const InstanceFlags& flags, RunConfig config, std::ostream& out) {
  const PlanarDigraph g = flags.build(config.seed);
  config.extra = flags.to_json(config.seed);
  std::ostringstream text;
  write_graph(text, g, header_lines(config));
  if (config.output.empty()) {
    out << text.str();
  } else {
    write_text(config.output, text.str());
    out << "wrote " << config.output << " (" << g.vertex_count() << " vertices, "
        << g.arc_count() << " arcs)\n";
  }
  return kPass;
}

int cmd_partition(RunConfig config, const std::string& wave_dump, std::ostream& out) {
  const PlanarDigraph g = read_graph_file(config.input);
  if (!(config.delta > 0.0)) throw UsageError("--delta must be positive");
  PartitionConfig pc;
  pc.c1 = config.c1;
  pc.base_size = config.base_size;
  Rng rng(config.seed);
  const PartitionSample sample = planar_quasipartition(g, config.delta, rng, pc);

  std::map<std::string, std::size_t> counts{{"precut", 0}, {"wave", 0}, {"layer", 0}};
  std::ostringstream text;
  text << comment_block(config);
  for (ArcId a : sample.cutset.ids()) {
    const Provenance& p = sample.provenance[a];
    text << "cut " << a << ' ' << p.label() << '\n';
    ++counts[p.source == CutSource::kPrecut ? "precut" : p.source == CutSource::kWave ? "wave" : "layer"];
  }
  std::ostringstream summary;
  summary << "summary delta=" << format_length(config.delta) << " seed=" << config.seed
          << " vertices=" << g.vertex_count() << " arcs=" << g.arc_count()
          << " cut=" << sample.cutset.size() << " precut=" << counts["precut"]
          << " wave=" << counts["wave"] << " layer=" << counts["layer"]
          << " layers=" << sample.layer_count << " depth=" << sample.max_depth;
  text << summary.str() << '\n';
  if (config.output.empty()) {
    out << text.str();
  } else {
    write_text(config.output, text.str());
    out << summary.str() << '\n';
  }
  if (!wave_dump.empty()) {
    std::ostringstream dump;
    write_wave_dump(dump, sample.waves);
    write_text(wave_dump, dump.str());
  }
  return kPass;
}

// Reads `cut <arc> ...` lines; other lines are ignored.
Cutset read_cutset(const std::string& path, std::size_t arc_count) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Cutset cut(arc_count);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag != "cut") continue;
    long long arc = -1;
    if (!(fields >> arc) || arc < 0 || static_cast<std::size_t>(arc) >= arc_count) {
      throw ParseError(number, "bad arc id in cutset file");
    }
    cut.insert(static_cast<ArcId>(arc));
  }
  return cut;
}

struct VerifyFlags {
  std::vector<std::string> suites;
  std::string cutset;
  std::string out_dir;
  std::string strategy = "id";
  double ball_scale = 0.0;
  std::uint32_t source = 0;
  std::size_t probes = 50;
  double beta_limit = kInfinity;
  unsigned jobs = 1;
};

int cmd_verify(const InstanceFlags& inst, const VerifyFlags& flags, RunConfig config,
               std::ostream& out) {
  std::vector<std::string> suites;
  for (const auto& s : flags.suites) {
    if (s == "all") {
      suites.insert(suites.end(), kSuites.begin(), kSuites.end());
    } else {
      suites.push_back(s);
    }
  }
  if (suites.empty()) throw UsageError("no suite selected");
  std::sort(suites.begin(), suites.end());
  suites.erase(std::unique(suites.begin(), suites.end()), suites.end());

  const PlanarDigraph g = inst.load(config.seed);
  if (config.delta <= 0.0) config.delta = half_diameter(g);
  if (!(config.delta > 0.0)) throw UsageError("--delta must be positive");
  if (config.samples == 0) throw UsageError("--samples must be positive");
  if (config.scope.empty()) config.scope = "arcs";
  const PairScope scope = config.scope == "all-pairs" ? PairScope::kAllPairs : PairScope::kArcs;
  const double ball = flags.ball_scale > 0.0 ? flags.ball_scale : config.delta / 5.0;
  PartitionConfig pc;
  pc.c1 = config.c1;
  pc.base_size = config.base_size;
  config.extra = inst.to_json(config.seed);
  config.extra["suites"] = suites;
  config.extra["strategy"] = flags.strategy;
  config.extra["ball_scale"] = ball;
  config.extra["source"] = flags.source;
  config.extra["probes"] = flags.probes;
  config.extra["cutset"] = flags.cutset;
  if (std::isfinite(flags.beta_limit)) config.extra["beta_limit"] = flags.beta_limit;
  // Jobs only affect speed, so they stay out of the echoed configuration.

  if (!flags.out_dir.empty()) std::filesystem::create_directories(flags.out_dir);
  const auto artifact = [&](const std::string& name, const nlohmann::json& summary,
                            const std::vector<FrequencyRow>* rows) {
    nlohmann::json doc;
    doc["version"] = kVersion;
    doc["config"] = config.to_json();
    doc["check"] = name;
    doc["result"] = summary;
    if (flags.out_dir.empty()) return;
    const std::filesystem::path dir(flags.out_dir);
    write_text((dir / (name + ".json")).string(), doc.dump(2) + "\n");
    if (rows != nullptr) {
      std::ostringstream csv;
      csv << comment_block(config);
      write_csv(csv, *rows);
      write_text((dir / (name + ".csv")).string(), csv.str());
    }
  };

  bool all_pass = true;
  const auto verdict = [&](const std::string& name, bool pass, const std::string& detail) {
    out << (pass ? "PASS " : "FAIL ") << name << ' ' << detail << '\n';
    all_pass = all_pass && pass;
  };

  for (const std::string& suite : suites) {
    if (suite == "shock") {
      ShockStrategy strategy;
      if (flags.strategy == "id") {
        strategy = id_order_strategy(g.vertex_count());
      } else if (flags.strategy == "nearest") {
        strategy = nearest_unmarked_strategy(g);
      } else if (flags.strategy == "reverse") {
        std::vector<VertexId> order(g.vertex_count());
        for (VertexId v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(order.size() - 1 - v);
        strategy = order_strategy(std::move(order));
      } else {
        throw UsageError("unknown strategy '" + flags.strategy + "'");
      }
      const auto r = check_shock_lemma(g, config.delta, strategy, config.samples, config.seed, flags.jobs);
      artifact("shock", to_json(r), &r.arcs);
      verdict("shock", r.pass, "offenders=" + std::to_string(r.offenders));
    } else if (suite == "pathqp") {
      Rng pick = Rng(config.seed).split("path");
      const VertexId u = static_cast<VertexId>(pick.below(g.vertex_count()));
      const ShortestPathTree tree = shortest_path_tree(g, u);
      std::vector<VertexId> ends;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v != u && tree.reached(v)) ends.push_back(v);
      }
      const VertexId v = ends.empty() ? u : ends[pick.below(ends.size())];
      const DirectedPath q = tree_path(g, tree, v);
      const auto r = check_pathqp_lemma(g, q, ball, config.samples, config.seed, flags.jobs);
      auto summary = to_json(r);
      summary["path"] = q.vertices;
      summary["path_length"] = q.length;
      artifact("pathqp", summary, &r.arcs);
      verdict("pathqp", r.pass,
              "offenders=" + std::to_string(r.offenders) +
                  " pair_violations=" + std::to_string(r.pair_violations));
    } else if (suite == "wave") {
      const auto r = check_wave_lemma(g, flags.source, config.delta, config.samples, config.seed,
                                      flags.probes, flags.jobs);
      artifact("wave", to_json(r), &r.arcs);
      verdict("wave", r.pass,
              "offenders=" + std::to_string(r.offenders) +
                  " spread=" + std::to_string(r.spread_violations) +
                  " contiguity=" + std::to_string(r.contiguity_violations) +
                  " layering=" + std::to_string(r.layering_violations));
    } else if (suite == "axioms") {
      std::size_t failures = 0;
      for (std::size_t k = 0; k < config.samples; ++k) {
        const auto sample = sample_at(g, config.delta, config.seed, k, pc);
        if (!check_quasipartition_axioms(g, sample.cutset).pass) ++failures;
      }
      artifact("axioms", {{"pass", failures == 0}, {"samples", config.samples}, {"failures", failures}},
               nullptr);
      verdict("axioms", failures == 0, "failures=" + std::to_string(failures));
    } else if (suite == "bounded") {
      const auto dist = all_pairs_distances(g);
      nlohmann::json summary;
      BoundednessReport first_failure;
      std::size_t failures = 0;
      if (!flags.cutset.empty()) {
        first_failure = check_bounded(g, dist, read_cutset(flags.cutset, g.arc_count()), config.delta);
        failures = first_failure.pass ? 0 : 1;
        summary = to_json(first_failure);
      } else {
        for (std::size_t k = 0; k < config.samples; ++k) {
          const auto sample = sample_at(g, config.delta, config.seed, k, pc);
          const auto r = check_bounded(g, dist, sample.cutset, config.delta);
          if (!r.pass && failures++ == 0) first_failure = r;
        }
        summary = {{"pass", failures == 0}, {"samples", config.samples}, {"failures", failures}};
        if (failures > 0) summary["first_failure"] = to_json(first_failure);
      }
      artifact("bounded", summary, nullptr);
      std::string detail = "failures=" + std::to_string(failures);
      if (failures > 0) {
        detail += " witness=(" + std::to_string(first_failure.u) + "," +
                  std::to_string(first_failure.v) + ") d=" + format_length(first_failure.distance);
      }
      verdict("bounded", failures == 0, detail);
    } else if (suite == "lipschitz") {
      const auto r = estimate_lipschitz(g, config.delta, named_sampler("planar", g, config.delta, config.seed, pc),
                                        config.samples, scope, flags.beta_limit, flags.jobs);
      artifact("lipschitz", to_json(r), &r.pairs);
      verdict("lipschitz", r.pass,
              "beta_hat=" + format_length(r.beta_hat) + " ci=" + format_length(r.beta_ci));
    } else {
      throw UsageError("unknown suite '" + suite + "'");
    }
  }
  return all_pass ? kPass : kCheckFailed;
}

int cmd_bench(const std::vector<std::size_t>& sizes, const InstanceFlags& inst, unsigned jobs,
              RunConfig config, std::ostream& out) {
  if (sizes.empty()) throw UsageError("no sizes given");
  if (config.samples == 0) throw UsageError("--samples must be positive");
  PartitionConfig pc;
  pc.c1 = config.c1;
  pc.base_size = config.base_size;
  config.extra["sizes"] = sizes;
  config.extra["max_length"] = inst.max_length;
  config.extra["orientation"] = inst.orientation;
  config.scope = "all-pairs";

  std::ostringstream csv;
  csv << comment_block(config);
  csv << "n,delta,beta_hat,beta_ci,beta_over_ln2,beta_over_1pln2\n";
  for (std::size_t n : sizes) {
    const auto side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
    if (side < 2 || static_cast<std::size_t>(side) * side != n) {
      throw UsageError("size " + std::to_string(n) + " is not a square of at least 4");
    }
    InstanceFlags grid = inst;
    grid.family = "grid";
    grid.rows = grid.cols = side;
    const PlanarDigraph g = grid.build(config.seed);
    const double delta = half_diameter(g);
    const auto r = estimate_lipschitz(g, delta, named_sampler("planar", g, delta, config.seed, pc),
                                      config.samples, PairScope::kAllPairs, kInfinity, jobs);
    const double ln = std::log(static_cast<double>(n));
    csv << n << ',' << format_length(delta) << ',' << format_length(r.beta_hat) << ','
        << format_length(r.beta_ci) << ',' << format_length(r.beta_hat / (ln * ln)) << ','
        << format_length(r.beta_hat / ((1.0 + ln) * (1.0 + ln))) << '\n';
  }
  if (config.output.empty()) {
    out << csv.str();
  } else {
    write_text(config.output, csv.str());
    out << "wrote " << config.output << '\n';
  }
  return kPass;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  if (!input.empty()) j["input"] = input;
  if (delta > 0.0) j["delta"] = delta;
  j["seed"] = seed;
  if (samples > 0) j["samples"] = samples;
  j["c1"] = c1;
  j["base_size"] = base_size;
  if (!scope.empty()) j["scope"] = scope;
  if (!dumps.empty()) j["dumps"] = dumps;
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sample and verify random quasipartitions of planar digraphs", "qpart"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig config;
  InstanceFlags inst;
  VerifyFlags vflags;
  std::string wave_dump;
  std::vector<std::size_t> sizes;
  unsigned bench_jobs = 1;
  std::size_t verify_samples = 200;
  std::size_t bench_samples = 1000;

  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  inst.add_generator(gen);
  gen->add_option("--seed", config.seed, "Random seed");
  gen->add_option("-o,--output", config.output, "Output file (stdout when omitted)");

  auto* part = app.add_subcommand("partition", "Sample one quasipartition of an instance");
  part->add_option("graph", config.input, "Instance file")->required();
  part->add_option("--delta", config.delta, "Boundedness scale")->required();
  part->add_option("--seed", config.seed, "Random seed");
  part->add_option("--c1", config.c1, "Ball scale divisor")->capture_default_str();
  part->add_option("--base-size", config.base_size, "Recursion base case size")->capture_default_str();
  part->add_option("-o,--output", config.output, "Cutset file (stdout when omitted)");
  part->add_option("--dump-wave", wave_dump, "Write the sampled waves as JSON");

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  inst.add_to(ver);
  ver->add_option("--suite", vflags.suites, "shock | pathqp | wave | axioms | bounded | lipschitz | all")
      ->delimiter(',');
  ver->add_option("--delta", config.delta, "Scale (default: half the diameter)");
  ver->add_option("--seed", config.seed, "Random seed");
  ver->add_option("-N,--samples", verify_samples, "Samples per check")->capture_default_str();
  ver->add_option("--c1", config.c1, "Ball scale divisor")->capture_default_str();
  ver->add_option("--base-size", config.base_size, "Recursion base case size")->capture_default_str();
  ver->add_option("--scope", config.scope, "Lipschitz pairs: arcs | all-pairs")
      ->check(CLI::IsMember({"arcs", "all-pairs"}));
  ver->add_option("--cutset", vflags.cutset, "Check this cutset file instead of sampling");
  ver->add_option("--out-dir", vflags.out_dir, "Directory for CSV and JSON reports");
  ver->add_option("--strategy", vflags.strategy, "Shock centers: id | nearest | reverse")
      ->capture_default_str();
  ver->add_option("--ball-scale", vflags.ball_scale, "Path quasipartition ball scale (default delta/5)");
  ver->add_option("--source", vflags.source, "Wave source")->capture_default_str();
  ver->add_option("--probes", vflags.probes, "Probed paths per wave sample")->capture_default_str();
  ver->add_option("--beta-limit", vflags.beta_limit, "Lipschitz constant to test against");
  ver->add_option("--jobs", vflags.jobs, "Worker threads")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Lipschitz constant growth on square grids");
  bench->add_option("--sizes", sizes, "Vertex counts (perfect squares)")->delimiter(',')->required();
  bench->add_option("-N,--samples", bench_samples, "Samples per size")->capture_default_str();
  bench->add_option("--seed", config.seed, "Random seed");
  bench->add_option("--c1", config.c1, "Ball scale divisor")->capture_default_str();
  bench->add_option("--base-size", config.base_size, "Recursion base case size")->capture_default_str();
  bench->add_option("--max-length", inst.max_length, "Lengths uniform in [1, L]")->capture_default_str();
  bench->add_option("--orientation", inst.orientation, "both | single | dag")
      ->check(CLI::IsMember({"both", "single", "dag"}))
      ->capture_default_str();
  bench->add_option("-o,--output", config.output, "CSV file (stdout when omitted)");
  bench->add_option("--jobs", bench_jobs, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*gen) {
      config.command = "generate";
      return cmd_generate(inst, config, out);
    }
    if (*part) {
      config.command = "partition";
      if (!wave_dump.empty()) config.dumps.push_back("wave:" + wave_dump);
      return cmd_partition(config, wave_dump, out);
    }
    if (*ver) {
      config.command = "verify";
      config.input = inst.graph;
      config.samples = verify_samples;
      return cmd_verify(inst, vflags, config, out);
    }
    config.command = "bench";
    config.samples = bench_samples;
    return cmd_bench(sizes, inst, bench_jobs, config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qpart"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace quasipart::cli
