#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace quasipart::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kIoError = 3 };

// Everything needed to rerun a command; echoed into every output file. The
// output path is left out of the echo so the same run gives the same bytes
// wherever it is written.
struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double c1 = 8.0;
  std::size_t base_size = 3;
  std::string scope;
  std::vector<std::string> dumps;
  // Command specific settings (instance flags, suites, sizes, ...).
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
};

// Runs `qpart` with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasipart::cli
