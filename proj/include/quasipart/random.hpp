#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace quasipart {

// Seeded random stream. Every sampler takes one of these by reference and
// derives sub-streams with split(), so results depend only on the root seed
// and the (deterministic) order of split keys, never on thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Independent child stream keyed by an integer or a name. Splitting does
  // not advance this stream.
  Rng split(std::uint64_t key) const;
  Rng split(std::string_view name) const;

  std::uint64_t next();
  // Uniform double in [0, 1) with 53 random bits.
  double uniform();
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace quasipart
