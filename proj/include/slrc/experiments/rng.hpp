#pragma once

#include <cstdint>

namespace slrc::experiments {

/// splitmix64 step; used to expand seeds into generator state.
std::uint64_t splitmix64(std::uint64_t& state);

/// xoshiro256** with a portable uniform conversion, so a seed reproduces the
/// same draws on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// The generator for stream `index` of a seed: trial i of an experiment
  /// always uses stream(seed, i), independent of scheduling.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::uint64_t s_[4];
};

}  // namespace slrc::experiments
