#pragma once

#include <cstdint>
#include <string_view>

#include "tbdoa/types.hpp"

namespace tbdoa {

// splitmix64 step; used both as an engine seeder and to derive stream seeds.
uint64_t mix_seed(uint64_t state);

// Combine a seed with additional material (trial index, preset name, SNR bits).
uint64_t combine_seed(uint64_t seed, uint64_t extra);
uint64_t combine_seed(uint64_t seed, std::string_view tag);
uint64_t combine_seed(uint64_t seed, double value);

// Deterministic generator with portable uniform/Gaussian output. The raw
// engine is xoshiro-free plain splitmix64 chained state; doubles are built
// from the top 53 bits so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  // Uniform on (0, 1]; never returns 0 so log() is safe.
  double uniform01();

  // Standard real normal via Box-Muller (pairs cached).
  double gaussian();

  // Circular complex Gaussian with E|z|^2 = 1.
  Complex complex_gaussian();

  // Partial Fisher-Yates draw of k distinct indices from [0, n).
  std::vector<int> sample_without_replacement(int n, int k);

 private:
  uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace tbdoa
