#include "tbdoa/rng.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tbdoa {

uint64_t mix_seed(uint64_t state) {
  uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t combine_seed(uint64_t seed, uint64_t extra) { return mix_seed(seed ^ mix_seed(extra)); }

uint64_t combine_seed(uint64_t seed, std::string_view tag) {
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return combine_seed(seed, h);
}

uint64_t combine_seed(uint64_t seed, double value) {
  return combine_seed(seed, std::bit_cast<uint64_t>(value));
}

uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform01()));
  const double t = 2.0 * kPi * uniform01();
  cached_ = r * std::sin(t);
  have_cached_ = true;
  return r * std::cos(t);
}

Complex Rng::complex_gaussian() {
  const double r = std::sqrt(-std::log(uniform01()));
  const double t = 2.0 * kPi * uniform01();
  return Complex{r * std::cos(t), r * std::sin(t)};
}

std::vector<int> Rng::sample_without_replacement(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sample_without_replacement: k out of range");
  std::vector<int> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(next_u64() % static_cast<uint64_t>(n - i));
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
  }
  pool.resize(static_cast<size_t>(k));
  return pool;
}

}  // namespace tbdoa
