#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rlkd {

/// Deterministic random source with named sub-streams.
///
/// Generator: std::mt19937_64, whose output sequence is pinned by the C++
/// standard, seeded from splitmix64(seed XOR fnv1a64(stream label)). All
/// distributions (uniform reals, Box-Muller normals, rejection-sampled
/// integers, Fisher-Yates shuffle) are implemented here rather than taken
/// from <random>, because standard-library distributions are not required
/// to produce identical sequences across implementations.
///
/// Identical (seed, stream) pairs yield identical draw sequences; distinct
/// stream labels yield independent streams. Instances are single-owner:
/// do not share one generator across concurrent callers.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::string_view stream = "");

  std::uint64_t next_u64();

  /// Uniform real in [0, 1), 53-bit resolution.
  double uniform();

  /// Standard normal via Box-Muller; draws two uniforms every other call.
  double normal();

  /// Uniform integer in [0, n), unbiased (rejection sampling). n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n);

  bool bernoulli(double p);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t seed() const { return seed_; }
  const std::string& stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::string stream_;
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(std::string_view text);

/// splitmix64 scramble step.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives a child seed from (seed, label); used to give sub-components
/// (pretraining phases, data generation) stable independent seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

}  // namespace rlkd
