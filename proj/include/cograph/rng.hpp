#pragma once

// Reproducible random streams: a (seed, stream) pair determines the whole
// output sequence. Monte Carlo batches give every replicate its own stream,
// so results do not depend on the number of worker threads.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cograph {

class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, n), n >= 1 (rejection, no modulo bias).
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }
  // Poisson by sequential inversion; intended for small means.
  std::uint64_t poisson(double mean);
  // Index drawn from cumulative weights (last entry = total).
  std::size_t discrete(std::span<const double> cumulative);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  // k distinct values from [0, n) in random order (partial Fisher-Yates on
  // a sparse map; O(k) expected).
  std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::uint64_t k);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace cograph
