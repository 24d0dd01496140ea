#pragma once

// Induced subgraph densities of finite graphs, their graphon (step function)
// view, and the exact pattern law q_{H,p} of the random graphs H_k^p.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cograph/graph.hpp"
#include "cograph/numeric.hpp"
#include "cograph/rng.hpp"

namespace cograph {

struct DensityEstimate {
  enum class Method { exact, montecarlo };
  double value = 0;
  double std_error = 0;
  Method method = Method::exact;
  std::uint64_t reps = 0;
};

// Probability that a uniform ordered k-tuple of distinct vertices of g
// induces exactly h (k = v(h) <= 5).
DensityEstimate t_ind_exact(const LabeledGraph& h, const LabeledGraph& g);
DensityEstimate t_ind_mc(const LabeledGraph& h, const LabeledGraph& g, std::uint64_t reps, Rng& rng);
// Graphon version: k i.i.d. uniform points in [0,1], read through W_g
// (vertices may repeat; W_g vanishes on diagonal blocks).
DensityEstimate t_ind_graphon_mc(const LabeledGraph& h, const LabeledGraph& g, std::uint64_t reps, Rng& rng);

// Pattern of g on a uniform ordered k-tuple of distinct vertices.
PatternMask sample_pattern(const LabeledGraph& g, std::uint32_t k, Rng& rng);

// Law of H_k^p. Entries are polynomials in p kept through their counts:
// counts[H][j] = number of (proper tree, sign pattern) pairs with j plus
// signs producing H.
class LimitFingerprint {
 public:
  static LimitFingerprint compute(std::uint32_t k);

  std::uint32_t k() const { return k_; }
  std::uint64_t tree_count() const { return tree_count_; }
  const std::map<PatternMask, std::vector<std::uint64_t>>& counts() const { return counts_; }

  // Exact q_{H,p}; 0 for patterns outside the support.
  Rational q(PatternMask h, const Rational& p) const;
  // Whole table at p (support only).
  std::map<PatternMask, Rational> table(const Rational& p) const;

 private:
  std::uint32_t k_ = 0;
  std::uint64_t tree_count_ = 0;
  std::map<PatternMask, std::vector<std::uint64_t>> counts_;
};

// Exact table at p for 2 <= k <= 6.
std::map<PatternMask, Rational> q_exact(std::uint32_t k, const Rational& p);
nlohmann::json fingerprint_to_json(std::uint32_t k, const Rational& p, const std::map<PatternMask, Rational>& table);

// Total variation between an empirical pattern histogram and an exact table.
double total_variation(const std::map<PatternMask, std::uint64_t>& counts, const std::map<PatternMask, Rational>& exact);
double total_variation(const std::map<PatternMask, double>& a, const std::map<PatternMask, double>& b);

// Smallest mask over all relabellings of the pattern (isomorphism class key).
PatternMask iso_class(std::uint32_t k, PatternMask mask);
template <typename V>
std::map<PatternMask, V> quotient_by_isomorphism(std::uint32_t k, const std::map<PatternMask, V>& table) {
  std::map<PatternMask, V> out;
  for (const auto& [m, v] : table) out[iso_class(k, m)] += v;
  return out;
}

enum class VertexOrder { input, degree };

struct StepGraphon {
  std::vector<std::uint32_t> order;  // order[i] = vertex placed at block i
  std::vector<std::vector<std::uint8_t>> matrix;
};

StepGraphon step_graphon_matrix(const LabeledGraph& g, VertexOrder order = VertexOrder::input);
std::string to_csv(const StepGraphon& w);
// Binary PGM (P5), edges black.
std::string to_pgm(const StepGraphon& w);

}  // namespace cograph
