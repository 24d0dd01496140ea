#pragma once

// Monte Carlo and exact experiments on the random cograph models: skeleton
// shape, parity and distance limits, the local limit of leaf-count sums, and
// induced pattern densities.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cograph/constants.hpp"
#include "cograph/rng.hpp"
#include "cograph/samplers.hpp"

namespace cograph {

enum class Model { labelled, unlabelled };
std::string model_name(Model m);
Model parse_model(const std::string& s);

// Shared state for the unlabelled model (constants and the Boltzmann
// sampler at rho); built once and read concurrently.
class ModelContext {
 public:
  static std::shared_ptr<const ModelContext> create(std::size_t order = 64);
  const PolyaContext& polya() const { return polya_; }
  const ConstantsReport& constants() const { return polya_.report(); }
  const BoltzmannSampler& boltzmann() const { return *boltzmann_; }

 private:
  PolyaContext polya_;
  std::unique_ptr<BoltzmannSampler> boltzmann_;
};

// Conditioned tree of the model with children in exchangeable random order.
Tree sample_model_tree(Model model, std::size_t n, const ModelContext& ctx, Rng& rng, const SampleBudget& budget,
                       std::uint64_t* attempts = nullptr);
// Rescaling constant c with c * distance -> limit law, for a tree with m leaves.
double distance_scale(Model model, std::size_t m, const ModelContext& ctx);

struct ExperimentConfig {
  std::string name;
  Model model = Model::labelled;
  std::size_t n = 1000;
  std::size_t k = 2;
  std::uint64_t reps = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::optional<double> size_window;
  bool calibration = false;  // report without asserting
  double alpha = 0.001;
  double ks_threshold = 0.05;
  double tv_threshold = 0.05;
  double llt_threshold = 0.05;
  std::vector<std::size_t> n_list{20, 50, 80};
  std::uint64_t patterns_per_graph = 100;
};

nlohmann::json to_json(const ExperimentConfig& c);

struct ExperimentReport {
  std::string name;
  ExperimentConfig config;
  std::uint64_t sample_size = 0;
  std::string statistic_name;
  double statistic = 0;
  std::optional<double> p_value;
  double threshold = 0;
  bool passed = false;
  bool asserted = true;
  nlohmann::json details = nlohmann::json::object();
  // Histogram rows for CSV export; first row is the header.
  std::vector<std::vector<std::string>> histogram;
};

nlohmann::json to_json(const ExperimentReport& r);
std::string csv_header();
std::string to_csv_row(const ExperimentReport& r);
std::string histogram_csv(const ExperimentReport& r);

using Progress = std::function<void(std::uint64_t done, std::uint64_t total)>;

std::vector<std::string> experiment_names();

ExperimentReport experiment_shape(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress = {});
ExperimentReport experiment_parity(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress = {});
ExperimentReport experiment_distance(const ExperimentConfig& c, const ModelContext& ctx,
                                     const Progress& progress = {});
ExperimentReport experiment_stable_llt(const ExperimentConfig& c, const ModelContext& ctx,
                                       const Progress& progress = {});
ExperimentReport experiment_density(const ExperimentConfig& c, const ModelContext& ctx,
                                    const Progress& progress = {});
// Dispatch by name; throws std::invalid_argument for unknown names.
ExperimentReport run_experiment(const ExperimentConfig& c, const ModelContext& ctx, const Progress& progress = {});

// P(S_n = r) for r = 0..order, S_n the sum of n i.i.d. leaf counts of the
// unlabelled two-type tree; exact up to floating point.
std::vector<double> leafcount_sum_distribution(const ConstantsReport& c, std::size_t n, std::size_t order);

// Runs fn(rep) for rep = 0..reps-1 on `threads` workers; results in rep order.
template <typename T>
std::vector<T> parallel_reps(std::uint64_t reps, unsigned threads, const std::function<T(std::uint64_t)>& fn,
                             const Progress& progress = {});

}  // namespace cograph

#include "cograph/detail/parallel.hpp"
