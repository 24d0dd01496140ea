#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cograph/experiments.hpp"
#include "cograph/laws.hpp"

using namespace cograph;

namespace {

std::shared_ptr<const ModelContext> context() {
  static const auto ctx = ModelContext::create();
  return ctx;
}

ExperimentConfig small(const std::string& name, Model m) {
  ExperimentConfig c;
  c.name = name;
  c.model = m;
  c.n = 300;
  c.k = 2;
  c.reps = 400;
  c.seed = 17;
  c.size_window = m == Model::unlabelled ? std::optional<double>(0.1) : std::nullopt;
  return c;
}

}  // namespace

TEST_CASE("model names") {
  CHECK(parse_model("labelled") == Model::labelled);
  CHECK(parse_model("unlabelled") == Model::unlabelled);
  CHECK(model_name(Model::unlabelled) == "unlabelled");
  CHECK_THROWS(parse_model("planar"));
}

TEST_CASE("parallel reps are thread-count independent") {
  const std::function<std::uint64_t(std::uint64_t)> f = [](std::uint64_t r) {
    Rng rng(5, r);
    return rng();
  };
  CHECK(parallel_reps<std::uint64_t>(100, 1, f) == parallel_reps<std::uint64_t>(100, 4, f));
}

TEST_CASE("skeleton experiments run and report on both models") {
  for (Model m : {Model::labelled, Model::unlabelled})
    for (const std::string name : {"shape", "parity", "distance"}) {
      auto c = small(name, m);
      const auto r = run_experiment(c, *context());
      CHECK(r.name == name);
      CHECK(r.sample_size > 300);
      CHECK(r.p_value.has_value());
      CHECK(r.asserted);
      const auto j = to_json(r);
      CHECK(j.at("config").at("seed") == 17);
      CHECK(j.contains("version"));
      CHECK(to_csv_row(r).find(name) == 0);
      CHECK(histogram_csv(r).size() > 10);
    }
}

TEST_CASE("results do not depend on the thread count") {
  auto c = small("distance", Model::labelled);
  const auto a = run_experiment(c, *context());
  c.threads = 3;
  const auto b = run_experiment(c, *context());
  CHECK(a.statistic == b.statistic);
  CHECK(to_json(a).at("details").dump() == to_json(b).at("details").dump());
}

TEST_CASE("labelled skeleton of two leaves is proper with high probability") {
  auto c = small("shape", Model::labelled);
  c.n = 2000;
  c.reps = 1000;
  const auto r = run_experiment(c, *context());
  CHECK(r.details.at("non_proper_fraction").get<double>() < 0.05);
}

TEST_CASE("calibration mode does not assert") {
  auto c = small("parity", Model::labelled);
  c.calibration = true;
  CHECK_FALSE(run_experiment(c, *context()).asserted);
}

TEST_CASE("unknown experiment lists the available names") {
  auto c = small("nope", Model::labelled);
  try {
    run_experiment(c, *context());
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    for (const auto& n : experiment_names()) CHECK(msg.find(n) != std::string::npos);
  }
}

TEST_CASE("density experiment on the labelled model") {
  auto c = small("density", Model::labelled);
  c.n = 500;
  c.reps = 100;
  c.k = 2;
  const auto r = run_experiment(c, *context());
  CHECK(std::abs(r.details.at("edge_density_mean").get<double>() - 0.5) < 0.05);
  CHECK(r.details.at("non_cographs") == 0);
  c.k = 4;
  const auto r4 = run_experiment(c, *context());
  CHECK(r4.details.at("patterns_with_induced_p4") == 0);
}

TEST_CASE("leaf-count sums") {
  const auto& k = context()->constants();
  const auto one = leafcount_sum_distribution(k, 1, 50);
  const auto base = boltzmann_leaf_distribution(k, 50);
  for (std::size_t r = 0; r <= 50; ++r) CHECK(one[r] == doctest::Approx(base[r]));
  const auto three = leafcount_sum_distribution(k, 3, 40);
  double direct = 0;
  for (std::size_t a = 1; a <= 38; ++a)
    for (std::size_t b = 1; a + b <= 39; ++b) direct += base[a] * base[b] * base[40 - a - b];
  CHECK(three[40] == doctest::Approx(direct).epsilon(1e-12));
  CHECK(three[2] == 0.0);
}

TEST_CASE("local limit discrepancies shrink with n") {
  auto c = small("llt", Model::unlabelled);
  c.n = 20;
  c.n_list = {10, 20, 40};
  const auto r = run_experiment(c, *context());
  CHECK(r.details.at("decreasing").get<bool>());
  CHECK(r.details.at("per_n").size() == 3);
}
