#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "cograph/samplers.hpp"
#include "cograph/skeleton.hpp"
#include "cograph/stats.hpp"

using namespace cograph;

TEST_CASE("single leaf skeleton is its depth") {
  Rng rng(1, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const auto t = sample_conditioned_eta_tree(2 + rng.below(40), rng);
    for (auto leaf : t.leaves()) {
      const auto s = spanned_skeleton(t, {leaf});
      REQUIRE(s.distances.size() == 1);
      REQUIRE(s.distances[0] == t.node(leaf).depth);
      REQUIRE(s.proper);
    }
  }
}

TEST_CASE("caterpillar with an internal split") {
  const auto t = parse_cotree("(1,(2,(3,(4,5))))").tree;
  const auto s = spanned_skeleton(t, {find_leaf(t, 4), find_leaf(t, 5)});
  CHECK(s.proper);
  CHECK(s.essential_count == 4);
  CHECK(s.distances == std::vector<std::uint32_t>{3, 1, 1});
  CHECK(s.parities == std::vector<std::uint8_t>{1, 1, 1});
  CHECK(is_proper_k_tree(s.shape, 2));
  CHECK(plane_string(s.shape) == "((1,2))");
}

TEST_CASE("lca at the root is not proper") {
  const auto t = parse_cotree("(1,(2,3))").tree;
  const auto s = spanned_skeleton(t, {find_leaf(t, 1), find_leaf(t, 2)});
  CHECK_FALSE(s.proper);
  CHECK_THROWS_AS(spanned_skeleton(t, {find_leaf(t, 1), find_leaf(t, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(spanned_skeleton(t, {t.root()}), std::invalid_argument);
}

TEST_CASE("skeleton invariants on sampled trees") {
  Rng rng(2, 0);
  for (int rep = 0; rep < 300; ++rep) {
    const auto t = sample_conditioned_eta_tree(200, rng);
    const std::size_t k = 1 + rep % 4;
    const auto idx = rng.sample_distinct(200, k);
    const auto all = t.leaves();
    std::vector<NodeId> chosen;
    for (auto i : idx) chosen.push_back(all[i]);
    const auto s = spanned_skeleton(t, chosen);
    for (std::size_t i = 0; i < s.distances.size(); ++i) REQUIRE(s.parities[i] == s.distances[i] % 2);
    if (s.proper) {
      REQUIRE(s.distances.size() == 2 * k - 1);
      REQUIRE(is_proper_k_tree(s.shape, k));
      std::uint64_t sum = 0;
      for (auto x : s.distances) sum += x;
      REQUIRE(sum <= t.size() - 1);
    }
  }
}

TEST_CASE("h density values") {
  const double one[] = {1.0};
  CHECK(h_density(one, 1) == doctest::Approx(std::exp(-0.5)));
  const double three[] = {0.5, 1.0, 1.5};
  CHECK(h_density(three, 2) == doctest::Approx(3.0 * std::exp(-4.5)));
  const double bad[] = {1.0, -1.0, 1.0};
  CHECK_THROWS(h_density(bad, 2));
  CHECK_THROWS(h_density(one, 2));
}

TEST_CASE("h integrates to one via the coordinate-sum reduction") {
  boost::math::quadrature::exp_sinh<double> integrator;
  for (std::size_t k = 1; k <= 4; ++k) {
    const double dim = static_cast<double>(2 * k - 1);
    // Volume of {x > 0, sum x = s} slice: s^{dim-1}/(dim-1)!.
    const auto f = [&](double s) {
      if (s > 60) return 0.0;
      std::vector<double> x(2 * k - 1, s / dim);
      return h_density(x, k) * std::pow(s, dim - 1) / std::tgamma(dim);
    };
    CHECK(integrator.integrate(f) == doctest::Approx(1.0).epsilon(1e-6));
    // The sum then has the chi(2k) law.
    const auto chi_pdf = [&](double s) {
      return std::pow(s, 2.0 * k - 1) * std::exp(-s * s / 2) / (std::pow(2.0, k - 1.0) * std::tgamma(k));
    };
    for (double s : {0.3, 1.0, 2.5}) CHECK(f(s) == doctest::Approx(chi_pdf(s)).epsilon(1e-10));
  }
}

TEST_CASE("h integrates to one by simplex Monte Carlo") {
  // Importance sampling with i.i.d. Exp(1) coordinates.
  Rng rng(3, 0);
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<double> vals;
    const int reps = 400000;
    vals.reserve(reps);
    std::vector<double> x(2 * k - 1);
    for (int i = 0; i < reps; ++i) {
      double s = 0;
      for (auto& xi : x) {
        xi = -std::log(1 - rng.uniform());
        s += xi;
      }
      vals.push_back(h_density(x, k) * std::exp(s));
    }
    const auto ms = mean_and_stderr(vals);
    CHECK(std::abs(ms.mean - 1) < 4 * ms.std_error);
  }
}

TEST_CASE("stable density") {
  CHECK(stable_density(1.0) == doctest::Approx(std::exp(-0.5) / std::sqrt(2 * std::numbers::pi)));
  CHECK_THROWS(stable_density(0.0));
  CHECK(stable_density(1e-3) >= 0.0);
  boost::math::quadrature::exp_sinh<double> integrator;
  const double total = integrator.integrate([](double x) { return stable_density(x); });
  CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
  // Mode at 1/3.
  CHECK(stable_density(1.0 / 3) > stable_density(0.33));
  CHECK(stable_density(1.0 / 3) > stable_density(0.34));
}

TEST_CASE("chi cdf") {
  CHECK(chi_cdf(1.0, 2) == doctest::Approx(1 - std::exp(-0.5)));
  CHECK(chi_cdf(0.0, 4) == 0.0);
  CHECK(chi_cdf(50.0, 4) == doctest::Approx(1.0));
}
