#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "cograph/bijection.hpp"
#include "cograph/constants.hpp"
#include "cograph/laws.hpp"
#include "cograph/samplers.hpp"
#include "cograph/series.hpp"
#include "cograph/stats.hpp"
#include "oracles.hpp"

using namespace cograph;

namespace {

const PolyaContext& ctx() {
  static const PolyaContext c = PolyaContext::compute();
  return c;
}

const BoltzmannSampler& sampler() {
  static const BoltzmannSampler s(ctx(), ctx().report().rho);
  return s;
}

double d(const Real& x) { return static_cast<double>(x); }

// Binomial count within 3.5 standard deviations of n p.
void check_frequency(std::uint64_t hits, std::uint64_t n, double p) {
  const double sd = std::sqrt(n * p * (1 - p));
  CHECK(std::abs(static_cast<double>(hits) - n * p) <= 3.5 * sd + 1e-9);
}

template <typename Key>
double uniform_p_value(const std::map<Key, std::uint64_t>& counts, std::size_t cells) {
  std::vector<std::uint64_t> v;
  for (const auto& [k, c] : counts) v.push_back(c);
  v.resize(cells, 0);
  return chi_squared_uniform(v).p_value;
}

}  // namespace

TEST_CASE("rng streams are reproducible and distinct") {
  Rng a(42, 3), b(42, 3), c(42, 4);
  for (int i = 0; i < 10; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
  Rng r(1, 0);
  const auto ks = r.sample_distinct(10, 10);
  CHECK(std::set<std::uint64_t>(ks.begin(), ks.end()).size() == 10);
}

TEST_CASE("same seed gives identical samples") {
  Rng a(9, 1), b(9, 1);
  CHECK(sample_labelled_cograph(60, a).graph == sample_labelled_cograph(60, b).graph);
  Rng c(9, 2), e(9, 2);
  CHECK(sample_unlabelled_cograph(40, sampler(), c).graph == sample_unlabelled_cograph(40, sampler(), e).graph);
}

TEST_CASE("lukasiewicz decoding") {
  CHECK(plane_string(tree_from_lukasiewicz({2, 0, 3, 0, 0, 0})) == "(*,(*,*,*))");
  CHECK_THROWS(tree_from_lukasiewicz({2, 0}));
  CHECK_THROWS(tree_from_lukasiewicz({0, 0}));
}

TEST_CASE("eta Galton-Watson: leaf probability and no unary vertices") {
  Rng rng(1, 0);
  const std::uint64_t reps = 1'000'000;
  std::uint64_t single = 0;
  for (std::uint64_t i = 0; i < reps; ++i) single += sample_eta_gw_leaf_count(rng, 1) == 1;
  check_frequency(single, reps, eta_sampler().p0());
  for (int i = 0; i < 2000; ++i) {
    const auto t = sample_eta_gw_tree(rng, 5000);
    if (!t) continue;
    REQUIRE(min_outdegree_two(*t));
  }
}

TEST_CASE("eta Galton-Watson leaf-count tail exponent") {
  // log-binned density of the leaf count on [50, 500]; slope should be -3/2.
  Rng rng(2, 0);
  const std::uint64_t reps = 2'000'000;
  const std::vector<double> edges{50, 80, 128, 200, 320, 501};
  std::vector<double> hits(edges.size() - 1, 0);
  for (std::uint64_t i = 0; i < reps; ++i) {
    const auto l = static_cast<double>(sample_eta_gw_leaf_count(rng, 500));
    for (std::size_t b = 0; b + 1 < edges.size(); ++b)
      if (l >= edges[b] && l < edges[b + 1]) hits[b] += 1;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(hits.size());
  for (std::size_t b = 0; b < hits.size(); ++b) {
    const double x = std::log(std::sqrt(edges[b] * (edges[b + 1] - 1)));
    const double y = std::log(hits[b] / (edges[b + 1] - edges[b]));
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-1.5).epsilon(0.1));
}

TEST_CASE("conditioned eta tree has exactly n leaves") {
  Rng rng(3, 0);
  for (std::size_t n : {1, 2, 5, 50, 700}) {
    const auto t = sample_conditioned_eta_tree(n, rng);
    CHECK(t.leaf_count() == n);
    CHECK(min_outdegree_two(t));
  }
  SampleBudget tiny;
  tiny.max_attempts = 1;
  std::uint64_t seen_budget_error = 0;
  for (int i = 0; i < 20; ++i) {
    try {
      sample_conditioned_eta_tree(5000, rng, tiny);
    } catch (const BudgetExhausted&) {
      ++seen_budget_error;
    }
  }
  CHECK(seen_budget_error > 0);
}

TEST_CASE("labelled cographs on 3 and 4 vertices are uniform") {
  Rng rng(4, 0);
  for (std::uint32_t n : {3U, 4U}) {
    std::map<std::vector<Edge>, std::uint64_t> counts;
    for (int i = 0; i < 100000; ++i) {
      const auto s = sample_labelled_cograph(n, rng);
      REQUIRE(is_cograph(s.graph));
      REQUIRE(cotree_to_cograph(s.cotree) == s.graph);
      ++counts[s.graph.edges()];
    }
    const std::size_t cells = n == 3 ? 8 : 52;
    CHECK(counts.size() == cells);
    CHECK(uniform_p_value(counts, cells) > 0.001);
  }
}

TEST_CASE("labelled cographs are exchangeable") {
  Rng rng(5, 0);
  const int reps = 20000;
  int e12 = 0, e34 = 0, e1n = 0;
  for (int i = 0; i < reps; ++i) {
    const auto g = sample_labelled_cograph(30, rng).graph;
    REQUIRE(is_cograph(g));
    e12 += g.has_edge(1, 2);
    e34 += g.has_edge(3, 4);
    e1n += g.has_edge(1, 30);
  }
  const double sd = std::sqrt(2 * 0.25 * reps);
  CHECK(std::abs(e12 - e34) < 3 * sd);
  CHECK(std::abs(e12 - e1n) < 3 * sd);
}

TEST_CASE("Boltzmann leaf probability at two parameters") {
  const auto& r = ctx().report();
  for (const Real& x : {r.rho, r.rho / 2}) {
    const BoltzmannSampler s(ctx(), x);
    CHECK(s.leaf_probability() == doctest::Approx(d(x / ctx().value(x))).epsilon(1e-12));
    Rng rng(6, 0);
    const std::uint64_t reps = 200000;
    std::uint64_t leaves = 0;
    for (std::uint64_t i = 0; i < reps; ++i) leaves += s.sample(rng, 1).has_value();
    check_frequency(leaves, reps, d(x / ctx().value(x)));
  }
  CHECK_THROWS(BoltzmannSampler(ctx(), r.rho * 2));
}

TEST_CASE("Boltzmann size law matches the exact coefficients") {
  const auto& r = ctx().report();
  const auto a = unlabelled_counts(10);
  Rng rng(7, 0);
  const std::uint64_t reps = 300000;
  std::vector<std::uint64_t> hits(11, 0);
  for (std::uint64_t i = 0; i < reps; ++i) {
    const auto t = sampler().sample(rng, 10);
    if (t) {
      REQUIRE(t->leaf_count() <= 10);
      REQUIRE(min_outdegree_two(*t));
      ++hits[t->leaf_count()];
    }
  }
  for (std::size_t n = 1; n <= 10; ++n)
    check_frequency(hits[n], reps, d(to_real(a[n]) * boost::multiprecision::pow(r.rho, n) / r.A_rho));
}

TEST_CASE("root offspring of the two-type tree follows the bivariate law") {
  const auto law = xi_zeta_law(ctx());
  Rng rng(8, 0);
  // Trees above the cap are dropped; that conditioning moves each cell by
  // less than 1e-3 of its mass.
  std::uint64_t reps = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
  for (int i = 0; i < 50000; ++i) {
    const auto t = sampler().sample(rng, 1'000'000);
    if (!t) continue;
    ++reps;
    ++counts[blue_green_offspring(*t, t->root())];
  }
  std::vector<std::uint64_t> obs;
  std::vector<double> probs;
  std::uint64_t rest_obs = reps;
  double rest_p = 1;
  for (const auto& o : law.outcomes()) {
    const double p = d(o.prob);
    if (p * reps < 20) continue;
    const auto it = counts.find({o.blue, o.green});
    const std::uint64_t c = it == counts.end() ? 0 : it->second;
    obs.push_back(c);
    probs.push_back(p);
    rest_obs -= c;
    rest_p -= p;
  }
  obs.push_back(rest_obs);
  probs.push_back(rest_p);
  CHECK(obs.size() > 5);
  CHECK(chi_squared(obs, probs).p_value > 0.001);
}

TEST_CASE("two-type reduction keeps leaves and removes green structure") {
  Rng rng(9, 0);
  for (int i = 0; i < 200; ++i) {
    const auto t = sampler().sample(rng, 200);
    if (!t) continue;
    const auto red = two_type_reduction(*t);
    CHECK(red.leaf_count() == t->leaf_count());
    for (NodeId v = 0; v < red.size(); ++v)
      if (red.node(v).color == Color::green) REQUIRE(red.is_leaf(v));
  }
}

TEST_CASE("conditioned Boltzmann sampler is uniform for n <= 8") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto all = enumerate_unlabelled_trees(n);
    std::map<std::string, std::uint64_t> counts;
    Rng rng(10, n);
    for (int i = 0; i < 10000; ++i) ++counts[serialize_cotree(sample_conditioned_polya_tree(n, sampler(), rng))];
    for (const auto& [s, c] : counts) REQUIRE(std::find(all.begin(), all.end(), s) != all.end());
    CHECK(uniform_p_value(counts, all.size()) > 0.001);
  }
}

TEST_CASE("size window accepts nearby sizes") {
  SampleBudget b;
  b.size_window = 0.1;
  Rng rng(11, 0);
  for (int i = 0; i < 20; ++i) {
    const auto t = sample_conditioned_polya_tree(300, sampler(), rng, b);
    CHECK(t.leaf_count() >= 270);
    CHECK(t.leaf_count() <= 330);
  }
}

TEST_CASE("unlabelled cographs on 4 vertices are uniform over the 10 classes") {
  Rng rng(12, 0);
  std::map<std::vector<Edge>, std::uint64_t> counts;
  for (int i = 0; i < 20000; ++i) {
    const auto s = sample_unlabelled_cograph(4, sampler(), rng);
    REQUIRE(is_cograph(s.graph));
    REQUIRE(!oracle::has_induced_p4(s.graph));
    ++counts[oracle::iso_key(s.graph)];
  }
  CHECK(counts.size() == 10);
  CHECK(uniform_p_value(counts, 10) > 0.001);
  CHECK_THROWS_AS(sample_unlabelled_cograph(2, sampler(), rng), std::invalid_argument);
}

TEST_CASE("proper k-trees") {
  CHECK(proper_tree_count(1) == 1);
  CHECK(proper_tree_count(3) == 12);
  for (std::size_t k = 1; k <= 7; ++k) {
    const auto all = enumerate_proper_k_trees(k);
    CHECK(all.size() == proper_tree_count(k));
    std::set<std::string> distinct;
    for (const auto& t : all) {
      REQUIRE(is_proper_k_tree(t, k));
      REQUIRE(t.size() == 2 * k);  // 2k - 1 edges
      distinct.insert(plane_string(t));
    }
    CHECK(distinct.size() == all.size());
  }
  Rng rng(13, 0);
  CHECK(plane_string(enumerate_proper_k_trees(1)[0]) == plane_string(sample_proper_k_tree(1, rng)));
  std::map<std::string, std::uint64_t> counts;
  for (int i = 0; i < 100000; ++i) {
    const auto t = sample_proper_k_tree(3, rng);
    REQUIRE(is_proper_k_tree(t, 3));
    ++counts[plane_string(t)];
  }
  CHECK(counts.size() == 12);
  CHECK(uniform_p_value(counts, 12) > 0.001);
  CHECK_THROWS(snip_root(snip_root(sample_proper_k_tree(3, rng))));
}

TEST_CASE("H_k^p basics") {
  Rng rng(14, 0);
  const std::uint64_t reps = 100000;
  std::uint64_t edges = 0;
  for (std::uint64_t i = 0; i < reps; ++i) edges += sample_Hkp(2, 0.3, rng).edge_count();
  check_frequency(edges, reps, 0.3);
  for (int i = 0; i < 5000; ++i) {
    const auto g = sample_Hkp(1 + i % 8, 0.5, rng);
    REQUIRE(is_cograph(g));
  }
  CHECK_THROWS_AS(sample_Hkp(3, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_Hkp(3, 1.0, rng), std::invalid_argument);
}
