#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cograph/bijection.hpp"
#include "cograph/graphon.hpp"
#include "cograph/samplers.hpp"
#include "oracles.hpp"

using namespace cograph;

namespace {

LabeledGraph make(std::uint32_t n, std::vector<Edge> e) { return LabeledGraph(n, e); }

LabeledGraph random_graph(Rng& rng, std::uint32_t n, double p) {
  LabeledGraph g(n);
  for (std::uint32_t u = 1; u <= n; ++u)
    for (std::uint32_t v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

// q_{H,p} straight from the definition: every proper tree, every sign pattern.
std::map<PatternMask, Rational> q_by_definition(std::uint32_t k, const Rational& p) {
  std::map<PatternMask, Rational> out;
  const auto trees = enumerate_proper_k_trees(k);
  for (const auto& planted : trees) {
    const auto t = snip_root(planted);
    std::vector<NodeId> internal;
    for (NodeId v = 0; v < t.size(); ++v)
      if (!t.is_leaf(v)) internal.push_back(v);
    for (std::uint32_t m = 0; m < (1U << internal.size()); ++m) {
      Tree s = t;
      Rational w = Rational(1, static_cast<long>(trees.size()));
      for (std::size_t i = 0; i < internal.size(); ++i) {
        const bool plus = (m >> i) & 1U;
        s.mutable_node(internal[i]).sign = plus ? Sign::plus : Sign::minus;
        w *= plus ? p : 1 - p;
      }
      out[pattern_of(gen_cotree_to_graph(s))] += w;
    }
  }
  return out;
}

PatternMask complement_mask(std::uint32_t k, PatternMask m) {
  const std::uint32_t pairs = k * (k - 1) / 2;
  return ~m & ((PatternMask{1} << pairs) - 1);
}

}  // namespace

TEST_CASE("exact induced densities") {
  const auto k2 = make(2, {{1, 2}});
  const auto k3 = make(3, {{1, 2}, {1, 3}, {2, 3}});
  const auto p3 = make(3, {{1, 2}, {2, 3}});
  CHECK(t_ind_exact(k2, k3).value == doctest::Approx(1.0));
  CHECK(t_ind_exact(k2, p3).value == doctest::Approx(2.0 / 3.0));
  CHECK(t_ind_exact(LabeledGraph(1), p3).value == doctest::Approx(1.0));
  CHECK(t_ind_exact(p3, p3).value == doctest::Approx(1.0 / 3.0));
  CHECK(t_ind_exact(k2, p3).method == DensityEstimate::Method::exact);
}

TEST_CASE("exact density agrees with a direct count") {
  Rng rng(1, 0);
  const auto g = random_graph(rng, 9, 0.4);
  const auto h = make(3, {{1, 2}});
  std::uint64_t hit = 0, total = 0;
  for (std::uint32_t a = 1; a <= 9; ++a)
    for (std::uint32_t b = 1; b <= 9; ++b)
      for (std::uint32_t c = 1; c <= 9; ++c) {
        if (a == b || b == c || a == c) continue;
        ++total;
        const std::uint32_t vs[3] = {a, b, c};
        hit += g.induced(vs) == h;
      }
  CHECK(t_ind_exact(h, g).value == doctest::Approx(static_cast<double>(hit) / total));
}

TEST_CASE("Monte Carlo densities") {
  Rng rng(2, 0);
  const auto g = random_graph(rng, 25, 0.5);
  const auto h = make(3, {{1, 2}, {2, 3}});
  const double exact = t_ind_exact(h, g).value;
  const auto mc = t_ind_mc(h, g, 200000, rng);
  CHECK(mc.method == DensityEstimate::Method::montecarlo);
  CHECK(std::abs(mc.value - exact) < 4 * mc.std_error);
  CHECK_THROWS(t_ind_mc(h, g, 0, rng));
  // Graphon version carries an O(k^2/n) bias from repeated vertices.
  const auto gm = t_ind_graphon_mc(h, g, 200000, rng);
  CHECK(std::abs(gm.value - exact) < 4 * gm.std_error + 3.0 * 3 / 25);
}

TEST_CASE("P4 density vanishes on sampled cographs") {
  Rng rng(3, 0);
  const auto p4 = make(4, {{1, 2}, {2, 3}, {3, 4}});
  for (int i = 0; i < 20; ++i) {
    const auto s = sample_labelled_cograph(40, rng);
    CHECK(t_ind_exact(p4, s.graph).value == 0.0);
    CHECK(t_ind_mc(p4, s.graph, 2000, rng).value == 0.0);
  }
}

TEST_CASE("limit law small values") {
  const Rational half(1, 2);
  const auto q2 = q_exact(2, Rational(1, 3));
  CHECK(q2.at(1) == Rational(1, 3));
  CHECK(q2.at(0) == Rational(2, 3));
  const auto q3 = q_exact(3, half);
  CHECK(q3.at(pattern_from_key(3, "1-2,1-3,2-3")) == Rational(1, 4));
  CHECK(q3.at(pattern_from_key(3, "1-2")) == Rational(1, 12));
  Rational total = 0;
  for (const auto& [m, q] : q3) total += q;
  CHECK(total == 1);
  CHECK_THROWS(q_exact(3, Rational(0)));
  CHECK_THROWS(q_exact(3, Rational(1)));
}

TEST_CASE("limit law equals the definition by enumeration") {
  for (std::uint32_t k = 2; k <= 5; ++k)
    for (const Rational& p : {Rational(1, 2), Rational(2, 7)}) CHECK(q_exact(k, p) == q_by_definition(k, p));
}

TEST_CASE("limit law symmetries") {
  const Rational p(2, 7);
  for (std::uint32_t k = 2; k <= 5; ++k) {
    const auto q = q_exact(k, p);
    const auto qc = q_exact(k, 1 - p);
    for (const auto& [m, v] : q) {
      const auto it = qc.find(complement_mask(k, m));
      REQUIRE(it != qc.end());
      CHECK(it->second == v);
    }
    std::vector<std::uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 1U);
    do {
      for (const auto& [m, v] : q) {
        const auto relab = pattern_of(graph_of_pattern(k, m).relabelled(perm));
        REQUIRE(q.count(relab));
        REQUIRE(q.at(relab) == v);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Zero exactly on patterns with an induced P4.
    const std::uint32_t pairs = k * (k - 1) / 2;
    for (PatternMask m = 0; m < (PatternMask{1} << pairs); ++m) {
      const bool p4 = oracle::has_induced_p4(graph_of_pattern(k, m));
      if (p4) CHECK(q_exact(k, p).count(m) == 0);
      if (p4) CHECK(LimitFingerprint::compute(k).q(m, p) == 0);
    }
  }
}

TEST_CASE("fingerprint json and isomorphism quotient") {
  const auto q = q_exact(3, Rational(1, 2));
  const auto j = fingerprint_to_json(3, Rational(1, 2), q);
  CHECK(j.dump().find("1/4") != std::string::npos);
  const auto iso = quotient_by_isomorphism(3, q);
  CHECK(iso.size() == 4);
  CHECK(iso.at(iso_class(3, pattern_from_key(3, "2-3"))) == Rational(1, 4));
}

TEST_CASE("total variation") {
  std::map<PatternMask, double> a{{0, 0.5}, {1, 0.5}}, b{{0, 0.25}, {1, 0.5}, {2, 0.25}};
  CHECK(total_variation(a, b) == doctest::Approx(0.25));
  std::map<PatternMask, std::uint64_t> counts{{0, 3}, {1, 1}};
  std::map<PatternMask, Rational> exact{{0, Rational(1, 2)}, {1, Rational(1, 2)}};
  CHECK(total_variation(counts, exact) == doctest::Approx(0.25));
}

TEST_CASE("step graphon matrices") {
  const auto w = step_graphon_matrix(make(2, {{1, 2}}));
  CHECK(w.matrix == std::vector<std::vector<std::uint8_t>>{{0, 1}, {1, 0}});
  const auto z = step_graphon_matrix(LabeledGraph(3));
  for (const auto& row : z.matrix) CHECK(std::all_of(row.begin(), row.end(), [](auto x) { return x == 0; }));
  const auto star = make(4, {{4, 1}, {4, 2}, {4, 3}});
  const auto byd = step_graphon_matrix(star, VertexOrder::degree);
  CHECK(byd.order.front() == 4);
  CHECK(to_csv(w) == "0,1\n1,0\n");
  const auto pgm = to_pgm(w);
  CHECK(pgm.rfind("P5\n2 2\n255\n", 0) == 0);
  CHECK(pgm.size() == std::string("P5\n2 2\n255\n").size() + 4);
}
