#include <doctest.h>

#include <set>

#include "cograph/bijection.hpp"
#include "cograph/rng.hpp"
#include "cograph/samplers.hpp"
#include "cograph/series.hpp"
#include "oracles.hpp"

using namespace cograph;

namespace {

std::vector<Tree> all_cotrees(std::size_t n) {
  std::vector<Tree> out;
  for (const auto& s : enumerate_labelled_trees(n))
    for (auto sign : {Sign::plus, Sign::minus}) {
      auto t = parse_cotree(s).tree;
      if (n > 1) assign_alternating_signs(t, sign);
      out.push_back(std::move(t));
      if (n == 1) break;
    }
  return out;
}

LabeledGraph edges_graph(std::uint32_t n, std::vector<Edge> e) { return LabeledGraph(n, e); }

}  // namespace

TEST_CASE("cotree to cograph examples") {
  CHECK(cotree_to_cograph(parse_cotree("+(1,2)").tree).edges() == std::vector<Edge>{{1, 2}});
  CHECK(cotree_to_cograph(parse_cotree("-(1,2)").tree).edge_count() == 0);
  CHECK(cotree_to_cograph(parse_cotree("-(1,+(2,-(3,4)))").tree).edges() == std::vector<Edge>{{2, 3}, {2, 4}});
  CHECK(cotree_to_cograph(parse_cotree("1").tree).n() == 1);
}

TEST_CASE("generalized cotree map examples") {
  CHECK(gen_cotree_to_graph(parse_cotree("+(1,+(2,3))").tree).edge_count() == 3);
  CHECK(gen_cotree_to_graph(parse_cotree("+(1,-(2,3))").tree).edges() == std::vector<Edge>{{1, 2}, {1, 3}});
}

TEST_CASE("inverse map") {
  CHECK(serialize_cotree(cograph_to_cotree(edges_graph(2, {{1, 2}}))) == "+(1,2)");
  const auto p4 = edges_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(cograph_to_cotree(p4), NotACograph);
  CHECK_FALSE(is_cograph(p4));
  const auto c5 = edges_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK_FALSE(is_cograph(c5));
}

TEST_CASE("recognition agrees with brute-force P4 search on all graphs up to 5 vertices") {
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (const auto& g : oracle::all_graphs(n)) REQUIRE(is_cograph(g) == !oracle::has_induced_p4(g));
  for (const auto& g : oracle::all_graphs(3)) CHECK(is_cograph(g));
}

TEST_CASE("adjacency is the lca sign, exhaustively up to 7 leaves") {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& t : all_cotrees(n)) {
      const auto g = cotree_to_cograph(t);
      for (std::int32_t u = 1; u <= static_cast<std::int32_t>(n); ++u)
        for (std::int32_t v = u + 1; v <= static_cast<std::int32_t>(n); ++v) {
          const bool plus = t.node(lca(t, find_leaf(t, u), find_leaf(t, v))).sign == Sign::plus;
          REQUIRE(g.has_edge(u, v) == plus);
        }
    }
}

TEST_CASE("round trip and injectivity up to 6 leaves") {
  const auto table = labelled_counts(6);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::set<std::vector<Edge>> images;
    for (const auto& t : all_cotrees(n)) {
      const auto g = cotree_to_cograph(t);
      REQUIRE(serialize_cotree(cograph_to_cotree(g)) == serialize_cotree(t));
      images.insert(g.edges());
    }
    CHECK(Integer(images.size()) == 2 * table.count(n));
    // Every P4-free graph is hit.
    std::size_t p4_free = 0;
    for (const auto& g : oracle::all_graphs(static_cast<std::uint32_t>(n))) p4_free += !oracle::has_induced_p4(g);
    CHECK(images.size() == p4_free);
  }
}

TEST_CASE("relabelling leaves relabels vertices") {
  Rng rng(3, 0);
  for (const auto& t : all_cotrees(5)) {
    std::vector<std::uint32_t> perm{1, 2, 3, 4, 5};
    rng.shuffle(perm);
    Tree r = t;
    for (NodeId id = 0; id < r.size(); ++id)
      if (r.is_leaf(id)) r.mutable_node(id).label = static_cast<std::int32_t>(perm[r.node(id).label - 1]);
    REQUIRE(cotree_to_cograph(r) == cotree_to_cograph(t).relabelled(perm));
  }
}

TEST_CASE("generalized cotrees: no induced P4, agrees on alternating ones") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& s : enumerate_labelled_trees(n)) {
      const auto base = parse_cotree(s).tree;
      std::vector<NodeId> internal;
      for (NodeId id = 0; id < base.size(); ++id)
        if (!base.is_leaf(id)) internal.push_back(id);
      for (std::uint32_t m = 0; m < (1U << internal.size()); ++m) {
        Tree t = base;
        for (std::size_t i = 0; i < internal.size(); ++i)
          t.mutable_node(internal[i]).sign = ((m >> i) & 1U) ? Sign::plus : Sign::minus;
        const auto g = gen_cotree_to_graph(t);
        REQUIRE(is_cograph(g));
        if (n <= 5) REQUIRE_FALSE(oracle::has_induced_p4(g));
        if (is_alternating(t)) REQUIRE(g == cotree_to_cograph(t));
      }
    }
}
