#include <array>
#include <functional>

#include "cograph/bijection.hpp"
#include "cograph/samplers.hpp"

namespace cograph {

namespace {

// Planted binary plane tree under construction. Node 0 is the root; every
// other node hangs below one edge, identified with that node.
struct Planted {
  std::vector<std::int32_t> parent{-1, 0};
  std::vector<std::array<std::int32_t, 2>> kids{{1, -1}, {-1, -1}};
  std::vector<std::int32_t> label{0, 1};

  std::size_t nodes() const { return parent.size(); }

  // Subdivides the edge above `v` and hangs a new leaf on side `right`.
  void insert(std::int32_t v, bool right, std::int32_t leaf_label) {
    const auto w = static_cast<std::int32_t>(parent.size());
    const auto leaf = w + 1;
    const std::int32_t p = parent[v];
    for (auto& c : kids[p])
      if (c == v) c = w;
    parent.push_back(p);
    kids.push_back(right ? std::array<std::int32_t, 2>{v, leaf} : std::array<std::int32_t, 2>{leaf, v});
    label.push_back(0);
    parent[v] = w;
    parent.push_back(w);
    kids.push_back({-1, -1});
    label.push_back(leaf_label);
  }

  Tree to_tree() const {
    Tree t;
    t.reserve(nodes());
    std::vector<std::pair<std::int32_t, NodeId>> stack{{0, kNoNode}};
    while (!stack.empty()) {
      const auto [v, p] = stack.back();
      stack.pop_back();
      const NodeId id = p == kNoNode ? t.add_root() : t.add_child(p, Sign::none, label[v]);
      for (int side = 1; side >= 0; --side)
        if (kids[v][side] >= 0) stack.emplace_back(kids[v][side], id);
    }
    return t;
  }
};

}  // namespace

std::uint64_t proper_tree_count(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  std::uint64_t c = 1;
  for (std::size_t j = 1; j < k; ++j) c *= 2 * (2 * j - 1);
  return c;
}

Tree sample_proper_k_tree(std::size_t k, Rng& rng) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  Planted t;
  for (std::size_t j = 1; j < k; ++j) {
    // 2j - 1 edges, one above each non-root node.
    const auto v = static_cast<std::int32_t>(1 + rng.below(2 * j - 1));
    t.insert(v, rng.bernoulli(0.5), static_cast<std::int32_t>(j + 1));
  }
  return t.to_tree();
}

std::vector<Tree> enumerate_proper_k_trees(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > 7) throw std::invalid_argument("enumeration is capped at k = 7");
  std::vector<Tree> out;
  std::function<void(const Planted&, std::size_t)> rec = [&](const Planted& t, std::size_t j) {
    if (j == k) {
      out.push_back(t.to_tree());
      return;
    }
    for (std::int32_t v = 1; v < static_cast<std::int32_t>(t.nodes()); ++v)
      for (bool right : {false, true}) {
        Planted next = t;
        next.insert(v, right, static_cast<std::int32_t>(j + 1));
        rec(next, j + 1);
      }
  };
  rec(Planted{}, 1);
  return out;
}

bool is_proper_k_tree(const Tree& t, std::size_t k) {
  if (t.empty() || t.node(t.root()).child_count != 1) return false;
  std::size_t leaves = 0;
  for (NodeId v = 0; v < t.size(); ++v) {
    const auto& n = t.node(v);
    if (n.child_count == 0) ++leaves;
    else if (v != t.root() && n.child_count != 2) return false;
  }
  return leaves == k && t.size() == 2 * k && labels_are_permutation(t);
}

Tree snip_root(const Tree& planted) {
  if (planted.empty() || planted.node(planted.root()).child_count != 1)
    throw InvalidTree("snip_root needs a root of outdegree one");
  const NodeId top = planted.node(planted.root()).first_child;
  Tree out;
  const auto& n = planted.node(top);
  const NodeId root = out.add_root(n.sign, n.label, n.color);
  for (NodeId c : planted.children(top)) out.copy_subtree(root, planted, c);
  return out;
}

LabeledGraph sample_Hkp(std::size_t k, double p, Rng& rng) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0, 1)");
  Tree d = snip_root(sample_proper_k_tree(k, rng));
  if (k == 1) return LabeledGraph(1);
  for (NodeId v = 0; v < d.size(); ++v)
    if (!d.is_leaf(v)) d.mutable_node(v).sign = rng.bernoulli(p) ? Sign::plus : Sign::minus;
  return gen_cotree_to_graph(d);
}

}  // namespace cograph
