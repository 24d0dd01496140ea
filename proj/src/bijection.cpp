#include "cograph/bijection.hpp"

#include <algorithm>

namespace cograph {

LabeledGraph cotree_to_cograph(const Tree& cotree) {
  validate_cotree(cotree);
  const auto n = static_cast<std::uint32_t>(cotree.leaf_count());
  LabeledGraph g(n);
  // Vertex sets of every fringe subtree, built bottom-up.
  std::vector<std::vector<std::uint32_t>> members(cotree.size());
  const auto order = cotree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    const Node& node = cotree.node(v);
    if (node.child_count == 0) {
      members[v] = {static_cast<std::uint32_t>(node.label)};
      continue;
    }
    auto& mine = members[v];
    for (NodeId c : cotree.children(v)) {
      if (node.sign == Sign::plus) {
        for (auto a : mine)
          for (auto b : members[c]) g.add_edge(a, b);
      }
      mine.insert(mine.end(), members[c].begin(), members[c].end());
      std::vector<std::uint32_t>().swap(members[c]);
    }
  }
  return g;
}

LabeledGraph gen_cotree_to_graph(const Tree& generalized) {
  validate_generalized_cotree(generalized);
  const auto leaves = generalized.leaves();
  LabeledGraph g(static_cast<std::uint32_t>(leaves.size()));
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (generalized.node(lca(generalized, leaves[i], leaves[j])).sign == Sign::plus)
        g.add_edge(static_cast<std::uint32_t>(generalized.node(leaves[i]).label),
                   static_cast<std::uint32_t>(generalized.node(leaves[j]).label));
  return g;
}

namespace {

// Components of g restricted to `vertices`, or of its complement when
// `complement` is set.
std::vector<std::vector<std::uint32_t>> split(const LabeledGraph& g, const std::vector<std::uint32_t>& vertices,
                                              bool complement) {
  const std::size_t m = vertices.size();
  std::vector<int> comp(m, -1);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      out.back().push_back(vertices[a]);
      for (std::size_t b = 0; b < m; ++b) {
        if (comp[b] >= 0) continue;
        if (g.has_edge(vertices[a], vertices[b]) != complement) {
          comp[b] = id;
          stack.push_back(b);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace

Tree cograph_to_cotree(const LabeledGraph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  Tree t;
  std::vector<std::uint32_t> all(g.n());
  for (std::uint32_t v = 0; v < g.n(); ++v) all[v] = v + 1;
  struct Work {
    std::vector<std::uint32_t> vertices;
    NodeId parent;
  };
  std::vector<Work> stack;
  stack.push_back({std::move(all), kNoNode});
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (w.vertices.size() == 1) {
      const auto label = static_cast<std::int32_t>(w.vertices.front());
      if (w.parent == kNoNode)
        t.add_root(Sign::none, label);
      else
        t.add_child(w.parent, Sign::none, label);
      continue;
    }
    Sign sign = Sign::minus;
    auto parts = split(g, w.vertices, false);
    if (parts.size() == 1) {
      sign = Sign::plus;
      parts = split(g, w.vertices, true);
      if (parts.size() == 1) throw NotACograph("graph and its complement are both connected on a vertex subset");
    }
    const NodeId self = w.parent == kNoNode ? t.add_root(sign) : t.add_child(w.parent, sign);
    for (auto& p : parts) stack.push_back({std::move(p), self});
  }
  return canonicalize(t);
}

bool is_cograph(const LabeledGraph& g) {
  try {
    cograph_to_cotree(g);
    return true;
  } catch (const NotACograph&) {
    return false;
  }
}

}  // namespace cograph
