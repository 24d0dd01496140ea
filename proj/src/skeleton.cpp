#include "cograph/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace cograph {

SkeletonSummary spanned_skeleton(const Tree& t, const std::vector<NodeId>& leaves) {
  if (leaves.empty()) throw std::invalid_argument("need at least one leaf");
  std::unordered_set<NodeId> seen;
  for (NodeId v : leaves) {
    if (!t.contains(v) || !t.is_leaf(v)) throw std::invalid_argument("skeleton input must be leaves");
    if (!seen.insert(v).second) throw std::invalid_argument("repeated leaf in skeleton input");
  }

  std::unordered_set<NodeId> essential{t.root()};
  for (NodeId v : leaves) essential.insert(v);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) essential.insert(lca(t, leaves[i], leaves[j]));

  // Nearest essential proper ancestor of each essential vertex.
  std::unordered_map<NodeId, std::vector<NodeId>> kids;
  for (NodeId e : essential) {
    if (e == t.root()) continue;
    NodeId a = t.node(e).parent;
    while (!essential.count(a)) a = t.node(a).parent;
    kids[a].push_back(e);
  }

  // Plane order of siblings: position of the branch of the original parent
  // they descend from. Compare by climbing to the sibling just below the
  // common ancestor.
  auto branch_rank = [&](NodeId anc, NodeId e) {
    NodeId b = e;
    while (t.node(b).parent != anc) b = t.node(b).parent;
    std::size_t r = 0;
    for (NodeId c : t.children(anc)) {
      if (c == b) return r;
      ++r;
    }
    return r;
  };
  for (auto& [a, list] : kids) {
    std::vector<std::pair<std::size_t, NodeId>> ranked;
    for (NodeId e : list) ranked.emplace_back(branch_rank(a, e), e);
    std::sort(ranked.begin(), ranked.end());
    for (std::size_t i = 0; i < list.size(); ++i) list[i] = ranked[i].second;
  }

  std::unordered_map<NodeId, std::int32_t> label_of;
  for (std::size_t i = 0; i < leaves.size(); ++i) label_of[leaves[i]] = static_cast<std::int32_t>(i + 1);

  SkeletonSummary s;
  s.essential_count = essential.size();
  std::vector<std::pair<NodeId, NodeId>> stack{{t.root(), kNoNode}};
  bool proper = true;
  while (!stack.empty()) {
    const auto [e, parent] = stack.back();
    stack.pop_back();
    const auto lab = label_of.count(e) ? label_of[e] : 0;
    NodeId id;
    if (parent == kNoNode) {
      id = s.shape.add_root(Sign::none, lab);
    } else {
      id = s.shape.add_child(parent, Sign::none, lab);
      NodeId up = t.node(e).parent;
      while (!essential.count(up)) up = t.node(up).parent;
      const std::uint32_t d = t.node(e).depth - t.node(up).depth;
      s.distances.push_back(d);
      s.parities.push_back(static_cast<std::uint8_t>(d % 2));
      s.height_parities.push_back(static_cast<std::uint8_t>(t.node(e).depth % 2));
    }
    const auto it = kids.find(e);
    const std::size_t outdeg = it == kids.end() ? 0 : it->second.size();
    if (e == t.root()) proper = proper && outdeg == 1;
    else if (!label_of.count(e)) proper = proper && outdeg == 2;
    if (it != kids.end())
      for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) stack.emplace_back(*c, id);
  }
  s.proper = proper && s.essential_count == 2 * leaves.size();
  return s;
}

double h_density(std::span<const double> x, std::size_t k) {
  if (k == 0 || x.size() != 2 * k - 1) throw std::invalid_argument("h needs 2k - 1 coordinates");
  double sum = 0;
  for (double v : x) {
    if (!(v > 0)) throw std::invalid_argument("h is defined for positive coordinates");
    sum += v;
  }
  double c = 1;
  for (std::size_t i = 1; i < k; ++i) c *= static_cast<double>(2 * i - 1);
  return c * sum * std::exp(-sum * sum / 2);
}

double stable_density(double x) {
  if (!(x > 0)) throw std::invalid_argument("stable density needs x > 0");
  return std::exp(-1 / (2 * x)) / (std::sqrt(2 * std::numbers::pi) * x * std::sqrt(x));
}

}  // namespace cograph
