#include "cograph/samplers.hpp"

#include <algorithm>
#include <numeric>

#include "cograph/bijection.hpp"
#include "cograph/laws.hpp"

namespace cograph {

EtaSampler::EtaSampler() {
  const OffspringLaw law = eta_law(Real("1e-17"));
  double acc = 0;
  for (std::uint32_t k = 0; k <= law.max_blue(); ++k) {
    acc += static_cast<double>(law.prob(k));
    cumulative_.push_back(acc);
  }
  p0_ = static_cast<double>(law.prob(0));
  variance_ = static_cast<double>(law.var_blue());
}

std::uint32_t EtaSampler::operator()(Rng& rng) const { return static_cast<std::uint32_t>(rng.discrete(cumulative_)); }

const EtaSampler& eta_sampler() {
  static const EtaSampler sampler;
  return sampler;
}

std::optional<Tree> sample_eta_gw_tree(Rng& rng, std::size_t leaf_cap) {
  const auto& eta = eta_sampler();
  Tree t;
  std::vector<NodeId> pending{t.add_root()};
  std::size_t leaves = 0;
  while (!pending.empty()) {
    const NodeId v = pending.back();
    pending.pop_back();
    const std::uint32_t k = eta(rng);
    if (k == 0) {
      if (leaf_cap && ++leaves > leaf_cap) return std::nullopt;
      continue;
    }
    const std::size_t first = pending.size();
    for (std::uint32_t i = 0; i < k; ++i) pending.push_back(t.add_child(v));
    std::reverse(pending.begin() + static_cast<std::ptrdiff_t>(first), pending.end());
  }
  return t;
}

std::size_t sample_eta_gw_leaf_count(Rng& rng, std::size_t leaf_cap) {
  const auto& eta = eta_sampler();
  std::int64_t open = 1;
  std::size_t leaves = 0;
  while (open > 0) {
    const std::uint32_t k = eta(rng);
    open += static_cast<std::int64_t>(k) - 1;
    if (k == 0 && ++leaves > leaf_cap) return leaf_cap + 1;
  }
  return leaves;
}

Tree tree_from_lukasiewicz(const std::vector<std::uint32_t>& word) {
  Tree t;
  t.reserve(word.size());
  std::vector<std::pair<NodeId, std::uint32_t>> open;
  for (std::size_t i = 0; i < word.size(); ++i) {
    NodeId v;
    if (open.empty()) {
      if (!t.empty()) throw std::invalid_argument("sequence encodes more than one tree");
      v = t.add_root();
    } else {
      v = t.add_child(open.back().first);
      if (--open.back().second == 0) open.pop_back();
    }
    if (word[i] > 0) open.emplace_back(v, word[i]);
  }
  if (!open.empty() || t.empty()) throw std::invalid_argument("incomplete Lukasiewicz word");
  return t;
}

Tree sample_conditioned_eta_tree(std::size_t n, Rng& rng, const SampleBudget& budget, std::uint64_t* attempts) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const auto& eta = eta_sampler();
  std::vector<std::uint32_t> seq;
  for (std::uint64_t attempt = 1; attempt <= budget.max_attempts; ++attempt) {
    seq.clear();
    std::size_t zeros = 0;
    std::int64_t sum = 0;
    bool dead = false;
    while (zeros < n) {
      const std::uint32_t k = eta(rng);
      seq.push_back(k);
      sum += static_cast<std::int64_t>(k) - 1;
      if (k == 0) ++zeros;
      // Each remaining draw lowers the sum by at most one per leaf still due.
      if (sum - static_cast<std::int64_t>(n - zeros) > -1) {
        dead = true;
        break;
      }
    }
    if (dead || sum != -1) continue;
    // Start right after the first position where the walk is minimal.
    std::int64_t s = 0, best = 1;
    std::size_t cut = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      s += static_cast<std::int64_t>(seq[i]) - 1;
      if (s < best) {
        best = s;
        cut = i + 1;
      }
    }
    std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut % seq.size()), seq.end());
    if (attempts) *attempts = attempt;
    return tree_from_lukasiewicz(seq);
  }
  throw BudgetExhausted(budget.max_attempts);
}

CographSample sample_labelled_cograph(std::size_t n, Rng& rng, const SampleBudget& budget) {
  CographSample out;
  out.tree = sample_conditioned_eta_tree(n, rng, budget, &out.attempts);
  out.cotree = out.tree;
  std::vector<std::int32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  rng.shuffle(labels);
  label_leaves(out.cotree, labels);
  if (n > 1) assign_alternating_signs(out.cotree, rng.bernoulli(0.5) ? Sign::plus : Sign::minus);
  out.graph = cotree_to_cograph(out.cotree);
  return out;
}

}  // namespace cograph
