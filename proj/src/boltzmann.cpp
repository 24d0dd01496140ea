#include "cograph/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <map>

#include "cograph/bijection.hpp"

namespace cograph {

namespace {

constexpr double kLeafPower = 1e-18;   // below this x^m a vertex is a leaf
constexpr double kMeanCutoff = 1e-20;  // replication orders with smaller means are dropped

// Poisson(mean) conditioned on being positive, by inversion.
std::uint64_t positive_poisson(Rng& rng, double mean) {
  const double nonzero = -std::expm1(-mean);
  const double u = rng.uniform() * nonzero;
  double p = std::exp(-mean) * mean;
  double cdf = p;
  std::uint64_t k = 1;
  while (u >= cdf) {
    ++k;
    p *= mean / static_cast<double>(k);
    const double next = cdf + p;
    if (next == cdf) break;
    cdf = next;
  }
  return k;
}

}  // namespace

BoltzmannSampler::BoltzmannSampler(const PolyaContext& ctx, const Real& x) : x_(static_cast<double>(x)) {
  if (!(x > 0) || x > ctx.report().rho_upper) throw std::domain_error("Boltzmann parameter must lie in (0, rho]");
  // A(x^j) for every power still above the mean cutoff.
  std::vector<double> a_pow{0.0};
  Real xj = x;
  for (std::uint32_t j = 1; static_cast<double>(xj) >= kMeanCutoff; ++j, xj *= x)
    a_pow.push_back(j == 1 ? static_cast<double>(ctx.value(x)) : static_cast<double>(ctx.a_table().evaluate(xj)));
  const auto top = static_cast<std::uint32_t>(a_pow.size());

  max_power_ = 1;
  while (max_power_ < top && std::pow(x_, max_power_) >= kLeafPower) ++max_power_;
  a_of_power_.assign(max_power_, 0.0);
  leaf_prob_.assign(max_power_, 1.0);
  means_.assign(max_power_, {});
  hazard_.assign(max_power_, {});
  split_.assign(max_power_, {});
  for (std::uint32_t m = 1; m < max_power_; ++m) {
    a_of_power_[m] = a_pow[m];
    leaf_prob_[m] = std::pow(x_, m) / a_pow[m];
    means_[m].push_back(0.0);
    for (std::uint32_t i = 1; static_cast<std::size_t>(m) * i < top; ++i) means_[m].push_back(a_pow[m * i] / i);
    hazard_[m].assign(means_[m].size(), 0.0);
    for (std::size_t i = 1; i < means_[m].size(); ++i) hazard_[m][i] = hazard_[m][i - 1] + means_[m][i];

    Split& sp = split_[m];
    const double mu1 = means_[m][1];
    double p = std::exp(-mu1), acc = 0;
    for (std::uint64_t g = 0; g < 200; ++g) {
      if (g) p *= mu1 / static_cast<double>(g);
      acc += p;
      sp.cdf_plain.push_back(acc);
      if (g >= 2) sp.cdf_at_least_two.push_back(acc - sp.cdf_plain[1]);
      if (g >= 3 && p < 1e-18) break;
    }
    const double at_least_two = -std::expm1(-mu1) - mu1 * std::exp(-mu1);
    const double lam2 = hazard_[m].back() - hazard_[m][1];
    sp.replicated_nonzero = -std::expm1(-lam2);
    sp.p_replicated = sp.replicated_nonzero / (sp.replicated_nonzero + std::exp(-lam2) * at_least_two);
  }
}

void BoltzmannSampler::draw_groups(std::uint32_t m, Rng& rng,
                                   std::vector<std::pair<std::uint32_t, std::uint64_t>>& groups) const {
  // The counts gamma_i ~ Poisson(means_[m][i]) are conditioned on
  // sum_i i gamma_i >= 2. Either some gamma_i with i >= 2 is positive (then
  // gamma_1 is unconstrained) or none is and gamma_1 >= 2.
  const auto& mu = means_[m];
  const auto& hz = hazard_[m];
  const auto& sp = split_[m];
  const std::size_t top = mu.size() - 1;
  groups.clear();
  if (top < 2 || rng.uniform() >= sp.p_replicated) {
    groups.emplace_back(1, 2 + rng.discrete(sp.cdf_at_least_two));
    return;
  }
  const std::uint64_t g1 = rng.discrete(sp.cdf_plain);
  if (g1) groups.emplace_back(1, g1);
  // Orders i >= 2 with a positive count: exponential gaps along the
  // cumulative hazard hz[i] = sum_{j<=i} mu_j; the first gap is truncated so
  // that at least one order is hit.
  double target = hz[1] - std::log1p(-rng.uniform() * sp.replicated_nonzero);
  std::size_t i = 1;
  for (;;) {
    std::size_t j = i + 1;
    while (j < top && hz[j] < target) ++j;
    groups.emplace_back(static_cast<std::uint32_t>(j), positive_poisson(rng, mu[j]));
    i = j;
    if (i == top) return;
    target = hz[i] - std::log1p(-rng.uniform());
    if (target > hz[top]) return;
  }
}

bool BoltzmannSampler::grow(Tree& t, NodeId parent, std::uint32_t m, Rng& rng, std::size_t cap,
                            std::size_t& leaves) const {
  std::vector<std::pair<NodeId, std::uint32_t>> tasks{{parent, m}};
  std::vector<std::pair<std::uint32_t, std::uint64_t>> groups;
  while (!tasks.empty()) {
    const auto [p, mm] = tasks.back();
    tasks.pop_back();
    const Color color = mm == 1 ? Color::blue : Color::green;
    const NodeId v = p == kNoNode ? t.add_root(Sign::none, 0, color) : t.add_child(p, Sign::none, 0, color);
    if (mm >= max_power_ || rng.uniform() < leaf_prob_[mm]) {
      ++leaves;
      if (cap && leaves > cap) return false;
      continue;
    }
    draw_groups(mm, rng, groups);
    for (const auto& [i, g] : groups)
      for (std::uint64_t c = 0; c < g; ++c) {
        if (i == 1) {
          tasks.emplace_back(v, mm);
          continue;
        }
        // One draw at x^{mm i}, replicated i times.
        Tree part;
        std::size_t part_leaves = 0;
        if (!grow(part, kNoNode, mm * i, rng, 0, part_leaves)) return false;
        for (std::uint32_t r = 0; r < i; ++r) t.copy_subtree(v, part, part.root());
        leaves += part_leaves * i;
        if (cap && leaves > cap) return false;
      }
  }
  return true;
}

// Mirrors grow() draw for draw.
bool BoltzmannSampler::count(std::uint32_t m, Rng& rng, std::size_t cap, std::size_t& leaves) const {
  std::vector<std::uint32_t> tasks{m};
  std::vector<std::pair<std::uint32_t, std::uint64_t>> groups;
  while (!tasks.empty()) {
    const std::uint32_t mm = tasks.back();
    tasks.pop_back();
    if (mm >= max_power_ || rng.uniform() < leaf_prob_[mm]) {
      ++leaves;
      if (cap && leaves > cap) return false;
      continue;
    }
    draw_groups(mm, rng, groups);
    for (const auto& [i, g] : groups)
      for (std::uint64_t c = 0; c < g; ++c) {
        if (i == 1) {
          tasks.push_back(mm);
          continue;
        }
        std::size_t part_leaves = 0;
        count(mm * i, rng, 0, part_leaves);
        leaves += part_leaves * i;
        if (cap && leaves > cap) return false;
      }
  }
  return true;
}

std::size_t BoltzmannSampler::sample_size(Rng& rng, std::size_t leaf_cap) const {
  std::size_t leaves = 0;
  if (!count(1, rng, leaf_cap, leaves)) return leaf_cap + 1;
  return leaves;
}

std::optional<Tree> BoltzmannSampler::sample(Rng& rng, std::size_t leaf_cap) const {
  Tree t;
  std::size_t leaves = 0;
  if (!grow(t, kNoNode, 1, rng, leaf_cap, leaves)) return std::nullopt;
  return t;
}

std::pair<std::uint32_t, std::uint32_t> blue_green_offspring(const Tree& t, NodeId v) {
  std::uint32_t blue = 0, green = 0;
  for (NodeId c : t.children(v)) {
    if (t.node(c).color == Color::blue) {
      ++blue;
      continue;
    }
    std::vector<NodeId> stack{c};
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      if (t.is_leaf(u)) ++green;
      for (NodeId w : t.children(u)) stack.push_back(w);
    }
  }
  return {blue, green};
}

Tree two_type_reduction(const Tree& t) {
  Tree out;
  if (t.empty()) return out;
  std::vector<std::pair<NodeId, NodeId>> stack{{t.root(), kNoNode}};
  while (!stack.empty()) {
    const auto [v, parent] = stack.back();
    stack.pop_back();
    const NodeId w = parent == kNoNode ? out.add_root() : out.add_child(parent);
    const auto [blue, green] = blue_green_offspring(t, v);
    (void)blue;
    for (std::uint32_t i = 0; i < green; ++i) out.add_child(w, Sign::none, 0, Color::green);
    for (NodeId c : t.children(v))
      if (t.node(c).color == Color::blue) stack.emplace_back(c, w);
  }
  return out;
}

Tree sample_conditioned_polya_tree(std::size_t n, const BoltzmannSampler& sampler, Rng& rng,
                                   const SampleBudget& budget, std::uint64_t* attempts) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::size_t lo = n, hi = n;
  if (budget.size_window) {
    const double eps = *budget.size_window;
    if (eps < 0 || eps >= 1) throw std::invalid_argument("size window must lie in [0, 1)");
    lo = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * (1 - eps)));
    hi = static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1 + eps)));
  }
  // Sizes are screened by a dry run; the accepted attempt is replayed from
  // its saved generator state to build the tree.
  for (std::uint64_t attempt = 1; attempt <= budget.max_attempts; ++attempt) {
    const Rng saved = rng;
    const std::size_t l = sampler.sample_size(rng, hi);
    if (l < lo || l > hi) continue;
    Rng replay = saved;
    auto t = sampler.sample(replay, hi);
    if (!t || t->leaf_count() != l) throw std::logic_error("Boltzmann replay diverged");
    if (attempts) *attempts = attempt;
    return std::move(*t);
  }
  throw BudgetExhausted(budget.max_attempts);
}

CographSample sample_unlabelled_cograph(std::size_t n, const BoltzmannSampler& sampler, Rng& rng,
                                        const SampleBudget& budget) {
  if (n < 3) throw std::invalid_argument("unlabelled cographs need n >= 3");
  CographSample out;
  out.tree = sample_conditioned_polya_tree(n, sampler, rng, budget, &out.attempts);
  out.cotree = canonicalize(out.tree);
  const std::size_t leaves = out.cotree.leaf_count();
  std::vector<std::int32_t> labels(leaves);
  for (std::size_t i = 0; i < leaves; ++i) labels[i] = static_cast<std::int32_t>(i + 1);
  label_leaves(out.cotree, labels);
  assign_alternating_signs(out.cotree, rng.bernoulli(0.5) ? Sign::plus : Sign::minus);
  out.graph = cotree_to_cograph(out.cotree);
  return out;
}

// ---- exhaustive oracles ---------------------------------------------------

namespace {

std::string join_children(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s.push_back(',');
    s += parts[i];
  }
  s.push_back(')');
  return s;
}

}  // namespace

std::vector<std::string> enumerate_unlabelled_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > 12) throw std::invalid_argument("enumeration is capped at 12 leaves");
  std::vector<std::vector<std::string>> by_size(n + 1);
  by_size[1] = {"*"};
  // Items of all smaller sizes in a fixed order; multisets are nondecreasing
  // index sequences.
  std::vector<std::pair<std::size_t, const std::string*>> items;
  for (std::size_t s = 2; s <= n; ++s) {
    items.clear();
    for (std::size_t t = 1; t < s; ++t)
      for (const auto& str : by_size[t]) items.emplace_back(t, &str);
    std::vector<std::string> chosen;
    std::vector<std::string> result;
    auto rec = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
      if (remaining == 0) {
        if (chosen.size() >= 2) result.push_back(join_children(chosen));
        return;
      }
      for (std::size_t i = start; i < items.size(); ++i) {
        if (items[i].first > remaining) continue;
        chosen.push_back(*items[i].second);
        self(self, i, remaining - items[i].first);
        chosen.pop_back();
      }
    };
    rec(rec, 0, s);
    std::sort(result.begin(), result.end());
    by_size[s] = std::move(result);
  }
  return by_size[n];
}

std::vector<std::string> enumerate_labelled_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > 8) throw std::invalid_argument("enumeration is capped at 8 leaves");
  const std::uint32_t full = (1U << n) - 1;
  std::map<std::uint32_t, std::vector<std::string>> memo;
  auto trees = [&](auto&& self, std::uint32_t mask) -> const std::vector<std::string>& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::vector<std::string> out;
    if (std::popcount(mask) == 1) {
      out.push_back(std::to_string(std::countr_zero(mask) + 1));
      return memo.emplace(mask, std::move(out)).first->second;
    }
    // Set partitions of `mask` into at least two blocks, block of the lowest
    // element first.
    std::vector<std::uint32_t> blocks;
    auto partitions = [&](auto&& rec, std::uint32_t rest) -> void {
      if (rest == 0) {
        if (blocks.size() < 2) return;
        std::vector<std::string> chosen;
        auto product = [&](auto&& prod, std::size_t b) -> void {
          if (b == blocks.size()) {
            out.push_back(join_children(chosen));
            return;
          }
          for (const auto& s : self(self, blocks[b])) {
            chosen.push_back(s);
            prod(prod, b + 1);
            chosen.pop_back();
          }
        };
        product(product, 0);
        return;
      }
      const std::uint32_t low = rest & (~rest + 1);
      const std::uint32_t others = rest ^ low;
      for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
        const std::uint32_t block = sub | low;
        if (block != mask) {
          blocks.push_back(block);
          rec(rec, rest ^ block);
          blocks.pop_back();
        }
        if (sub == 0) break;
      }
    };
    partitions(partitions, mask);
    std::sort(out.begin(), out.end());
    return memo.emplace(mask, std::move(out)).first->second;
  };
  return trees(trees, full);
}

}  // namespace cograph
