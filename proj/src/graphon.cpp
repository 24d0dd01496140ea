#include "cograph/graphon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cograph/samplers.hpp"

namespace cograph {

DensityEstimate t_ind_exact(const LabeledGraph& h, const LabeledGraph& g) {
  const std::uint32_t k = h.n();
  const std::uint32_t n = g.n();
  if (k > 5) throw std::invalid_argument("exact induced density supports k <= 5");
  if (n < k) throw std::invalid_argument("graph has fewer vertices than the pattern");
  DensityEstimate est;
  est.method = DensityEstimate::Method::exact;
  if (k == 0) {
    est.value = 1;
    return est;
  }
  // Ordered tuples extended one vertex at a time, pruning on the first
  // adjacency that disagrees with h.
  std::vector<std::uint32_t> tuple;
  std::vector<char> used(n + 1, 0);
  std::uint64_t hits = 0;
  auto rec = [&](auto&& self) -> void {
    const auto i = static_cast<std::uint32_t>(tuple.size());
    if (i == k) {
      ++hits;
      return;
    }
    for (std::uint32_t v = 1; v <= n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::uint32_t j = 0; j < i && ok; ++j) ok = g.has_edge(tuple[j], v) == h.has_edge(j + 1, i + 1);
      if (!ok) continue;
      used[v] = 1;
      tuple.push_back(v);
      self(self);
      tuple.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  double total = 1;
  for (std::uint32_t i = 0; i < k; ++i) total *= static_cast<double>(n - i);
  est.value = static_cast<double>(hits) / total;
  est.reps = static_cast<std::uint64_t>(total);
  return est;
}

PatternMask sample_pattern(const LabeledGraph& g, std::uint32_t k, Rng& rng) {
  if (g.n() < k) throw std::invalid_argument("graph has fewer vertices than the pattern");
  if (k > kMaxPatternVertices) throw std::invalid_argument("pattern too large");
  const auto picks = rng.sample_distinct(g.n(), k);
  PatternMask m = 0;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (g.has_edge(static_cast<std::uint32_t>(picks[i] + 1), static_cast<std::uint32_t>(picks[j] + 1)))
        m |= PatternMask{1} << pair_index(k, i + 1, j + 1);
  return m;
}

namespace {

DensityEstimate binomial(std::uint64_t hits, std::uint64_t reps) {
  DensityEstimate est;
  est.method = DensityEstimate::Method::montecarlo;
  est.reps = reps;
  est.value = static_cast<double>(hits) / static_cast<double>(reps);
  est.std_error = std::sqrt(est.value * (1 - est.value) / static_cast<double>(reps));
  return est;
}

}  // namespace

DensityEstimate t_ind_mc(const LabeledGraph& h, const LabeledGraph& g, std::uint64_t reps, Rng& rng) {
  if (reps == 0) throw std::invalid_argument("reps must be positive");
  const PatternMask target = pattern_of(h);
  std::uint64_t hits = 0;
  for (std::uint64_t r = 0; r < reps; ++r) hits += sample_pattern(g, h.n(), rng) == target;
  return binomial(hits, reps);
}

DensityEstimate t_ind_graphon_mc(const LabeledGraph& h, const LabeledGraph& g, std::uint64_t reps, Rng& rng) {
  if (reps == 0) throw std::invalid_argument("reps must be positive");
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  const std::uint32_t k = h.n();
  const PatternMask target = pattern_of(h);
  std::vector<std::uint32_t> pts(k);
  std::uint64_t hits = 0;
  for (std::uint64_t r = 0; r < reps; ++r) {
    for (auto& v : pts) v = static_cast<std::uint32_t>(std::min<double>(std::floor(rng.uniform() * g.n()), g.n() - 1)) + 1;
    PatternMask m = 0;
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = i + 1; j < k; ++j)
        if (pts[i] != pts[j] && g.has_edge(pts[i], pts[j])) m |= PatternMask{1} << pair_index(k, i + 1, j + 1);
    hits += m == target;
  }
  return binomial(hits, reps);
}

LimitFingerprint LimitFingerprint::compute(std::uint32_t k) {
  if (k < 1 || k > 7) throw std::invalid_argument("k out of range");
  LimitFingerprint f;
  f.k_ = k;
  const auto trees = enumerate_proper_k_trees(k);
  f.tree_count_ = trees.size();
  if (k == 1) {
    f.counts_[0] = {1};
    return f;
  }
  const std::uint32_t pairs = k * (k - 1) / 2;
  for (const Tree& planted : trees) {
    const Tree d = snip_root(planted);
    // Index of every internal vertex, and the internal vertex at the LCA of
    // each leaf pair.
    std::vector<int> internal(d.size(), -1);
    int next = 0;
    for (NodeId v = 0; v < d.size(); ++v)
      if (!d.is_leaf(v)) internal[v] = next++;
    std::vector<NodeId> leaf_of(k + 1, kNoNode);
    for (NodeId v : d.leaves()) leaf_of[static_cast<std::size_t>(d.node(v).label)] = v;
    std::vector<int> pair_lca(pairs);
    for (std::uint32_t u = 1; u <= k; ++u)
      for (std::uint32_t v = u + 1; v <= k; ++v) pair_lca[pair_index(k, u, v)] = internal[lca(d, leaf_of[u], leaf_of[v])];
    for (std::uint32_t signs = 0; signs < (1U << (k - 1)); ++signs) {
      PatternMask m = 0;
      for (std::uint32_t e = 0; e < pairs; ++e)
        if ((signs >> pair_lca[e]) & 1U) m |= PatternMask{1} << e;
      auto& c = f.counts_[m];
      if (c.empty()) c.assign(k, 0);
      ++c[static_cast<std::size_t>(std::popcount(signs))];
    }
  }
  return f;
}

Rational LimitFingerprint::q(PatternMask h, const Rational& p) const {
  const auto it = counts_.find(h);
  if (it == counts_.end()) return Rational(0);
  Rational total = 0;
  const Rational one_minus = Rational(1) - p;
  for (std::size_t j = 0; j < it->second.size(); ++j) {
    if (it->second[j] == 0) continue;
    Rational term(static_cast<unsigned long long>(it->second[j]));
    for (std::size_t a = 0; a < j; ++a) term *= p;
    for (std::size_t b = j; b + 1 < k_; ++b) term *= one_minus;
    total += term;
  }
  return total / Rational(static_cast<unsigned long long>(tree_count_));
}

std::map<PatternMask, Rational> LimitFingerprint::table(const Rational& p) const {
  std::map<PatternMask, Rational> out;
  for (const auto& [m, c] : counts_) {
    (void)c;
    const Rational v = q(m, p);
    if (v != 0) out.emplace(m, v);
  }
  return out;
}

std::map<PatternMask, Rational> q_exact(std::uint32_t k, const Rational& p) {
  if (k < 2 || k > 6) throw std::invalid_argument("q_exact supports 2 <= k <= 6");
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0, 1)");
  return LimitFingerprint::compute(k).table(p);
}

nlohmann::json fingerprint_to_json(std::uint32_t k, const Rational& p, const std::map<PatternMask, Rational>& table) {
  nlohmann::json j;
  j["k"] = k;
  j["p"] = to_string(p);
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [m, q] : table) t[pattern_key(k, m)] = to_string(q);
  j["table"] = std::move(t);
  return j;
}

double total_variation(const std::map<PatternMask, std::uint64_t>& counts,
                       const std::map<PatternMask, Rational>& exact) {
  double n = 0;
  for (const auto& [m, c] : counts) n += static_cast<double>(c);
  std::map<PatternMask, double> a, b;
  for (const auto& [m, c] : counts) a[m] = static_cast<double>(c) / n;
  for (const auto& [m, q] : exact) b[m] = static_cast<double>(to_real(q));
  return total_variation(a, b);
}

double total_variation(const std::map<PatternMask, double>& a, const std::map<PatternMask, double>& b) {
  double s = 0;
  for (const auto& [m, v] : a) {
    const auto it = b.find(m);
    s += std::abs(v - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [m, v] : b)
    if (!a.count(m)) s += std::abs(v);
  return s / 2;
}

PatternMask iso_class(std::uint32_t k, PatternMask mask) {
  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 1U);
  PatternMask best = mask;
  do {
    PatternMask m = 0;
    for (std::uint32_t u = 1; u <= k; ++u)
      for (std::uint32_t v = u + 1; v <= k; ++v)
        if ((mask >> pair_index(k, u, v)) & 1U) m |= PatternMask{1} << pair_index(k, perm[u - 1], perm[v - 1]);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

StepGraphon step_graphon_matrix(const LabeledGraph& g, VertexOrder order) {
  StepGraphon w;
  w.order.resize(g.n());
  std::iota(w.order.begin(), w.order.end(), 1U);
  if (order == VertexOrder::degree) {
    std::vector<std::uint32_t> deg(g.n() + 1);
    for (std::uint32_t v = 1; v <= g.n(); ++v) deg[v] = g.degree(v);
    std::stable_sort(w.order.begin(), w.order.end(), [&](auto a, auto b) { return deg[a] > deg[b]; });
  }
  w.matrix.assign(g.n(), std::vector<std::uint8_t>(g.n(), 0));
  for (std::uint32_t i = 0; i < g.n(); ++i)
    for (std::uint32_t j = 0; j < g.n(); ++j)
      if (i != j && g.has_edge(w.order[i], w.order[j])) w.matrix[i][j] = 1;
  return w;
}

std::string to_csv(const StepGraphon& w) {
  std::string out;
  for (const auto& row : w.matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out.push_back(',');
      out.push_back(row[j] ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string to_pgm(const StepGraphon& w) {
  const std::size_t n = w.matrix.size();
  std::string out = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  for (const auto& row : w.matrix)
    for (auto x : row) out.push_back(static_cast<char>(x ? 0 : 255));
  return out;
}

}  // namespace cograph
