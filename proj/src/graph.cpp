#include "cograph/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cograph {

LabeledGraph::LabeledGraph(std::uint32_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

LabeledGraph::LabeledGraph(std::uint32_t n, std::span<const Edge> edges) : LabeledGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void LabeledGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (u < 1 || v < 1 || u > n_ || v > n_) throw std::out_of_range("vertex out of range");
  bits_[(u - 1) * words_ + (v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
  bits_[(v - 1) * words_ + (u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
}

void LabeledGraph::remove_edge(std::uint32_t u, std::uint32_t v) {
  if (u < 1 || v < 1 || u > n_ || v > n_) throw std::out_of_range("vertex out of range");
  bits_[(u - 1) * words_ + (v - 1) / 64] &= ~(std::uint64_t{1} << ((v - 1) % 64));
  bits_[(v - 1) * words_ + (u - 1) / 64] &= ~(std::uint64_t{1} << ((u - 1) % 64));
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t u = 1; u <= n_; ++u)
    for (std::uint32_t v = u + 1; v <= n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::size_t LabeledGraph::edge_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::uint32_t LabeledGraph::degree(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (auto w : row(v)) d += static_cast<std::uint32_t>(std::popcount(w));
  return d;
}

std::vector<std::uint32_t> LabeledGraph::neighbours(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + b + 1));
      bits &= bits - 1;
    }
  }
  return out;
}

LabeledGraph LabeledGraph::complement() const {
  LabeledGraph c(n_);
  for (std::uint32_t u = 1; u <= n_; ++u)
    for (std::uint32_t v = u + 1; v <= n_; ++v)
      if (!has_edge(u, v)) c.add_edge(u, v);
  return c;
}

LabeledGraph LabeledGraph::induced(std::span<const std::uint32_t> vertices) const {
  const auto k = static_cast<std::uint32_t>(vertices.size());
  LabeledGraph h(k);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(i + 1, j + 1);
  return h;
}

LabeledGraph LabeledGraph::relabelled(std::span<const std::uint32_t> perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation has wrong length");
  LabeledGraph h(n_);
  for (const auto& [u, v] : edges()) h.add_edge(perm[u - 1], perm[v - 1]);
  return h;
}

std::uint32_t pair_index(std::uint32_t k, std::uint32_t u, std::uint32_t v) {
  if (u > v) std::swap(u, v);
  // Pairs before row u: sum_{i<u} (k - i).
  const std::uint32_t before = (u - 1) * k - (u - 1) * u / 2;
  return before + (v - u - 1);
}

PatternMask pattern_of(const LabeledGraph& g) {
  if (g.n() > kMaxPatternVertices) throw std::invalid_argument("pattern too large");
  PatternMask m = 0;
  for (std::uint32_t u = 1; u <= g.n(); ++u)
    for (std::uint32_t v = u + 1; v <= g.n(); ++v)
      if (g.has_edge(u, v)) m |= PatternMask{1} << pair_index(g.n(), u, v);
  return m;
}

LabeledGraph graph_of_pattern(std::uint32_t k, PatternMask mask) {
  LabeledGraph g(k);
  for (std::uint32_t u = 1; u <= k; ++u)
    for (std::uint32_t v = u + 1; v <= k; ++v)
      if ((mask >> pair_index(k, u, v)) & 1U) g.add_edge(u, v);
  return g;
}

std::string pattern_key(std::uint32_t k, PatternMask mask) {
  std::string out;
  for (std::uint32_t u = 1; u <= k; ++u)
    for (std::uint32_t v = u + 1; v <= k; ++v)
      if ((mask >> pair_index(k, u, v)) & 1U) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(u) + "-" + std::to_string(v);
      }
  return out;
}

PatternMask pattern_from_key(std::uint32_t k, const std::string& key) {
  PatternMask m = 0;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad pattern key: " + key);
    const auto u = static_cast<std::uint32_t>(std::stoul(item.substr(0, dash)));
    const auto v = static_cast<std::uint32_t>(std::stoul(item.substr(dash + 1)));
    if (u == v || u < 1 || v < 1 || u > k || v > k) throw std::invalid_argument("bad pattern key: " + key);
    m |= PatternMask{1} << pair_index(k, u, v);
  }
  return m;
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto arr = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
  j["edges"] = std::move(arr);
  return j;
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
  LabeledGraph g(j.at("n").get<std::uint32_t>());
  for (const auto& e : j.at("edges")) {
    auto u = e.at(0).get<std::uint32_t>();
    auto v = e.at(1).get<std::uint32_t>();
    if (u >= v) throw std::invalid_argument("graph JSON edges must satisfy u < v");
    g.add_edge(u, v);
  }
  return g;
}

std::string graph_to_edge_list(const LabeledGraph& g) {
  std::string out = "n=" + std::to_string(g.n()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

LabeledGraph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
    throw std::invalid_argument("edge list must start with a header line n=<int>");
  LabeledGraph g(static_cast<std::uint32_t>(std::stoul(header.substr(2))));
  std::uint32_t u = 0, v = 0;
  while (in >> u >> v) g.add_edge(u, v);
  if (!in.eof()) throw std::invalid_argument("malformed edge line");
  return g;
}

std::vector<std::vector<std::uint32_t>> connected_components(const LabeledGraph& g) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(g.n() + 1, 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 1; s <= g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace cograph
