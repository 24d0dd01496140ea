#pragma once

// Finite simple graphs on the vertex set {1, ..., n}, stored as a dense
// bit matrix.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cograph {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::uint32_t n);
  LabeledGraph(std::uint32_t n, std::span<const Edge> edges);

  std::uint32_t n() const { return n_; }

  // Vertices are 1-based. Loops are rejected.
  void add_edge(std::uint32_t u, std::uint32_t v);
  void remove_edge(std::uint32_t u, std::uint32_t v);
  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    const std::size_t i = (u - 1) * words_ + (v - 1) / 64;
    return (bits_[i] >> ((v - 1) % 64)) & 1U;
  }

  // Sorted list of pairs (u, v) with u < v.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::uint32_t degree(std::uint32_t v) const;
  std::vector<std::uint32_t> neighbours(std::uint32_t v) const;

  LabeledGraph complement() const;
  // G(v_1, ..., v_k): vertex i adjacent to j iff v_i adjacent to v_j.
  LabeledGraph induced(std::span<const std::uint32_t> vertices) const;
  // Same vertex set, vertex v renamed to perm[v-1].
  LabeledGraph relabelled(std::span<const std::uint32_t> perm) const;

  bool operator==(const LabeledGraph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

  // Row words of the adjacency matrix (row u is vertex u+1).
  std::span<const std::uint64_t> row(std::uint32_t u) const {
    return {bits_.data() + (u - 1) * words_, words_};
  }

 private:
  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Patterns on [k] for k <= 11 encoded as bitmasks over the vertex pairs in
// lexicographic order (1,2), (1,3), ..., (1,k), (2,3), ... .
using PatternMask = std::uint64_t;
inline constexpr std::uint32_t kMaxPatternVertices = 11;

std::uint32_t pair_index(std::uint32_t k, std::uint32_t u, std::uint32_t v);
PatternMask pattern_of(const LabeledGraph& g);
LabeledGraph graph_of_pattern(std::uint32_t k, PatternMask mask);
// Key used in fingerprint tables: sorted edge list, e.g. "1-2,1-3"; "" when empty.
std::string pattern_key(std::uint32_t k, PatternMask mask);
PatternMask pattern_from_key(std::uint32_t k, const std::string& key);

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);
// Plain text: header line "n=<int>", then one "u v" pair per line.
std::string graph_to_edge_list(const LabeledGraph& g);
LabeledGraph graph_from_edge_list(const std::string& text);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<std::uint32_t>> connected_components(const LabeledGraph& g);

}  // namespace cograph
