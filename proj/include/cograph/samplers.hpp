#pragma once

// Random generators for the tree models behind random cographs and for the
// limit objects (proper k-trees and the random graphs H_k^p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cograph/constants.hpp"
#include "cograph/graph.hpp"
#include "cograph/numeric.hpp"
#include "cograph/rng.hpp"
#include "cograph/trees.hpp"

namespace cograph {

struct SampleBudget {
  std::uint64_t max_attempts = 100'000'000;
  // Accept sizes with |leaves - n| <= size_window * n instead of exact n.
  std::optional<double> size_window;
};

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t attempts)
      : std::runtime_error("sample budget exhausted after " + std::to_string(attempts) + " attempts"),
        attempts_(attempts) {}
  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

// ---- labelled model -------------------------------------------------------

// Outdegree law of the labelled model in double precision.
class EtaSampler {
 public:
  EtaSampler();
  std::uint32_t operator()(Rng& rng) const;
  double p0() const { return p0_; }
  double variance() const { return variance_; }

 private:
  std::vector<double> cumulative_;
  double p0_;
  double variance_;
};

const EtaSampler& eta_sampler();

// Unconditioned Galton-Watson tree with outdegree law eta (plane order).
// Returns nullopt once more than `leaf_cap` leaves have been produced
// (leaf_cap = 0 means no cap).
std::optional<Tree> sample_eta_gw_tree(Rng& rng, std::size_t leaf_cap = 0);
// Leaf count of an unconditioned tree without building it; values above
// `leaf_cap` are reported as leaf_cap + 1.
std::size_t sample_eta_gw_leaf_count(Rng& rng, std::size_t leaf_cap);

// Tree with exactly n leaves distributed as the eta Galton-Watson tree
// conditioned on n leaves. Draws i.i.d. outdegrees up to the n-th leaf,
// keeps the sequence when it encodes a forest of one tree, and rotates it
// to its unique Lukasiewicz word.
Tree sample_conditioned_eta_tree(std::size_t n, Rng& rng, const SampleBudget& budget = {},
                                 std::uint64_t* attempts = nullptr);

// Builds the plane tree whose preorder outdegree sequence is `word`.
Tree tree_from_lukasiewicz(const std::vector<std::uint32_t>& word);

struct CographSample {
  Tree tree;     // underlying tree (plane order as sampled)
  Tree cotree;   // signed, labelled cotree
  LabeledGraph graph;
  std::uint64_t attempts = 0;
};

// Uniform labelled cograph on [n].
CographSample sample_labelled_cograph(std::size_t n, Rng& rng, const SampleBudget& budget = {});

// ---- unlabelled model -----------------------------------------------------

// Boltzmann sampler for unlabelled trees with internal outdegree >= 2,
// P(A) = x^{leaves(A)} / A(x). Vertices created at parameter x are blue;
// those inside replicated parts (parameter x^i, i >= 2) are green.
class BoltzmannSampler {
 public:
  BoltzmannSampler(const PolyaContext& ctx, const Real& x);

  double x() const { return x_; }
  double leaf_probability() const { return leaf_prob_.at(1); }
  double A_x() const { return a_of_power_.at(1); }

  // nullopt when more than `leaf_cap` leaves would be produced (0 = no cap).
  std::optional<Tree> sample(Rng& rng, std::size_t leaf_cap = 0) const;
  // Leaf count of the tree sample() would build from the same generator
  // state, without building it; leaf_cap + 1 when the cap is exceeded.
  std::size_t sample_size(Rng& rng, std::size_t leaf_cap) const;

 private:
  // Subtree at parameter x^m appended below `parent` (kNoNode = new root).
  bool grow(Tree& t, NodeId parent, std::uint32_t m, Rng& rng, std::size_t cap, std::size_t& leaves) const;
  bool count(std::uint32_t m, Rng& rng, std::size_t cap, std::size_t& leaves) const;
  void draw_groups(std::uint32_t m, Rng& rng, std::vector<std::pair<std::uint32_t, std::uint64_t>>& groups) const;

  double x_;
  std::uint32_t max_power_;             // x^m below this power is treated as a leaf
  std::vector<double> a_of_power_;      // A(x^m)
  std::vector<double> leaf_prob_;       // x^m / A(x^m)
  std::vector<std::vector<double>> means_;  // means_[m][i] = A(x^{m i}) / i
  std::vector<std::vector<double>> hazard_;
  struct Split {
    double p_replicated = 0;         // P(some order i >= 2 is present | size >= 2)
    double replicated_nonzero = 0;   // P(some order i >= 2 is present)
    std::vector<double> cdf_plain;         // Poisson(mu_1)
    std::vector<double> cdf_at_least_two;  // Poisson(mu_1) given >= 2, from 2
  };
  std::vector<Split> split_;
};

// Blue and green offspring counts of a blue vertex: blue children and the
// number of leaves inside its green children.
std::pair<std::uint32_t, std::uint32_t> blue_green_offspring(const Tree& t, NodeId v);

// Collapses each green subtree into its leaves, attached as green childless
// vertices to the nearest blue ancestor.
Tree two_type_reduction(const Tree& t);

// Unlabelled tree with n leaves (or within the size window), as sampled:
// conditioned Boltzmann rejection at x = rho.
Tree sample_conditioned_polya_tree(std::size_t n, const BoltzmannSampler& sampler, Rng& rng,
                                   const SampleBudget& budget = {}, std::uint64_t* attempts = nullptr);

// Uniform unlabelled cograph with n >= 3 vertices. The cotree is canonical
// with leaves labelled 1..n in preorder; the graph is built from it.
CographSample sample_unlabelled_cograph(std::size_t n, const BoltzmannSampler& sampler, Rng& rng,
                                        const SampleBudget& budget = {});

// ---- exhaustive oracles ---------------------------------------------------

// All canonical unlabelled trees with n leaves (n <= 12), as canonical strings.
std::vector<std::string> enumerate_unlabelled_trees(std::size_t n);
// All labelled trees (leaves 1..n, unordered, internal outdegree >= 2) as
// canonical strings (n <= 8).
std::vector<std::string> enumerate_labelled_trees(std::size_t n);

// ---- proper k-trees and H_k^p --------------------------------------------

// Uniform proper k-tree: planted plane tree, internal outdegree 2 below the
// root, leaves labelled 1..k.
Tree sample_proper_k_tree(std::size_t k, Rng& rng);
// All 2^{k-1} (2k-3)!! proper k-trees (k <= 7).
std::vector<Tree> enumerate_proper_k_trees(std::size_t k);
std::uint64_t proper_tree_count(std::size_t k);
bool is_proper_k_tree(const Tree& t, std::size_t k);
// Removes the root and its edge.
Tree snip_root(const Tree& planted);
// H_k^p: snipped uniform proper k-tree, plus-signs i.i.d. with probability p.
LabeledGraph sample_Hkp(std::size_t k, double p, Rng& rng);

}  // namespace cograph
