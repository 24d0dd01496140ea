#pragma once

// Subtree spanned by the root and k chosen leaves, reduced to its essential
// vertices (root, the leaves, their pairwise lowest common ancestors).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cograph/trees.hpp"

namespace cograph {

struct SkeletonSummary {
  // Proper iff the reduced tree is a proper k-tree: root of outdegree one,
  // every other internal essential vertex of outdegree two.
  bool proper = false;
  // Reduced plane tree (children in the order of the original tree); the
  // i-th chosen leaf carries label i.
  Tree shape;
  // Path length in the original tree behind each edge of the shape, edges
  // listed by their lower endpoint in shape preorder.
  std::vector<std::uint32_t> distances;
  std::vector<std::uint8_t> parities;         // distances mod 2
  std::vector<std::uint8_t> height_parities;  // depth mod 2 of the same lower endpoints
  std::size_t essential_count = 0;
};

// Throws std::invalid_argument on non-leaf or repeated input.
SkeletonSummary spanned_skeleton(const Tree& t, const std::vector<NodeId>& leaves);

// (1 * 3 * ... * (2k-3)) * s * exp(-s^2/2) with s the coordinate sum; all
// coordinates must be positive and x.size() == 2k - 1.
double h_density(std::span<const double> x, std::size_t k);

// Positive 1/2-stable density (2 pi)^{-1/2} x^{-3/2} exp(-1/(2x)).
double stable_density(double x);

}  // namespace cograph
