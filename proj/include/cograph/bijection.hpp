#pragma once

// Correspondence between cotrees and cographs, the LCA-sign map for
// generalized cotrees, and cograph recognition.

#include <stdexcept>

#include "cograph/graph.hpp"
#include "cograph/trees.hpp"

namespace cograph {

class NotACograph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Union at minus-nodes, join at plus-nodes; a single leaf is one vertex.
// Requires a valid cotree with leaves labelled 1..n.
LabeledGraph cotree_to_cograph(const Tree& cotree);

// Graph on the leaves of a generalized cotree: u ~ v iff the lowest common
// ancestor of u and v carries a plus sign.
LabeledGraph gen_cotree_to_graph(const Tree& generalized);

// Inverse of cotree_to_cograph, returned in canonical form. Splits on the
// components of the graph (minus-node) or of its complement (plus-node).
// Throws NotACograph when both are connected on two or more vertices.
Tree cograph_to_cotree(const LabeledGraph& g);

bool is_cograph(const LabeledGraph& g);

}  // namespace cograph
