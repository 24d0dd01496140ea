#pragma once

// Rooted trees with index-based node storage.
//
// One Tree type carries every tree flavour used in the library: cotrees
// (signed internal nodes, alternating), generalized cotrees (signed, no
// alternation), unsigned unordered trees of the class where internal
// outdegree is at least two, two-type blue/green trees produced by the
// Boltzmann sampler, and planted proper k-trees. Children are kept in an
// ordered sibling list so plane trees keep their embedding; unordered
// operations go through canonicalize().

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cograph {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class Sign : std::uint8_t { none, plus, minus };
enum class Color : std::uint8_t { blue, green };

inline Sign flip(Sign s) {
  return s == Sign::plus ? Sign::minus : (s == Sign::minus ? Sign::plus : Sign::none);
}

struct Node {
  NodeId parent = kNoNode;
  NodeId first_child = kNoNode;
  NodeId last_child = kNoNode;
  NodeId next_sibling = kNoNode;
  std::uint32_t child_count = 0;
  std::uint32_t depth = 0;
  std::int32_t label = 0;  // 0 means unlabelled
  Sign sign = Sign::none;
  Color color = Color::blue;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvalidTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Tree {
 public:
  class ChildIterator {
   public:
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    ChildIterator() = default;
    ChildIterator(const Tree* tree, NodeId id) : tree_(tree), id_(id) {}
    NodeId operator*() const { return id_; }
    ChildIterator& operator++() {
      id_ = tree_->nodes_[id_].next_sibling;
      return *this;
    }
    ChildIterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const ChildIterator& other) const { return id_ == other.id_; }

   private:
    const Tree* tree_ = nullptr;
    NodeId id_ = kNoNode;
  };

  struct ChildRange {
    ChildIterator first;
    ChildIterator last;
    ChildIterator begin() const { return first; }
    ChildIterator end() const { return last; }
  };

  Tree() = default;

  NodeId add_root(Sign sign = Sign::none, std::int32_t label = 0, Color color = Color::blue);
  NodeId add_child(NodeId parent, Sign sign = Sign::none, std::int32_t label = 0,
                   Color color = Color::blue);
  // Appends a deep copy of the subtree at `source` below `parent`; source
  // and destination may be the same tree.
  NodeId copy_subtree(NodeId parent, const Tree& source_tree, NodeId source);

  void reserve(std::size_t n) { nodes_.reserve(n); }
  void clear() {
    nodes_.clear();
    root_ = kNoNode;
  }

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  Node& mutable_node(NodeId id) { return nodes_.at(id); }
  const std::vector<Node>& nodes() const { return nodes_; }

  bool contains(NodeId id) const { return id < nodes_.size(); }
  bool is_leaf(NodeId id) const { return nodes_[id].child_count == 0; }
  ChildRange children(NodeId id) const {
    return {ChildIterator(this, nodes_[id].first_child), ChildIterator(this, kNoNode)};
  }
  std::vector<NodeId> child_list(NodeId id) const;
  // Replaces the sibling order of `id`; `order` must be a permutation of its children.
  void set_child_order(NodeId id, const std::vector<NodeId>& order);

  std::vector<NodeId> preorder() const;
  // Leaves in preorder (left to right).
  std::vector<NodeId> leaves() const;
  std::size_t leaf_count() const;
  std::uint32_t height() const;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

// Result of parsing the textual tree grammar
//   item := leaf | node ; leaf := integer | '*' ; node := ('+'|'-')? '(' item (',' item)+ ')'
// The unsigned node form covers unordered shapes; whitespace is ignored.
struct ParsedTree {
  Tree tree;
  bool is_signed = false;    // every internal node carries a sign
  bool alternating = false;  // signed and signs alternate along root-to-leaf paths
};

ParsedTree parse_cotree(std::string_view text);

// Canonical serialization: children sorted by the lexicographic order of
// their own canonical serialization. Round-trips with parse_cotree.
std::string serialize_cotree(const Tree& tree);
std::string serialize_subtree(const Tree& tree, NodeId id);
// Serialization that keeps the stored child order (plane trees). Allows
// internal nodes of outdegree one, so it also covers planted proper k-trees.
std::string plane_string(const Tree& tree);

Tree canonicalize(const Tree& tree);

NodeId lca(const Tree& tree, NodeId u, NodeId v);

bool is_alternating(const Tree& tree);
bool all_internal_signed(const Tree& tree);
bool min_outdegree_two(const Tree& tree);
// Leaf labels form a permutation of 1..#leaves.
bool labels_are_permutation(const Tree& tree);

// Throws InvalidTree when outdegree, alternation or labelling fails.
void validate_cotree(const Tree& tree);
void validate_generalized_cotree(const Tree& tree);

// Gives the root `root_sign` and every other internal node the root sign
// exactly when its depth is even.
void assign_alternating_signs(Tree& tree, Sign root_sign);
// Writes labels[i] onto the i-th leaf in preorder.
void label_leaves(Tree& tree, const std::vector<std::int32_t>& labels);
// Returns the leaf carrying `label`, or kNoNode.
NodeId find_leaf(const Tree& tree, std::int32_t label);

nlohmann::json to_json(const Tree& tree);
Tree tree_from_json(const nlohmann::json& j);

}  // namespace cograph
