#include "cograph/trees.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace cograph {

NodeId Tree::add_root(Sign sign, std::int32_t label, Color color) {
  if (root_ != kNoNode) throw InvalidTree("tree already has a root");
  Node n;
  n.sign = sign;
  n.label = label;
  n.color = color;
  nodes_.push_back(n);
  root_ = static_cast<NodeId>(nodes_.size() - 1);
  return root_;
}

NodeId Tree::add_child(NodeId parent, Sign sign, std::int32_t label, Color color) {
  const auto id = static_cast<NodeId>(nodes_.size());
  Node n;
  n.parent = parent;
  n.depth = nodes_[parent].depth + 1;
  n.sign = sign;
  n.label = label;
  n.color = color;
  nodes_.push_back(n);
  Node& p = nodes_[parent];
  if (p.last_child == kNoNode) {
    p.first_child = id;
  } else {
    nodes_[p.last_child].next_sibling = id;
  }
  p.last_child = id;
  ++p.child_count;
  return id;
}

NodeId Tree::copy_subtree(NodeId parent, const Tree& source_tree, NodeId source) {
  // Snapshot the source subtree first: when copying within the same tree
  // the node vector may reallocate during insertion.
  std::vector<std::pair<NodeId, Node>> order;
  {
    std::vector<NodeId> stack{source};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      order.emplace_back(v, source_tree.nodes_[v]);
      std::vector<NodeId> kids = source_tree.child_list(v);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
  }
  // Preorder guarantees parents are created before their children.
  std::unordered_map<NodeId, NodeId> mapping;  // source id -> new id
  mapping.reserve(order.size());
  NodeId top = kNoNode;
  for (const auto& [src, n] : order) {
    const NodeId dst_parent = (src == source) ? parent : mapping.at(n.parent);
    const NodeId id = add_child(dst_parent, n.sign, n.label, n.color);
    mapping.emplace(src, id);
    if (src == source) top = id;
  }
  return top;
}

std::vector<NodeId> Tree::child_list(NodeId id) const {
  std::vector<NodeId> out;
  out.reserve(nodes_[id].child_count);
  for (NodeId c = nodes_[id].first_child; c != kNoNode; c = nodes_[c].next_sibling) out.push_back(c);
  return out;
}

void Tree::set_child_order(NodeId id, const std::vector<NodeId>& order) {
  Node& p = nodes_.at(id);
  if (order.size() != p.child_count) throw InvalidTree("child order has wrong length");
  if (order.empty()) return;
  p.first_child = order.front();
  p.last_child = order.back();
  for (std::size_t i = 0; i + 1 < order.size(); ++i) nodes_[order[i]].next_sibling = order[i + 1];
  nodes_[order.back()].next_sibling = kNoNode;
}

std::vector<NodeId> Tree::preorder() const {
  std::vector<NodeId> out;
  if (root_ == kNoNode) return out;
  out.reserve(nodes_.size());
  std::vector<NodeId> stack{root_};
  std::vector<NodeId> kids;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    kids.clear();
    for (NodeId c = nodes_[v].first_child; c != kNoNode; c = nodes_[c].next_sibling) kids.push_back(c);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return out;
}

std::vector<NodeId> Tree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v : preorder())
    if (nodes_[v].child_count == 0) out.push_back(v);
  return out;
}

std::size_t Tree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.child_count == 0; }));
}

std::uint32_t Tree::height() const {
  std::uint32_t h = 0;
  for (const auto& n : nodes_) h = std::max(h, n.depth);
  return h;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedTree run() {
    ParsedTree out;
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty input", pos_);
    parse_item(out.tree, kNoNode);
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    out.is_signed = all_internal_signed(out.tree);
    out.alternating = out.is_signed && is_alternating(out.tree);
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  NodeId make(Tree& t, NodeId parent, Sign sign, std::int32_t label) {
    return parent == kNoNode ? t.add_root(sign, label) : t.add_child(parent, sign, label);
  }

  void parse_item(Tree& t, NodeId parent) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '*') {
      ++pos_;
      make(t, parent, Sign::none, 0);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::int64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > std::numeric_limits<std::int32_t>::max()) throw ParseError("label too large", start);
        ++pos_;
      }
      if (value <= 0) throw ParseError("leaf labels must be positive", start);
      make(t, parent, Sign::none, static_cast<std::int32_t>(value));
      return;
    }
    Sign sign = Sign::none;
    if (c == '+' || c == '-') {
      sign = c == '+' ? Sign::plus : Sign::minus;
      ++pos_;
      skip_ws();
    }
    const std::size_t open = pos_;
    if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    const NodeId self = make(t, parent, sign, 0);
    parse_item(t, self);
    std::size_t count = 1;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) throw ParseError("unterminated node", open);
      if (text_[pos_] == ',') {
        ++pos_;
        parse_item(t, self);
        ++count;
      } else if (text_[pos_] == ')') {
        ++pos_;
        break;
      } else {
        throw ParseError("expected ',' or ')'", pos_);
      }
    }
    if (count < 2) throw ParseError("internal node with fewer than 2 children", open);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

char sign_char(Sign s) { return s == Sign::plus ? '+' : (s == Sign::minus ? '-' : '\0'); }

// Canonical strings for every node, computed bottom-up without recursion.
std::vector<std::string> canonical_strings(const Tree& t) {
  std::vector<std::string> s(t.size());
  const auto order = t.preorder();
  std::vector<std::string> parts;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    const Node& n = t.node(v);
    if (n.child_count == 0) {
      s[v] = n.label > 0 ? std::to_string(n.label) : std::string("*");
      continue;
    }
    parts.clear();
    for (NodeId c : t.children(v)) parts.push_back(s[c]);
    std::sort(parts.begin(), parts.end());
    std::string out;
    if (const char sc = sign_char(n.sign)) out.push_back(sc);
    out.push_back('(');
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out.push_back(',');
      out += parts[i];
    }
    out.push_back(')');
    s[v] = std::move(out);
  }
  return s;
}

}  // namespace

ParsedTree parse_cotree(std::string_view text) { return Parser(text).run(); }

std::string serialize_cotree(const Tree& tree) {
  if (tree.empty()) return {};
  return canonical_strings(tree)[tree.root()];
}

std::string serialize_subtree(const Tree& tree, NodeId id) {
  return canonical_strings(tree)[id];
}

std::string plane_string(const Tree& tree) {
  if (tree.empty()) return {};
  std::string out;
  // Explicit stack of (node, next child); avoids deep recursion.
  std::vector<std::pair<NodeId, NodeId>> stack;
  auto open = [&](NodeId v) {
    const Node& n = tree.node(v);
    if (n.child_count == 0) {
      out += n.label > 0 ? std::to_string(n.label) : std::string("*");
      return false;
    }
    if (const char sc = sign_char(n.sign)) out.push_back(sc);
    out.push_back('(');
    stack.emplace_back(v, n.first_child);
    return true;
  };
  open(tree.root());
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next == kNoNode) {
      out.push_back(')');
      stack.pop_back();
      continue;
    }
    const NodeId c = next;
    if (c != tree.node(v).first_child) out.push_back(',');
    next = tree.node(c).next_sibling;
    open(c);
  }
  return out;
}

Tree canonicalize(const Tree& tree) {
  Tree out;
  if (tree.empty()) return out;
  const auto s = canonical_strings(tree);
  out.reserve(tree.size());
  const Node& r = tree.node(tree.root());
  out.add_root(r.sign, r.label, r.color);
  std::vector<std::pair<NodeId, NodeId>> stack{{tree.root(), out.root()}};
  while (!stack.empty()) {
    const auto [src, dst] = stack.back();
    stack.pop_back();
    auto kids = tree.child_list(src);
    std::stable_sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) { return s[a] < s[b]; });
    std::vector<std::pair<NodeId, NodeId>> created;
    for (NodeId c : kids) {
      const Node& n = tree.node(c);
      created.emplace_back(c, out.add_child(dst, n.sign, n.label, n.color));
    }
    for (auto it = created.rbegin(); it != created.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

NodeId lca(const Tree& tree, NodeId u, NodeId v) {
  if (!tree.contains(u) || !tree.contains(v)) throw std::out_of_range("node not in tree");
  while (tree.node(u).depth > tree.node(v).depth) u = tree.node(u).parent;
  while (tree.node(v).depth > tree.node(u).depth) v = tree.node(v).parent;
  while (u != v) {
    u = tree.node(u).parent;
    v = tree.node(v).parent;
  }
  return u;
}

bool all_internal_signed(const Tree& tree) {
  return std::all_of(tree.nodes().begin(), tree.nodes().end(),
                     [](const Node& n) { return n.child_count == 0 || n.sign != Sign::none; });
}

bool is_alternating(const Tree& tree) {
  for (const auto& n : tree.nodes()) {
    if (n.child_count == 0 || n.parent == kNoNode) continue;
    if (n.sign == Sign::none || n.sign == tree.node(n.parent).sign) return false;
  }
  return all_internal_signed(tree);
}

bool min_outdegree_two(const Tree& tree) {
  return std::all_of(tree.nodes().begin(), tree.nodes().end(),
                     [](const Node& n) { return n.child_count == 0 || n.child_count >= 2; });
}

bool labels_are_permutation(const Tree& tree) {
  std::vector<char> seen(tree.size() + 1, 0);
  std::size_t leaves = 0;
  for (const auto& n : tree.nodes()) {
    if (n.child_count != 0) continue;
    ++leaves;
    if (n.label <= 0 || static_cast<std::size_t>(n.label) > seen.size() - 1) return false;
    if (seen[n.label]) return false;
    seen[n.label] = 1;
  }
  for (std::size_t i = 1; i <= leaves; ++i)
    if (!seen[i]) return false;
  return true;
}

void validate_generalized_cotree(const Tree& tree) {
  if (tree.empty()) throw InvalidTree("empty tree");
  if (!min_outdegree_two(tree)) throw InvalidTree("internal node with fewer than 2 children");
  if (!all_internal_signed(tree)) throw InvalidTree("unsigned internal node");
  if (!labels_are_permutation(tree)) throw InvalidTree("leaf labels are not a permutation of 1..n");
}

void validate_cotree(const Tree& tree) {
  validate_generalized_cotree(tree);
  if (!is_alternating(tree)) throw InvalidTree("signs do not alternate");
}

void assign_alternating_signs(Tree& tree, Sign root_sign) {
  for (NodeId v = 0; v < tree.size(); ++v) {
    Node& n = tree.mutable_node(v);
    if (n.child_count == 0) {
      n.sign = Sign::none;
      continue;
    }
    n.sign = (n.depth % 2 == 0) ? root_sign : flip(root_sign);
  }
}

void label_leaves(Tree& tree, const std::vector<std::int32_t>& labels) {
  const auto lv = tree.leaves();
  if (lv.size() != labels.size()) throw InvalidTree("label count does not match leaf count");
  for (std::size_t i = 0; i < lv.size(); ++i) tree.mutable_node(lv[i]).label = labels[i];
}

NodeId find_leaf(const Tree& tree, std::int32_t label) {
  for (NodeId v = 0; v < tree.size(); ++v)
    if (tree.node(v).child_count == 0 && tree.node(v).label == label) return v;
  return kNoNode;
}

nlohmann::json to_json(const Tree& tree) {
  if (tree.empty()) return nullptr;
  std::vector<nlohmann::json> js(tree.size());
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId v = *it;
    const Node& n = tree.node(v);
    nlohmann::json j;
    if (n.child_count == 0) {
      j["sign"] = "leaf";
      if (n.label > 0) j["label"] = n.label;
    } else {
      j["sign"] = n.sign == Sign::plus ? "+" : (n.sign == Sign::minus ? "-" : "");
      auto arr = nlohmann::json::array();
      for (NodeId c : tree.children(v)) arr.push_back(std::move(js[c]));
      j["children"] = std::move(arr);
    }
    js[v] = std::move(j);
  }
  return std::move(js[tree.root()]);
}

Tree tree_from_json(const nlohmann::json& j) {
  Tree t;
  std::vector<std::pair<const nlohmann::json*, NodeId>> stack{{&j, kNoNode}};
  while (!stack.empty()) {
    const auto [node, parent] = stack.back();
    stack.pop_back();
    const std::string s = node->at("sign").get<std::string>();
    const std::int32_t label = node->contains("label") ? node->at("label").get<std::int32_t>() : 0;
    const Sign sign = s == "+" ? Sign::plus : (s == "-" ? Sign::minus : Sign::none);
    const NodeId id = parent == kNoNode ? t.add_root(sign, label) : t.add_child(parent, sign, label);
    if (s != "leaf") {
      const auto& kids = node->at("children");
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(&*it, id);
    }
  }
  return t;
}

}  // namespace cograph
