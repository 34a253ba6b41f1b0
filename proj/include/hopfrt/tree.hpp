#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hopfrt {

/// A non-planar rooted tree held in canonical form.
///
/// Children are stored in non-increasing `tree_order`, so the largest subtree
/// comes first; the serialization `[` children `]` follows the stored order.
/// Two trees are equal iff their canonical serializations are equal. Values
/// are immutable and cheap to copy (the node is shared).
class RootedTree {
 public:
  /// The single vertex `[]`.
  RootedTree();

  /// Builds a tree whose root has the given subtrees, in any order.
  static RootedTree from_children(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const { return node_->children; }
  std::size_t vertex_count() const { return node_->vertex_count; }
  std::size_t root_fertility() const { return node_->children.size(); }
  std::size_t max_fertility() const { return node_->max_fertility; }
  bool is_single_vertex() const { return node_->children.empty(); }

  /// Canonical serialization in the bracket grammar.
  const std::string& str() const { return node_->repr; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.node_ == b.node_ || a.node_->repr == b.node_->repr;
  }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b);

 private:
  struct Node {
    std::vector<RootedTree> children;
    std::size_t vertex_count = 1;
    std::size_t max_fertility = 0;
    std::string repr;
  };
  explicit RootedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Total order: vertex count first, then lexicographic over the canonically
/// ordered children.
std::strong_ordering tree_order(const RootedTree& a, const RootedTree& b);

/// A commutative product of trees (a multiset). The empty forest is the unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(RootedTree t) : trees_{std::move(t)}, degree_(trees_.front().vertex_count()) {}
  explicit Forest(std::vector<RootedTree> trees);

  const std::vector<RootedTree>& trees() const { return trees_; }
  std::size_t degree() const { return degree_; }
  bool is_unit() const { return trees_.empty(); }
  bool is_single_tree() const { return trees_.size() == 1; }

  /// Multiset union.
  friend Forest operator*(const Forest& a, const Forest& b);

  friend bool operator==(const Forest& a, const Forest& b) = default;
  /// Degree first, then lexicographic over the (sorted) trees.
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

  /// `1` for the unit, otherwise trees joined by `*`.
  std::string str() const;

 private:
  std::vector<RootedTree> trees_;
  std::size_t degree_ = 0;
};

/// Canonical path from the root to the lower vertex of an edge: the child
/// index taken at every level.
using EdgePath = std::vector<std::size_t>;

struct Cut {
  enum class Kind { empty, full, proper };
  Kind kind = Kind::empty;
  std::vector<EdgePath> edges;  // empty unless kind == proper
};

struct AdmissibleCut {
  Cut cut;
  Forest pruned;     // P_c(t)
  Forest root_part;  // R_c(t): one tree, or the unit for the full cut
};

/// Empty cut, full cut, then every proper admissible cut in a deterministic
/// order.
std::vector<AdmissibleCut> admissible_cuts(const RootedTree& t);

/// Sorts children recursively; `raw` may list children in any order.
RootedTree canonicalize(const RootedTree& raw);

/// All distinct trees with `n` vertices in increasing tree_order. Empty for n = 0.
std::vector<RootedTree> enumerate_trees(std::size_t n);

/// All forests of total degree `n` (n = 0 gives the unit) in increasing order.
std::vector<Forest> enumerate_forests(std::size_t n);

/// Grafts the roots of `f` onto a new root.
RootedTree b_plus(const Forest& f);
/// The forest of root subtrees; inverse of b_plus.
Forest b_minus(const RootedTree& t);

RootedTree ladder(std::size_t n);

/// Parses the bracket grammar, e.g. `[[][]]`. Whitespace is ignored.
RootedTree parse_tree(std::string_view text);
/// Parses `1` or trees joined by `*`.
Forest parse_forest(std::string_view text);

/// Prefix parsers: start at `pos`, leave `pos` just past the parsed text.
RootedTree parse_tree_at(std::string_view text, std::size_t& pos);
Forest parse_forest_at(std::string_view text, std::size_t& pos);

}  // namespace hopfrt
