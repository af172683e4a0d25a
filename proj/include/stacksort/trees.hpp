#ifndef STACKSORT_TREES_HPP
#define STACKSORT_TREES_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace stacksort {

/// A rooted plane binary tree in which exactly the vertices with two children
/// carry a label 0 or 1. Immutable; copies share structure.
class ZeroOneTree {
public:
  enum class Kind { Leaf, LeftOnly, RightOnly, Both };

  static ZeroOneTree leaf();
  static ZeroOneTree left_only(ZeroOneTree child);
  static ZeroOneTree right_only(ZeroOneTree child);
  static ZeroOneTree both(int label, ZeroOneTree left, ZeroOneTree right);

  Kind kind() const { return node_->kind; }
  /// Label of a two-child root; only valid when kind() == Both.
  int label() const { return node_->label; }
  ZeroOneTree left() const { return ZeroOneTree(node_->left); }
  ZeroOneTree right() const { return ZeroOneTree(node_->right); }

  /// Number of vertices.
  std::size_t size() const { return node_->size; }

  /// Canonical prefix code over {o, l, r, 0, 1}:
  ///   T ::= "o" | "l" T | "r" T | ("0"|"1") T T
  std::string encode() const;

  /// Inverse of encode; throws std::invalid_argument with the offending
  /// position on malformed input.
  static ZeroOneTree decode(const std::string& code);

  friend bool operator==(const ZeroOneTree& a, const ZeroOneTree& b) {
    return a.node_ == b.node_ || a.encode() == b.encode();
  }

private:
  struct Node {
    Kind kind;
    int label = 0;
    std::shared_ptr<const Node> left, right;
    std::size_t size = 1;
  };
  explicit ZeroOneTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Calls fn once for every 0-1-tree on n vertices, in the canonical order:
/// root with left child only, right child only, then two children labeled 0,
/// then labeled 1, with left-subtree size ascending and subtrees recursively
/// in the same order. n = 0 emits nothing.
void enumerate_trees(std::size_t n, const std::function<void(const ZeroOneTree&)>& fn);

/// All 0-1-trees on n vertices in enumeration order.
std::vector<ZeroOneTree> generate_trees(std::size_t n);

}  // namespace stacksort

#endif
