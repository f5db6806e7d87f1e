#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rotkit/rng.hpp"
#include "rotkit/triangulation.hpp"

namespace rotkit {

// In-order rank of an internal node. Ranks are stable under rotations, so an
// address taken before a rotation still names the same node afterwards.
using NodeAddress = int;

// Rooted binary tree with n internal nodes and n+1 ordered leaves. Internal
// nodes are identified by in-order rank: the node sitting between leaves r
// and r+1 has rank r. A child slot holds an internal rank (>= 0) or a leaf
// encoded as ~rank (< 0).
class BinaryTree {
 public:
  BinaryTree() = default;  // the single-leaf tree of size 0

  // Joins two trees under a fresh root; ranks of both sides are preserved up
  // to the shift by the left side's width.
  static BinaryTree node(const BinaryTree& left_tree, const BinaryTree& right_tree);

  int size() const { return static_cast<int>(left_.size()); }
  int leaf_count() const { return size() + 1; }

  // Child-encoded root: an internal rank for size >= 1, leaf ~0 for size 0.
  int root() const { return root_; }
  int left(NodeAddress node) const;
  int right(NodeAddress node) const;

  static bool is_leaf(int child) { return child < 0; }
  static int leaf_rank(int child) { return ~child; }

  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

 private:
  std::vector<int> left_, right_;  // indexed by internal in-order rank
  int root_ = ~0;

  friend BinaryTree parse_tree(std::string_view text);
  friend BinaryTree rotate_left(const BinaryTree& tree, NodeAddress at);
  friend BinaryTree rotate_right(const BinaryTree& tree, NodeAddress at);
  friend BinaryTree remy_sample(int size, SplitMix64& rng);
  friend BinaryTree triangulation_to_tree(const Triangulation& tri);
};

// Grammar: tree := "L" | "(" tree tree ")". Whitespace between tokens is
// skipped. Throws ParseError with the byte offset of the first violation.
BinaryTree parse_tree(std::string_view text);
std::string render_tree(const BinaryTree& tree);

// Rotation at the addressed node. rotate_left promotes the right child (which
// must be internal), rotate_right the left child; both preserve the in-order
// sequence, so every node keeps its rank.
BinaryTree rotate_left(const BinaryTree& tree, NodeAddress at);
BinaryTree rotate_right(const BinaryTree& tree, NodeAddress at);

// Uniform random tree of the given size by leaf-splicing growth. Step k
// (k = 1..size) draws rng.below(2k-1) to pick an existing node and then
// rng.below(2) for the side; 0 puts the new leaf on the left. Nodes are
// numbered for the pick in creation order: the initial leaf, then after each
// step the new internal node followed by the new leaf.
BinaryTree remy_sample(int size, SplitMix64& rng);

// Every tree of the given size exactly once, ordered by left-subtree size
// ascending, then recursively by the same order on the left and then the
// right subtree.
void enumerate_trees(int size, const std::function<void(const BinaryTree&)>& fn);
std::vector<BinaryTree> all_trees(int size);

// Duality with the (n+2)-gon rooted at side (0, n+1): leaf i corresponds to
// side (i, i+1) and the internal node spanning leaves i..j to the diagonal
// (i, j+1); the root contributes no diagonal.
Triangulation tree_to_triangulation(const BinaryTree& tree);
BinaryTree triangulation_to_tree(const Triangulation& tri);

}  // namespace rotkit
