#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lazyfinger/types.hpp"

namespace lazyfinger {

// Raw child links of a binary tree over keys 1..n. Vectors are indexed by key
// and have size n + 1; slot 0 is unused. kNone marks a missing child.
struct TreeShape {
  std::size_t n = 0;
  Key root = kNone;
  std::vector<Key> left;
  std::vector<Key> right;

  friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

// True iff the links form a single tree rooted at `root` whose in-order
// traversal is exactly 1, 2, ..., n.
bool validate_tree(const TreeShape& shape);

// A fixed binary search tree over 1..n with derived parent/depth tables and
// per-node subtree key ranges. Immutable after construction.
class StaticTree {
 public:
  // Throws InputError if `shape` is not a valid BST over 1..n.
  explicit StaticTree(TreeShape shape);

  std::size_t size() const { return shape_.n; }
  Key root() const { return shape_.root; }
  bool contains(Key k) const { return k >= 1 && k <= shape_.n; }

  Key left(Key k) const { return shape_.left[k]; }
  Key right(Key k) const { return shape_.right[k]; }
  Key parent(Key k) const { return parent_[k]; }
  std::uint32_t depth(Key k) const { return depth_[k]; }
  std::uint32_t height() const { return height_; }

  // Smallest and largest key stored in the subtree rooted at k.
  Key subtree_min(Key k) const { return lo_[k]; }
  Key subtree_max(Key k) const { return hi_[k]; }

  const TreeShape& shape() const { return shape_; }

  friend bool operator==(const StaticTree& a, const StaticTree& b) {
    return a.shape_ == b.shape_;
  }

 private:
  friend bool validate_tree(const StaticTree& t);

  TreeShape shape_;
  std::vector<Key> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<Key> lo_;
  std::vector<Key> hi_;
  std::uint32_t height_ = 0;
};

// Re-checks the shape and that every derived table agrees with the links.
bool validate_tree(const StaticTree& t);

// Median-split tree: root = ceil((lo + hi) / 2), recursively.
// Throws UsageError for n = 0.
StaticTree build_balanced(std::size_t n);

// Lowest common ancestor. Throws InputError for keys outside 1..n.
Key lca(const StaticTree& t, Key i, Key j);

// Number of edges on the tree path between i and j.
Cost step_cost(const StaticTree& t, Key i, Key j);

// Keys in preorder (root, left subtree, right subtree).
std::vector<Key> preorder(const StaticTree& t);

}  // namespace lazyfinger
