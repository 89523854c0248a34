#include "lazyfinger/tree.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lazyfinger/error.hpp"
#include "split_build.hpp"

namespace lazyfinger {

namespace {

bool links_in_range(const TreeShape& s) {
  if (s.n == 0 || s.left.size() != s.n + 1 || s.right.size() != s.n + 1) return false;
  if (s.root < 1 || s.root > s.n) return false;
  for (std::size_t k = 1; k <= s.n; ++k) {
    if (s.left[k] > s.n || s.right[k] > s.n) return false;
  }
  return true;
}

// Iterative in-order walk; fails on revisits, so cycles and shared children
// are rejected without unbounded looping.
bool inorder_is_identity(const TreeShape& s) {
  std::vector<bool> seen(s.n + 1, false);
  std::vector<Key> stack;
  Key expected = 1;
  Key cur = s.root;
  while (cur != kNone || !stack.empty()) {
    while (cur != kNone) {
      if (seen[cur]) return false;
      seen[cur] = true;
      stack.push_back(cur);
      cur = s.left[cur];
    }
    cur = stack.back();
    stack.pop_back();
    if (cur != expected) return false;
    ++expected;
    cur = s.right[cur];
  }
  return expected == s.n + 1;
}

}  // namespace

bool validate_tree(const TreeShape& shape) {
  return links_in_range(shape) && inorder_is_identity(shape);
}

StaticTree::StaticTree(TreeShape shape) : shape_(std::move(shape)) {
  if (!validate_tree(shape_)) {
    throw InputError("tree links are not a binary search tree over 1.." + std::to_string(shape_.n));
  }
  const std::size_t n = shape_.n;
  parent_.assign(n + 1, kNone);
  depth_.assign(n + 1, 0);
  lo_.assign(n + 1, kNone);
  hi_.assign(n + 1, kNone);

  std::vector<Key> order;
  order.reserve(n);
  order.push_back(shape_.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Key k = order[i];
    for (Key c : {shape_.left[k], shape_.right[k]}) {
      if (c == kNone) continue;
      parent_[c] = k;
      depth_[c] = depth_[k] + 1;
      height_ = std::max(height_, depth_[c]);
      order.push_back(c);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Key k = *it;
    lo_[k] = shape_.left[k] == kNone ? k : lo_[shape_.left[k]];
    hi_[k] = shape_.right[k] == kNone ? k : hi_[shape_.right[k]];
  }
}

bool validate_tree(const StaticTree& t) {
  const TreeShape& s = t.shape_;
  if (!validate_tree(s)) return false;
  if (t.parent_[s.root] != kNone || t.depth_[s.root] != 0) return false;
  std::size_t orphans = 0;
  std::uint32_t height = 0;
  for (Key k = 1; k <= s.n; ++k) {
    const Key p = t.parent_[k];
    if (p == kNone) {
      ++orphans;
    } else {
      if (s.left[p] != k && s.right[p] != k) return false;
      if (t.depth_[k] != t.depth_[p] + 1) return false;
    }
    height = std::max(height, t.depth_[k]);
    for (Key c : {s.left[k], s.right[k]}) {
      if (c != kNone && t.parent_[c] != k) return false;
    }
    const Key lo = s.left[k] == kNone ? k : t.lo_[s.left[k]];
    const Key hi = s.right[k] == kNone ? k : t.hi_[s.right[k]];
    if (t.lo_[k] != lo || t.hi_[k] != hi) return false;
  }
  return orphans == 1 && height == t.height_;
}

StaticTree build_balanced(std::size_t n) {
  if (n == 0) throw UsageError("build_balanced requires n >= 1");
  return detail::build_by_split(n, [](Key lo, Key hi) {
    return static_cast<Key>((std::uint64_t{lo} + hi + 1) / 2);
  });
}

Key lca(const StaticTree& t, Key i, Key j) {
  if (!t.contains(i) || !t.contains(j)) {
    throw InputError("key out of range 1.." + std::to_string(t.size()));
  }
  while (t.depth(i) > t.depth(j)) i = t.parent(i);
  while (t.depth(j) > t.depth(i)) j = t.parent(j);
  while (i != j) {
    i = t.parent(i);
    j = t.parent(j);
  }
  return i;
}

Cost step_cost(const StaticTree& t, Key i, Key j) {
  const Key a = lca(t, i, j);
  return Cost{t.depth(i)} + t.depth(j) - 2 * Cost{t.depth(a)};
}

std::vector<Key> preorder(const StaticTree& t) {
  std::vector<Key> out;
  out.reserve(t.size());
  std::vector<Key> stack{t.root()};
  while (!stack.empty()) {
    const Key k = stack.back();
    stack.pop_back();
    out.push_back(k);
    if (t.right(k) != kNone) stack.push_back(t.right(k));
    if (t.left(k) != kNone) stack.push_back(t.left(k));
  }
  return out;
}

}  // namespace lazyfinger
