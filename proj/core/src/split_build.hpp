#pragma once

#include <utility>
#include <vector>

#include "lazyfinger/tree.hpp"

namespace lazyfinger::detail {

// Builds a tree over 1..n top-down: `choose_root(lo, hi)` picks the root of
// each non-empty interval. Intervals are expanded depth-first, right child
// first, so stateful choosers (seeded draws) see a fixed order.
template <typename ChooseRoot>
StaticTree build_by_split(std::size_t n, ChooseRoot&& choose_root) {
  TreeShape s{n, kNone, std::vector<Key>(n + 1, kNone), std::vector<Key>(n + 1, kNone)};
  struct Span {
    Key lo, hi, parent;
    bool is_left;
  };
  std::vector<Span> work{{1, static_cast<Key>(n), kNone, false}};
  while (!work.empty()) {
    const Span sp = work.back();
    work.pop_back();
    if (sp.lo > sp.hi) continue;
    const Key r = choose_root(sp.lo, sp.hi);
    if (sp.parent == kNone) {
      s.root = r;
    } else if (sp.is_left) {
      s.left[sp.parent] = r;
    } else {
      s.right[sp.parent] = r;
    }
    work.push_back({sp.lo, static_cast<Key>(r - 1), r, true});
    work.push_back({static_cast<Key>(r + 1), sp.hi, r, false});
  }
  return StaticTree(std::move(s));
}

}  // namespace lazyfinger::detail
