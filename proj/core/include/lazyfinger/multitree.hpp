#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lazyfinger/sequence.hpp"
#include "lazyfinger/tree.hpp"

namespace lazyfinger {

// Search tree over the (at most d) most frequent successors of one key.
// The shape is a StaticTree over positions 1..members.size(); position p holds
// members[p - 1].
class SuccessorTree {
 public:
  SuccessorTree() = default;
  SuccessorTree(std::vector<Key> members, std::vector<std::uint64_t> counts);

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  // Ascending.
  std::span<const Key> members() const { return members_; }
  // counts()[p] is the transition count of members()[p].
  std::span<const std::uint64_t> counts() const { return counts_; }
  const std::optional<StaticTree>& shape() const { return shape_; }

  struct Probe {
    bool hit = false;
    // Nodes compared against, including the matching one on a hit.
    Cost inspected = 0;
  };

  // Descends from the root comparing against `key`; a miss ends at a null child.
  Probe probe(Key key) const;

  // Edge depth of `key` if stored.
  std::optional<std::uint32_t> depth_of(Key key) const;

 private:
  std::vector<Key> members_;
  std::vector<std::uint64_t> counts_;
  std::optional<StaticTree> shape_;
};

// Complete tree over 1..n plus, for each key i, a tree over its top-d
// successors. The finger always rests at the root of T_x after searching x.
class MultiTree {
 public:
  MultiTree(StaticTree global, std::size_t d, std::vector<SuccessorTree> successors);

  std::size_t size() const { return global_.size(); }
  std::size_t capacity() const { return d_; }
  const StaticTree& global() const { return global_; }
  const SuccessorTree& successors(Key i) const { return succ_[i - 1]; }

  // n global nodes plus every successor-tree node.
  std::size_t node_count() const;

  // Comparisons to search `target` when the previous search was `previous`:
  // a hit in T_previous costs its depth + 1; a miss costs the nodes inspected
  // in T_previous plus depth in the global tree + 1.
  Cost search_cost(Key previous, Key target) const;

  // First search of a run: global depth + 1.
  Cost initial_cost(Key target) const { return global_.depth(target) + 1; }

 private:
  StaticTree global_;
  std::size_t d_;
  std::vector<SuccessorTree> succ_;
};

// Keys j with f(i, j) > 0 ranked by count descending then key ascending,
// truncated to d.
std::vector<Key> top_successors(const PairTable& pairs, Key i, std::size_t d);

// Throws UsageError unless 1 <= d <= n.
MultiTree build_multitree(const PairTable& pairs, std::size_t d);
inline MultiTree build_multitree(const SearchStats& s, std::size_t d) {
  return build_multitree(s.pairs(), d);
}

// Total comparisons over the whole sequence. Throws InputError on universe
// mismatch.
Cost run_multitree(const MultiTree& mt, const SearchSequence& x);

}  // namespace lazyfinger
