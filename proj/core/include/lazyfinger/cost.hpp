#pragma once

#include <string>

#include "lazyfinger/sequence.hpp"
#include "lazyfinger/tree.hpp"

namespace lazyfinger {

// Edge counts of one run. For lazy finger, transition_cost covers the moves
// x_{i-1} -> x_i for i = 2..m and initial_descent is the depth of x_1; their
// sum is the cost when the finger starts at the root. For root finger,
// transition_cost is the sum of depths and initial_descent is zero.
struct CostReport {
  Cost transition_cost = 0;
  Cost initial_descent = 0;
  Cost total_with_root_start = 0;
  std::size_t searches = 0;

  // total_with_root_start / searches as a decimal with 6 fractional digits;
  // "0.000000" for an empty run.
  std::string per_search_avg() const;

  // "key<TAB>value" lines in a fixed order.
  std::string render() const;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

// A finger resting on a node of a static tree. Moves walk up through parents
// until the current subtree spans the target, then descend by key comparison.
class LazyFinger {
 public:
  explicit LazyFinger(const StaticTree& tree) : tree_(&tree), at_(tree.root()) {}

  Key position() const { return at_; }

  // Moves to `target` and returns the number of edges walked.
  Cost move_to(Key target);

 private:
  const StaticTree* tree_;
  Key at_;
};

// Throws InputError when the sequence universe differs from the tree size.
CostReport run_root_finger(const StaticTree& t, const SearchSequence& x);
CostReport run_lazy_finger(const StaticTree& t, const SearchSequence& x);

// Sum over (a, b) of f(a, b) * step_cost(t, a, b).
Cost cost_from_frequencies(const StaticTree& t, const PairTable& pairs);
Cost cost_from_frequencies(const StaticTree& t, const SearchStats& s);

}  // namespace lazyfinger
