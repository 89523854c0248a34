#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "lazyfinger/sequence.hpp"
#include "lazyfinger/tree.hpp"
#include "lazyfinger/weights.hpp"

namespace lazyfinger {

struct OptResult {
  StaticTree tree;
  // Lazy optimizers: transition-only lazy cost. Root optimizer: sum s(a) d(a).
  Cost cost;
};

// Optimal lazy-finger tree by interval DP over [a, b] and root r, with the
// five cost terms summed cell by cell. O(n^5); meant as a reference.
// Ties go to the smallest root at every interval.
OptResult optimal_lazy_naive(const PairTable& pairs);

// Same recurrence with each term answered from 2-D prefix sums. O(n^3) time,
// O(n^2) space. Returns exactly the tree and cost of optimal_lazy_naive.
OptResult optimal_lazy_dp(const PairTable& pairs);

inline OptResult optimal_lazy_naive(const SearchStats& s) { return optimal_lazy_naive(s.pairs()); }
inline OptResult optimal_lazy_dp(const SearchStats& s) { return optimal_lazy_dp(s.pairs()); }

inline constexpr std::size_t kDefaultEnumerateLimit = 10;

// Calls `visit` once for each of the Catalan(n) BST shapes over 1..n.
void for_each_tree(std::size_t n, const std::function<void(const StaticTree&)>& visit);

// Scores every BST shape with cost_from_frequencies and returns the cheapest;
// ties go to the lexicographically smallest preorder. Throws UsageError if
// n > max_n.
OptResult enumerate_optimal(const PairTable& pairs, std::size_t max_n = kDefaultEnumerateLimit);

enum class RootDpMethod { kCubic, kKnuth };

// Optimal root-finger tree for per-key counts (counts[k - 1] is the count of
// key k), minimizing sum counts(a) * depth(a). kKnuth restricts each interval's
// root to [root(a, b-1), root(a+1, b)], giving O(n^2).
OptResult optimal_root_dp(std::span<const std::uint64_t> counts,
                          RootDpMethod method = RootDpMethod::kKnuth);
OptResult optimal_root_dp(const SearchStats& s, RootDpMethod method = RootDpMethod::kKnuth);

// Bisection heuristic: each interval's root minimizes
// |sum of weights left of r - sum of weights right of r|, ties to the smaller r.
// The span form accepts nonnegative weights (weights[k - 1] for key k).
StaticTree mehlhorn_build(std::span<const double> weights);
StaticTree mehlhorn_build(const WeightVector& weights);

// Randomized tree from weights: each interval's root is drawn with probability
// proportional to its weight. The generator is std::mt19937_64 seeded with
// `seed`; draws are 53-bit uniforms taken from its output, so the tree is a
// pure function of (weights, seed).
StaticTree treap_build(const WeightVector& weights, std::uint64_t seed);

}  // namespace lazyfinger
