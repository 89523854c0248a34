#pragma once

#include <span>
#include <vector>

#include "lazyfinger/sequence.hpp"
#include "lazyfinger/tree.hpp"

namespace lazyfinger {

// Positive per-key weights w_1..w_n with O(1) range sums.
class WeightVector {
 public:
  // `weights[k - 1]` is the weight of key k. Throws UsageError if empty and
  // InputError unless every weight is finite and strictly positive.
  explicit WeightVector(std::vector<double> weights);

  std::size_t size() const { return w_.size(); }
  double weight(Key k) const { return w_[k - 1]; }
  std::span<const double> values() const { return w_; }
  // prefix(k) = w_1 + ... + w_k; prefix(0) = 0.
  double prefix(Key k) const { return prefix_[k]; }

  // w_lo + ... + w_hi for lo <= hi. Prefix differences can cancel badly when
  // weights span many orders of magnitude, so the result is clamped below by
  // the largest weight in the range (sparse-table lookup).
  double range_sum(Key lo, Key hi) const;
  double range_max(Key lo, Key hi) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.w_ == b.w_;
  }

 private:
  std::vector<double> w_;
  std::vector<double> prefix_;
  std::vector<std::vector<double>> sparse_max_;
};

// w_i = 4^-depth(i). Throws InputError when the tree is deeper than 511
// levels (the weights would leave the normal double range).
WeightVector weights_from_tree(const StaticTree& t);

// lg(range_sum(min(i,j), max(i,j)) / min(w_i, w_j)); zero when i == j.
double df_term(const WeightVector& w, Key i, Key j);

// Weighted dynamic finger bound: sum of df_term over consecutive searches
// (i = 2..m). Throws InputError on universe mismatch or an empty sequence.
double df_bound(const WeightVector& w, const SearchSequence& x);

}  // namespace lazyfinger
