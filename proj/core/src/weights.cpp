#include "lazyfinger/weights.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "lazyfinger/error.hpp"

namespace lazyfinger {

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw UsageError("weight vector must be non-empty");
  const std::size_t n = w_.size();
  prefix_.assign(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(w_[k]) || !(w_[k] > 0.0)) {
      throw InputError("weight of key " + std::to_string(k + 1) + " is not strictly positive");
    }
    prefix_[k + 1] = prefix_[k] + w_[k];
  }
  sparse_max_.push_back(w_);
  for (std::size_t len = 2; len <= n; len *= 2) {
    const auto& prev = sparse_max_.back();
    std::vector<double> level(n - len + 1);
    for (std::size_t i = 0; i + len <= n; ++i) {
      level[i] = std::max(prev[i], prev[i + len / 2]);
    }
    sparse_max_.push_back(std::move(level));
  }
}

double WeightVector::range_max(Key lo, Key hi) const {
  const std::size_t len = hi - lo + 1;
  const auto level = static_cast<std::size_t>(std::bit_width(len) - 1);
  const auto& row = sparse_max_[level];
  return std::max(row[lo - 1], row[hi - (std::size_t{1} << level)]);
}

double WeightVector::range_sum(Key lo, Key hi) const {
  return std::max(prefix_[hi] - prefix_[lo - 1], range_max(lo, hi));
}

WeightVector weights_from_tree(const StaticTree& t) {
  if (t.height() > 511) {
    throw InputError("tree height " + std::to_string(t.height()) +
                     " exceeds 511; 4^-depth weights would underflow");
  }
  std::vector<double> w(t.size());
  for (Key k = 1; k <= t.size(); ++k) w[k - 1] = std::ldexp(1.0, -2 * static_cast<int>(t.depth(k)));
  return WeightVector(std::move(w));
}

double df_term(const WeightVector& w, Key i, Key j) {
  if (i == j) return 0.0;
  const Key lo = std::min(i, j);
  const Key hi = std::max(i, j);
  return std::log2(w.range_sum(lo, hi) / std::min(w.weight(i), w.weight(j)));
}

double df_bound(const WeightVector& w, const SearchSequence& x) {
  if (w.size() != x.universe()) {
    throw InputError("universe mismatch: " + std::to_string(w.size()) + " weights, sequence over " +
                     std::to_string(x.universe()) + " keys");
  }
  if (x.empty()) throw InputError("df_bound needs at least one search");
  long double total = 0.0L;
  for (std::size_t i = 1; i < x.size(); ++i) total += df_term(w, x[i - 1], x[i]);
  return static_cast<double>(total);
}

}  // namespace lazyfinger
