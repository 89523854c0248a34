#pragma once

#include <cstdint>
#include <vector>

#include "lazyfinger/sequence.hpp"

namespace lazyfinger {

// 2-D cumulative sums of a transition table:
// P[i][j] = sum of f(a, b) over a <= i, b <= j, with P[0][*] = P[*][0] = 0.
class PrefixTable {
 public:
  explicit PrefixTable(const PairTable& pairs);

  std::size_t size() const { return n_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return p_[i * (n_ + 1) + j]; }

  // Sum of f(a, b) over a in [a1, a2], b in [b1, b2]. Empty ranges
  // (a1 > a2 or b1 > b2) give 0.
  std::uint64_t rect(Key a1, Key a2, Key b1, Key b2) const {
    if (a1 > a2 || b1 > b2) return 0;
    return at(a2, b2) - at(a1 - 1, b2) - at(a2, b1 - 1) + at(a1 - 1, b1 - 1);
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> p_;
};

inline PrefixTable prefix_sums(const PairTable& pairs) { return PrefixTable(pairs); }
inline PrefixTable prefix_sums(const SearchStats& s) { return PrefixTable(s.pairs()); }

}  // namespace lazyfinger
