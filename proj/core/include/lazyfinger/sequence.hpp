#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lazyfinger/types.hpp"

namespace lazyfinger {

// Ordered searches x_1..x_m over the key universe 1..n.
class SearchSequence {
 public:
  // Throws UsageError for n = 0 and InputError for items outside 1..n.
  SearchSequence(std::size_t n, std::vector<Key> items);

  std::size_t universe() const { return n_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  Key operator[](std::size_t i) const { return items_[i]; }
  std::span<const Key> items() const { return items_; }

  friend bool operator==(const SearchSequence&, const SearchSequence&) = default;

 private:
  std::size_t n_;
  std::vector<Key> items_;
};

// Dense n x n table of transition counts f(a, b), keys 1..n.
class PairTable {
 public:
  explicit PairTable(std::size_t n);

  std::size_t size() const { return n_; }
  std::uint64_t at(Key a, Key b) const { return cells_[index(a, b)]; }
  void set(Key a, Key b, std::uint64_t count) { cells_[index(a, b)] = count; }
  void add(Key a, Key b, std::uint64_t count = 1) { cells_[index(a, b)] += count; }

  std::uint64_t total() const;
  std::uint64_t row_sum(Key a) const;
  std::uint64_t col_sum(Key b) const;

  friend bool operator==(const PairTable&, const PairTable&) = default;

 private:
  std::size_t index(Key a, Key b) const { return (a - 1) * n_ + (b - 1); }

  std::size_t n_;
  std::vector<std::uint64_t> cells_;
};

// Frequency model of a sequence: transitions for i = 2..m, per-key search
// counts, and the boundary keys x_1 and x_m.
//
// Invariants (checked on construction, InputError otherwise):
//   pair.total() == m - 1 when m >= 1, 0 when m == 0
//   sum of searches == m
//   searches(a) == pair.col_sum(a) + [a == first] == pair.row_sum(a) + [a == last]
class SearchStats {
 public:
  SearchStats(PairTable pair, std::size_t m, std::vector<std::uint64_t> searches,
              std::optional<Key> first, std::optional<Key> last);

  std::size_t universe() const { return pair_.size(); }
  std::size_t length() const { return m_; }
  const PairTable& pairs() const { return pair_; }
  std::uint64_t pair(Key a, Key b) const { return pair_.at(a, b); }
  // Indexed by key; slot 0 unused.
  std::span<const std::uint64_t> searches() const { return searches_; }
  std::uint64_t searches(Key a) const { return searches_[a]; }
  std::optional<Key> first() const { return first_; }
  std::optional<Key> last() const { return last_; }
  std::uint64_t transitions() const { return m_ == 0 ? 0 : m_ - 1; }

  friend bool operator==(const SearchStats&, const SearchStats&) = default;

 private:
  PairTable pair_;
  std::size_t m_;
  std::vector<std::uint64_t> searches_;
  std::optional<Key> first_;
  std::optional<Key> last_;
};

}  // namespace lazyfinger
