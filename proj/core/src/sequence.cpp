#include "lazyfinger/sequence.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "lazyfinger/error.hpp"

namespace lazyfinger {

SearchSequence::SearchSequence(std::size_t n, std::vector<Key> items)
    : n_(n), items_(std::move(items)) {
  if (n_ == 0) throw UsageError("key universe must be non-empty");
  for (Key k : items_) {
    if (k < 1 || k > n_) {
      throw InputError("search key " + std::to_string(k) + " outside 1.." + std::to_string(n_));
    }
  }
}

PairTable::PairTable(std::size_t n) : n_(n), cells_(n * n, 0) {
  if (n_ == 0) throw UsageError("key universe must be non-empty");
}

std::uint64_t PairTable::total() const {
  return std::accumulate(cells_.begin(), cells_.end(), std::uint64_t{0});
}

std::uint64_t PairTable::row_sum(Key a) const {
  const auto begin = cells_.begin() + static_cast<std::ptrdiff_t>(index(a, 1));
  return std::accumulate(begin, begin + static_cast<std::ptrdiff_t>(n_), std::uint64_t{0});
}

std::uint64_t PairTable::col_sum(Key b) const {
  std::uint64_t sum = 0;
  for (Key a = 1; a <= n_; ++a) sum += at(a, b);
  return sum;
}

SearchStats::SearchStats(PairTable pair, std::size_t m, std::vector<std::uint64_t> searches,
                         std::optional<Key> first, std::optional<Key> last)
    : pair_(std::move(pair)),
      m_(m),
      searches_(std::move(searches)),
      first_(first),
      last_(last) {
  const std::size_t n = pair_.size();
  if (searches_.size() != n + 1) throw InputError("search counts must cover keys 1..n");
  searches_[0] = 0;
  if ((m_ == 0) != (!first_ && !last_) || first_.has_value() != last_.has_value()) {
    throw InputError("first/last keys must be present exactly when m >= 1");
  }
  auto in_range = [n](std::optional<Key> k) { return !k || (*k >= 1 && *k <= n); };
  if (!in_range(first_) || !in_range(last_)) throw InputError("first/last key outside 1..n");
  if (pair_.total() != transitions()) {
    throw InputError("transition counts must sum to m - 1");
  }
  std::uint64_t total = 0;
  for (Key a = 1; a <= n; ++a) {
    total += searches_[a];
    const std::uint64_t in = pair_.col_sum(a) + (first_ == a ? 1 : 0);
    const std::uint64_t out = pair_.row_sum(a) + (last_ == a ? 1 : 0);
    if (searches_[a] != in || searches_[a] != out) {
      throw InputError("search count of key " + std::to_string(a) +
                       " disagrees with its transition counts");
    }
  }
  if (total != m_) throw InputError("search counts must sum to m");
}

}  // namespace lazyfinger
