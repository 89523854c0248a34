#include "lazyfinger/prefix_table.hpp"

namespace lazyfinger {

PrefixTable::PrefixTable(const PairTable& pairs)
    : n_(pairs.size()), p_((n_ + 1) * (n_ + 1), 0) {
  const std::size_t w = n_ + 1;
  for (std::size_t i = 1; i <= n_; ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = 1; j <= n_; ++j) {
      row += pairs.at(static_cast<Key>(i), static_cast<Key>(j));
      p_[i * w + j] = p_[(i - 1) * w + j] + row;
    }
  }
}

}  // namespace lazyfinger
