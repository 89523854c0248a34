#include "lazyfinger/entropy.hpp"

#include <cmath>

#include "lazyfinger/error.hpp"

namespace lazyfinger {

double entropy(const SearchStats& s) {
  if (s.length() == 0) throw InputError("entropy needs at least one search");
  const double m = static_cast<double>(s.length());
  double h = 0.0;
  for (Key a = 1; a <= s.universe(); ++a) {
    const double c = static_cast<double>(s.searches(a));
    if (c > 0) h += (c / m) * std::log2(m / c);
  }
  return h;
}

double conditional_entropy(const PairTable& pairs) {
  const double t = static_cast<double>(pairs.total());
  if (t == 0) throw InputError("conditional entropy needs at least one transition");
  const auto n = static_cast<Key>(pairs.size());
  double h = 0.0;
  for (Key a = 1; a <= n; ++a) {
    const double out = static_cast<double>(pairs.row_sum(a));
    if (out == 0) continue;
    for (Key b = 1; b <= n; ++b) {
      const double f = static_cast<double>(pairs.at(a, b));
      if (f > 0) h += (f / t) * std::log2(out / f);
    }
  }
  return h;
}

double conditional_entropy(const SearchStats& s) {
  if (s.length() < 2) throw InputError("conditional entropy needs at least two searches");
  return conditional_entropy(s.pairs());
}

}  // namespace lazyfinger
