#include "lazyfinger/cost.hpp"

#include <string>

#include "lazyfinger/decimal.hpp"
#include "lazyfinger/error.hpp"

namespace lazyfinger {

namespace {

void require_same_universe(const StaticTree& t, std::size_t n) {
  if (t.size() != n) {
    throw InputError("universe mismatch: tree has " + std::to_string(t.size()) +
                     " keys, input has " + std::to_string(n));
  }
}

}  // namespace

std::string CostReport::per_search_avg() const {
  return format_ratio6(total_with_root_start, searches);
}

std::string CostReport::render() const {
  std::string out;
  out += "transition_cost\t" + std::to_string(transition_cost) + "\n";
  out += "initial_descent\t" + std::to_string(initial_descent) + "\n";
  out += "total_with_root_start\t" + std::to_string(total_with_root_start) + "\n";
  out += "per_search_avg\t" + per_search_avg() + "\n";
  return out;
}

Cost LazyFinger::move_to(Key target) {
  const StaticTree& t = *tree_;
  if (!t.contains(target)) throw InputError("search key outside 1.." + std::to_string(t.size()));
  Cost edges = 0;
  while (target < t.subtree_min(at_) || target > t.subtree_max(at_)) {
    at_ = t.parent(at_);
    ++edges;
  }
  while (at_ != target) {
    at_ = target < at_ ? t.left(at_) : t.right(at_);
    ++edges;
  }
  return edges;
}

CostReport run_root_finger(const StaticTree& t, const SearchSequence& x) {
  require_same_universe(t, x.universe());
  CostReport r;
  for (Key k : x.items()) r.transition_cost += t.depth(k);
  r.total_with_root_start = r.transition_cost;
  r.searches = x.size();
  return r;
}

CostReport run_lazy_finger(const StaticTree& t, const SearchSequence& x) {
  require_same_universe(t, x.universe());
  CostReport r;
  r.searches = x.size();
  if (x.empty()) return r;
  LazyFinger finger(t);
  r.initial_descent = finger.move_to(x[0]);
  for (std::size_t i = 1; i < x.size(); ++i) r.transition_cost += finger.move_to(x[i]);
  r.total_with_root_start = r.transition_cost + r.initial_descent;
  return r;
}

Cost cost_from_frequencies(const StaticTree& t, const PairTable& pairs) {
  require_same_universe(t, pairs.size());
  Cost total = 0;
  const auto n = static_cast<Key>(t.size());
  for (Key a = 1; a <= n; ++a) {
    for (Key b = 1; b <= n; ++b) {
      const std::uint64_t f = pairs.at(a, b);
      if (f != 0 && a != b) total += f * step_cost(t, a, b);
    }
  }
  return total;
}

Cost cost_from_frequencies(const StaticTree& t, const SearchStats& s) {
  return cost_from_frequencies(t, s.pairs());
}

}  // namespace lazyfinger
