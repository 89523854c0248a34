#include "lazyfinger/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lazyfinger/cost.hpp"
#include "lazyfinger/error.hpp"
#include "lazyfinger/prefix_table.hpp"
#include "split_build.hpp"

namespace lazyfinger {

namespace {

// (n + 2) x (n + 2) table addressed by interval endpoints; cells with
// b = a - 1 stand for the empty interval.
template <typename T>
class IntervalTable {
 public:
  IntervalTable(std::size_t n, T init) : w_(n + 2), cells_(w_ * w_, init) {}
  T& operator()(std::size_t a, std::size_t b) { return cells_[a * w_ + b]; }
  const T& operator()(std::size_t a, std::size_t b) const { return cells_[a * w_ + b]; }

 private:
  std::size_t w_;
  std::vector<T> cells_;
};

StaticTree tree_from_roots(std::size_t n, const IntervalTable<Key>& root) {
  return detail::build_by_split(n, [&root](Key lo, Key hi) { return root(lo, hi); });
}

// Interval DP shared by both lazy optimizers. `edge_terms(a, b, r)` returns
// terms (c) + (d) + (e): the traversals of the edges from r down to its
// children when r roots the subtree over [a, b].
template <typename EdgeTerms>
OptResult solve_lazy(std::size_t n, EdgeTerms&& edge_terms) {
  IntervalTable<Cost> cost(n, 0);
  IntervalTable<Key> root(n, kNone);
  for (std::size_t len = 1; len <= n; ++len) {
    for (Key a = 1; a + len - 1 <= n; ++a) {
      const auto b = static_cast<Key>(a + len - 1);
      Cost best = std::numeric_limits<Cost>::max();
      Key best_root = kNone;
      for (Key r = a; r <= b; ++r) {
        const Cost c = cost(a, r - 1) + cost(r + 1, b) + edge_terms(a, b, r);
        if (c < best) {
          best = c;
          best_root = r;
        }
      }
      cost(a, b) = best;
      root(a, b) = best_root;
    }
  }
  return OptResult{tree_from_roots(n, root), cost(1, n)};
}

}  // namespace

OptResult optimal_lazy_naive(const PairTable& f) {
  const auto n = static_cast<Key>(f.size());
  auto both = [&f](Key i, Key j) { return f.at(i, j) + f.at(j, i); };
  return solve_lazy(n, [&](Key a, Key b, Key r) {
    // (c): searches crossing between the left and right subtrees use both edges.
    Cost cross = 0;
    for (Key i = a; i < r; ++i) {
      for (Key j = r + 1; j <= b; ++j) cross += both(i, j);
    }
    // (d): searches between r and the rest of [a, b] use one edge.
    Cost to_root = 0;
    for (Key i = a; i <= b; ++i) {
      if (i != r) to_root += both(i, r);
    }
    // (e): searches leaving [a, b] from below r use one edge.
    Cost leaving = 0;
    for (Key i = a; i <= b; ++i) {
      if (i == r) continue;
      for (Key j = 1; j <= n; ++j) {
        if (j < a || j > b) leaving += both(i, j);
      }
    }
    return 2 * cross + to_root + leaving;
  });
}

OptResult optimal_lazy_dp(const PairTable& f) {
  const auto n = static_cast<Key>(f.size());
  const PrefixTable P(f);
  return solve_lazy(n, [&P, n](Key a, Key b, Key r) {
    const Cost cross = P.rect(a, r - 1, r + 1, b) + P.rect(r + 1, b, a, r - 1);
    const Cost self = P.rect(r, r, r, r);
    const Cost to_root = P.rect(a, b, r, r) + P.rect(r, r, a, b) - 2 * self;
    const Cost rows_out = P.rect(a, b, 1, a - 1) + P.rect(a, b, b + 1, n) -
                          P.rect(r, r, 1, a - 1) - P.rect(r, r, b + 1, n);
    const Cost cols_in = P.rect(1, a - 1, a, b) + P.rect(b + 1, n, a, b) -
                         P.rect(1, a - 1, r, r) - P.rect(b + 1, n, r, r);
    return 2 * cross + to_root + rows_out + cols_in;
  });
}

namespace {

// Preorders of every BST over [lo, hi], in lexicographic order.
void preorders(Key lo, Key hi, std::vector<std::vector<Key>>& out) {
  out.clear();
  if (lo > hi) {
    out.emplace_back();
    return;
  }
  std::vector<std::vector<Key>> lefts, rights;
  for (Key r = lo; r <= hi; ++r) {
    preorders(lo, r - 1, lefts);
    preorders(r + 1, hi, rights);
    for (const auto& l : lefts) {
      for (const auto& rt : rights) {
        std::vector<Key> p;
        p.reserve(hi - lo + 1);
        p.push_back(r);
        p.insert(p.end(), l.begin(), l.end());
        p.insert(p.end(), rt.begin(), rt.end());
        out.push_back(std::move(p));
      }
    }
  }
}

StaticTree tree_from_preorder(std::size_t n, const std::vector<Key>& order) {
  TreeShape s{n, order.front(), std::vector<Key>(n + 1, kNone), std::vector<Key>(n + 1, kNone)};
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Key k = order[i];
    Key cur = s.root;
    for (;;) {
      Key& next = k < cur ? s.left[cur] : s.right[cur];
      if (next == kNone) {
        next = k;
        break;
      }
      cur = next;
    }
  }
  return StaticTree(std::move(s));
}

}  // namespace

void for_each_tree(std::size_t n, const std::function<void(const StaticTree&)>& visit) {
  if (n == 0) throw UsageError("for_each_tree requires n >= 1");
  std::vector<std::vector<Key>> all;
  preorders(1, static_cast<Key>(n), all);
  for (const auto& p : all) visit(tree_from_preorder(n, p));
}

OptResult enumerate_optimal(const PairTable& pairs, std::size_t max_n) {
  const std::size_t n = pairs.size();
  if (n > max_n) {
    throw UsageError("enumerate_optimal refuses n = " + std::to_string(n) + " (limit " +
                     std::to_string(max_n) + ")");
  }
  std::optional<OptResult> best;
  for_each_tree(n, [&](const StaticTree& t) {
    const Cost c = cost_from_frequencies(t, pairs);
    if (!best || c < best->cost) best = OptResult{t, c};
  });
  return std::move(*best);
}

OptResult optimal_root_dp(std::span<const std::uint64_t> counts, RootDpMethod method) {
  const std::size_t n = counts.size();
  if (n == 0) throw UsageError("optimal_root_dp requires n >= 1");
  std::vector<std::uint64_t> prefix(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + counts[k];

  // Weighted path length counting the root as depth 1; the depth-0 cost
  // subtracts the total once at the end.
  IntervalTable<Cost> cost(n, 0);
  IntervalTable<Key> root(n, kNone);
  for (std::size_t len = 1; len <= n; ++len) {
    for (Key a = 1; a + len - 1 <= n; ++a) {
      const auto b = static_cast<Key>(a + len - 1);
      Key lo = a;
      Key hi = b;
      if (method == RootDpMethod::kKnuth && len > 1) {
        lo = root(a, b - 1);
        hi = root(a + 1, b);
      }
      Cost best = std::numeric_limits<Cost>::max();
      Key best_root = kNone;
      for (Key r = lo; r <= hi; ++r) {
        const Cost c = cost(a, r - 1) + cost(r + 1, b);
        if (c < best) {
          best = c;
          best_root = r;
        }
      }
      cost(a, b) = best + (prefix[b] - prefix[a - 1]);
      root(a, b) = best_root;
    }
  }
  return OptResult{tree_from_roots(n, root), cost(1, n) - prefix[n]};
}

OptResult optimal_root_dp(const SearchStats& s, RootDpMethod method) {
  return optimal_root_dp(s.searches().subspan(1), method);
}

StaticTree mehlhorn_build(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw UsageError("mehlhorn_build requires n >= 1");
  std::vector<long double> prefix(n + 1, 0.0L);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(weights[k] >= 0.0) || !std::isfinite(weights[k])) {
      throw InputError("mehlhorn_build weights must be finite and nonnegative");
    }
    prefix[k + 1] = prefix[k] + weights[k];
  }

  return detail::build_by_split(n, [&prefix](Key lo, Key hi) {
    // (left weight) - (right weight) at root r; nondecreasing in r.
    auto diff = [&](Key r) { return prefix[r - 1] + prefix[r] - prefix[lo - 1] - prefix[hi]; };
    // Smallest r in [lo, hi] with diff(r) >= v, or hi + 1.
    auto first_at_least = [&](long double v) {
      Key a = lo, b = hi + 1;
      while (a < b) {
        const Key mid = a + (b - a) / 2;
        if (diff(mid) >= v) {
          b = mid;
        } else {
          a = mid + 1;
        }
      }
      return a;
    };
    const Key up = first_at_least(0.0L);
    Key r;
    if (up > hi) {
      r = hi;
    } else if (up == lo || -diff(up - 1) > diff(up)) {
      r = up;
    } else {
      r = up - 1;
    }
    // Earliest root on a plateau of equal differences.
    return first_at_least(diff(r));
  });
}

StaticTree mehlhorn_build(const WeightVector& weights) { return mehlhorn_build(weights.values()); }

StaticTree treap_build(const WeightVector& weights, std::uint64_t seed) {
  const std::size_t n = weights.size();
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<long double>(rng() >> 11) * 0x1.0p-53L; };

  return detail::build_by_split(n, [&](Key lo, Key hi) {
    if (lo == hi) return lo;
    long double total = 0.0L;
    for (Key k = lo; k <= hi; ++k) total += weights.weight(k);
    const long double target = uniform() * total;
    long double acc = 0.0L;
    for (Key k = lo; k < hi; ++k) {
      acc += weights.weight(k);
      if (target < acc) return k;
    }
    return hi;
  });
}

}  // namespace lazyfinger
