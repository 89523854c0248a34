#include "lazyfinger/multitree.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lazyfinger/error.hpp"
#include "lazyfinger/optimize.hpp"

namespace lazyfinger {

SuccessorTree::SuccessorTree(std::vector<Key> members, std::vector<std::uint64_t> counts)
    : members_(std::move(members)), counts_(std::move(counts)) {
  if (members_.size() != counts_.size()) throw UsageError("successor members and counts differ in size");
  if (!std::is_sorted(members_.begin(), members_.end()) ||
      std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw UsageError("successor members must be strictly ascending");
  }
  if (members_.empty()) return;
  std::vector<double> w(counts_.begin(), counts_.end());
  shape_.emplace(mehlhorn_build(w));
}

SuccessorTree::Probe SuccessorTree::probe(Key key) const {
  Probe p;
  if (!shape_) return p;
  Key pos = shape_->root();
  while (pos != kNone) {
    ++p.inspected;
    const Key here = members_[pos - 1];
    if (key == here) {
      p.hit = true;
      return p;
    }
    pos = key < here ? shape_->left(pos) : shape_->right(pos);
  }
  return p;
}

std::optional<std::uint32_t> SuccessorTree::depth_of(Key key) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), key);
  if (it == members_.end() || *it != key) return std::nullopt;
  return shape_->depth(static_cast<Key>(it - members_.begin() + 1));
}

MultiTree::MultiTree(StaticTree global, std::size_t d, std::vector<SuccessorTree> successors)
    : global_(std::move(global)), d_(d), succ_(std::move(successors)) {
  if (d_ < 1 || d_ > global_.size()) throw UsageError("successor capacity d must lie in 1..n");
  if (succ_.size() != global_.size()) throw UsageError("need one successor tree per key");
  for (const auto& t : succ_) {
    if (t.size() > d_) throw UsageError("successor tree exceeds capacity d");
    for (Key k : t.members()) {
      if (!global_.contains(k)) throw InputError("successor key outside 1..n");
    }
  }
}

std::size_t MultiTree::node_count() const {
  std::size_t total = global_.size();
  for (const auto& t : succ_) total += t.size();
  return total;
}

Cost MultiTree::search_cost(Key previous, Key target) const {
  const SuccessorTree::Probe p = successors(previous).probe(target);
  if (p.hit) return p.inspected;
  return p.inspected + global_.depth(target) + 1;
}

std::vector<Key> top_successors(const PairTable& pairs, Key i, std::size_t d) {
  std::vector<Key> keys;
  for (Key j = 1; j <= pairs.size(); ++j) {
    if (pairs.at(i, j) > 0) keys.push_back(j);
  }
  const auto by_rank = [&](Key a, Key b) {
    const auto fa = pairs.at(i, a), fb = pairs.at(i, b);
    return fa != fb ? fa > fb : a < b;
  };
  const std::size_t keep = std::min(d, keys.size());
  std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(keep), keys.end(), by_rank);
  keys.resize(keep);
  return keys;
}

MultiTree build_multitree(const PairTable& pairs, std::size_t d) {
  const std::size_t n = pairs.size();
  if (d < 1 || d > n) {
    throw UsageError("successor capacity d = " + std::to_string(d) + " must lie in 1.." +
                     std::to_string(n));
  }
  std::vector<SuccessorTree> succ;
  succ.reserve(n);
  for (Key i = 1; i <= n; ++i) {
    std::vector<Key> members = top_successors(pairs, i, d);
    std::sort(members.begin(), members.end());
    std::vector<std::uint64_t> counts;
    counts.reserve(members.size());
    for (Key j : members) counts.push_back(pairs.at(i, j));
    succ.emplace_back(std::move(members), std::move(counts));
  }
  return MultiTree(build_balanced(n), d, std::move(succ));
}

Cost run_multitree(const MultiTree& mt, const SearchSequence& x) {
  if (x.universe() != mt.size()) {
    throw InputError("universe mismatch: structure over " + std::to_string(mt.size()) +
                     " keys, sequence over " + std::to_string(x.universe()));
  }
  if (x.empty()) return 0;
  Cost total = mt.initial_cost(x[0]);
  for (std::size_t i = 1; i < x.size(); ++i) total += mt.search_cost(x[i - 1], x[i]);
  return total;
}

}  // namespace lazyfinger
