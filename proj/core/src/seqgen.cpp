#include "lazyfinger/seqgen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "lazyfinger/error.hpp"

namespace lazyfinger {

namespace {

using Rng = std::mt19937_64;

// Unbiased draw from [0, bound) by rejection on the raw 64-bit output.
std::uint64_t below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v > limit);
  return v % bound;
}

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Key random_key(Rng& rng, std::size_t n) { return static_cast<Key>(below(rng, n) + 1); }

std::size_t default_round_size(std::size_t n) {
  const auto lg = static_cast<std::size_t>(std::bit_width(n - 1));  // ceil(lg n)
  return std::clamp<std::size_t>(lg, 1, n);
}

std::vector<Key> sequential(std::size_t n, std::size_t m) {
  std::vector<Key> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<Key>(i % n + 1);
  return out;
}

std::vector<Key> bit_reversal(std::size_t n, std::size_t m) {
  if (!std::has_single_bit(n)) {
    throw UsageError("bit-reversal sequence needs n to be a power of two, got " + std::to_string(n));
  }
  const int bits = std::countr_zero(n);
  std::vector<Key> period(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
    period[i] = static_cast<Key>(r + 1);
  }
  std::vector<Key> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = period[i % n];
  return out;
}

std::vector<Key> rounds(std::size_t n, std::size_t m, std::size_t k, Rng& rng) {
  std::vector<Key> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Key>(i + 1);
  std::vector<Key> out;
  out.reserve(m);
  while (out.size() < m) {
    // Partial Fisher-Yates: pool[0..k) becomes a uniform k-subset.
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + below(rng, n - i)]);
    }
    for (std::size_t i = 0; i < k && out.size() < m; ++i) out.push_back(pool[i]);
    for (std::size_t i = 0; i < n && out.size() < m; ++i) out.push_back(pool[below(rng, k)]);
  }
  return out;
}

std::vector<Key> markov(std::size_t n, std::size_t m, const TransitionMatrix& matrix, Rng& rng) {
  std::vector<std::vector<double>> cumulative(n);
  for (Key a = 1; a <= n; ++a) {
    const auto& row = matrix.row(a);
    auto& c = cumulative[a - 1];
    c.resize(n);
    std::partial_sum(row.begin(), row.end(), c.begin());
  }
  std::vector<Key> out;
  out.reserve(m);
  if (m == 0) return out;
  Key cur = random_key(rng, n);
  out.push_back(cur);
  while (out.size() < m) {
    const auto& c = cumulative[cur - 1];
    const double u = unit(rng) * c.back();
    auto it = std::upper_bound(c.begin(), c.end(), u);
    if (it == c.end()) --it;
    // Skip zero-probability keys that share the cumulative value.
    while (it != c.begin() && *it == *(it - 1)) --it;
    cur = static_cast<Key>(it - c.begin() + 1);
    out.push_back(cur);
  }
  return out;
}

}  // namespace

SequenceKind parse_sequence_kind(std::string_view name) {
  if (name == "sequential") return SequenceKind::kSequential;
  if (name == "bitrev") return SequenceKind::kBitReversal;
  if (name == "rounds") return SequenceKind::kRounds;
  if (name == "markov") return SequenceKind::kMarkov;
  if (name == "uniform") return SequenceKind::kUniform;
  throw UsageError("unknown sequence kind '" + std::string(name) + "'");
}

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kSequential: return "sequential";
    case SequenceKind::kBitReversal: return "bitrev";
    case SequenceKind::kRounds: return "rounds";
    case SequenceKind::kMarkov: return "markov";
    case SequenceKind::kUniform: return "uniform";
  }
  return "unknown";
}

TransitionMatrix::TransitionMatrix(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw InputError("transition matrix must be non-empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (rows_[a].size() != n) throw InputError("transition matrix must be square");
    double sum = 0.0;
    for (double p : rows_[a]) {
      if (!std::isfinite(p) || p < 0.0) throw InputError("transition probabilities must be nonnegative");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw InputError("transition matrix row " + std::to_string(a + 1) + " does not sum to 1");
    }
  }
}

TransitionMatrix dirichlet_matrix(std::size_t n, double concentration, std::uint64_t seed) {
  if (n == 0) throw UsageError("key universe must be non-empty");
  if (!(concentration > 0.0) || !std::isfinite(concentration)) {
    throw UsageError("concentration must be positive");
  }
  Rng rng(seed);
  std::gamma_distribution<double> gamma(concentration, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (auto& row : rows) {
    double sum = 0.0;
    for (double& p : row) {
      p = gamma(rng);
      sum += p;
    }
    if (!(sum > 0.0)) {
      std::fill(row.begin(), row.end(), 1.0);
      sum = static_cast<double>(n);
    }
    for (double& p : row) p /= sum;
  }
  return TransitionMatrix(std::move(rows));
}

SearchSequence generate(const GeneratorSpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  if (n == 0) throw UsageError("key universe must be non-empty");
  Rng rng(spec.seed);
  std::vector<Key> items;
  switch (spec.kind) {
    case SequenceKind::kSequential:
      items = sequential(n, m);
      break;
    case SequenceKind::kBitReversal:
      items = bit_reversal(n, m);
      break;
    case SequenceKind::kRounds: {
      const std::size_t k = spec.k.value_or(default_round_size(n));
      if (k < 1 || k > n) throw UsageError("round size k must lie in 1..n");
      items = rounds(n, m, k, rng);
      break;
    }
    case SequenceKind::kMarkov: {
      if (spec.matrix && spec.matrix->size() != n) {
        throw UsageError("transition matrix size does not match n");
      }
      const TransitionMatrix matrix =
          spec.matrix ? *spec.matrix : dirichlet_matrix(n, spec.concentration, spec.seed);
      items = markov(n, m, matrix, rng);
      break;
    }
    case SequenceKind::kUniform:
      items.resize(m);
      for (Key& k : items) k = random_key(rng, n);
      break;
  }
  return SearchSequence(n, std::move(items));
}

SearchStats frequencies_from_sequence(const SearchSequence& x) {
  const std::size_t n = x.universe();
  PairTable pairs(n);
  std::vector<std::uint64_t> searches(n + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    ++searches[x[i]];
    if (i > 0) pairs.add(x[i - 1], x[i]);
  }
  std::optional<Key> first, last;
  if (!x.empty()) {
    first = x[0];
    last = x[x.size() - 1];
  }
  return SearchStats(std::move(pairs), x.size(), std::move(searches), first, last);
}

}  // namespace lazyfinger
