#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lazyfinger/sequence.hpp"

namespace lazyfinger {

enum class SequenceKind { kSequential, kBitReversal, kRounds, kMarkov, kUniform };

// Throws UsageError for an unknown name. Names: sequential, bitrev, rounds,
// markov, uniform.
SequenceKind parse_sequence_kind(std::string_view name);
std::string_view to_string(SequenceKind kind);

// Row-stochastic n x n matrix; rows[a - 1][b - 1] = P(next = b | current = a).
class TransitionMatrix {
 public:
  // Throws InputError unless entries are finite, nonnegative and every row
  // sums to 1 within 1e-9.
  explicit TransitionMatrix(std::vector<std::vector<double>> rows);

  std::size_t size() const { return rows_.size(); }
  const std::vector<double>& row(Key a) const { return rows_[a - 1]; }

 private:
  std::vector<std::vector<double>> rows_;
};

// Rows drawn from a symmetric Dirichlet(concentration) with the given seed.
// Small concentrations give sparse rows and low conditional entropy.
TransitionMatrix dirichlet_matrix(std::size_t n, double concentration, std::uint64_t seed);

inline constexpr double kDefaultConcentration = 0.2;

struct GeneratorSpec {
  SequenceKind kind = SequenceKind::kSequential;
  std::size_t n = 1;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  // rounds: picks per round; defaults to ceil(lg n), at least 1.
  std::optional<std::size_t> k;
  // markov: explicit matrix; otherwise dirichlet_matrix(n, concentration, seed).
  std::optional<TransitionMatrix> matrix;
  double concentration = kDefaultConcentration;
};

// Deterministic given the spec. Throws UsageError for n = 0, bit reversal with
// n not a power of two, k outside 1..n, or a matrix of the wrong size.
SearchSequence generate(const GeneratorSpec& spec);

// f(a, b) for consecutive searches, per-key counts, and the boundary keys.
SearchStats frequencies_from_sequence(const SearchSequence& x);

}  // namespace lazyfinger
