#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lazyfinger/multitree.hpp"
#include "lazyfinger/seqgen.hpp"
#include "lazyfinger/sequence.hpp"
#include "lazyfinger/tree.hpp"
#include "lazyfinger/weights.hpp"

namespace lazyfinger::io {

// Tree:        "n root\n" then n lines "key left right" (0 = no child), keys ascending.
// Sequence:    "n m\n" then the m keys space-separated on one line (omitted when m = 0).
// Frequencies: "n m first last\n", a line of n search counts, then one
//              "a b count" line per nonzero pair in ascending (a, b). first and
//              last are 0 when m = 0.
// Weights:     "n\n" then one weight per line, shortest round-trip decimal.
// Matrix:      "n\n" then n lines of n probabilities.
//
// Readers throw FormatError for text that does not parse, negative counts or
// inconsistent totals, and InputError for keys outside 1..n.

void write_tree(std::ostream& out, const StaticTree& t);
StaticTree read_tree(std::istream& in);

void write_sequence(std::ostream& out, const SearchSequence& x);
SearchSequence read_sequence(std::istream& in);

void write_frequencies(std::ostream& out, const SearchStats& s);
SearchStats read_frequencies(std::istream& in);

void write_weights(std::ostream& out, const WeightVector& w);
WeightVector read_weights(std::istream& in);

void write_matrix(std::ostream& out, const TransitionMatrix& m);
TransitionMatrix read_matrix(std::istream& in);

// Global tree in tree format, then one "T<i>: <members ascending>" line per key.
void write_multitree(std::ostream& out, const MultiTree& mt);

// Serializers to strings, for byte comparisons.
std::string to_string(const StaticTree& t);
std::string to_string(const SearchSequence& x);
std::string to_string(const SearchStats& s);
std::string to_string(const WeightVector& w);

// File wrappers; a file that cannot be opened is a FormatError.
StaticTree load_tree(const std::filesystem::path& path);
SearchSequence load_sequence(const std::filesystem::path& path);
SearchStats load_frequencies(const std::filesystem::path& path);
WeightVector load_weights(const std::filesystem::path& path);
TransitionMatrix load_matrix(const std::filesystem::path& path);

// Writes `contents` to `path`, throwing UsageError if the file cannot be created.
void save(const std::filesystem::path& path, const std::string& contents);

}  // namespace lazyfinger::io
