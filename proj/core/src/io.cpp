#include "lazyfinger/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "lazyfinger/error.hpp"

namespace lazyfinger::io {

namespace {

// Whitespace-separated token cursor over a whole input.
class Tokens {
 public:
  Tokens(std::istream& in, std::string_view what)
      : text_(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()), what_(what) {}

  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  std::string_view next(std::string_view field) {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input, expected " + std::string(field));
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return std::string_view(text_).substr(start, pos_ - start);
  }

  std::uint64_t unsigned_int(std::string_view field) {
    const std::string_view tok = next(field);
    if (!tok.empty() && tok.front() == '-') fail(std::string(field) + " must be nonnegative, got " + std::string(tok));
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      fail(std::string(field) + " is not an integer: '" + std::string(tok) + "'");
    }
    return v;
  }

  double real(std::string_view field) {
    const std::string_view tok = next(field);
    double v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      fail(std::string(field) + " is not a number: '" + std::string(tok) + "'");
    }
    return v;
  }

  void expect_end() {
    if (!done()) fail("trailing content after the last record");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError(std::string(what_) + ": " + msg);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string text_;
  std::string_view what_;
  std::size_t pos_ = 0;
};

std::size_t universe(Tokens& tok) {
  const std::uint64_t n = tok.unsigned_int("n");
  if (n == 0) tok.fail("n must be at least 1");
  if (n > std::numeric_limits<Key>::max() / 2) tok.fail("n is too large");
  return static_cast<std::size_t>(n);
}

Key key_in_range(std::uint64_t v, std::size_t n, std::string_view field, bool allow_none = false) {
  if ((allow_none && v == 0) || (v >= 1 && v <= n)) return static_cast<Key>(v);
  throw InputError(std::string(field) + " " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

std::string shortest(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

template <typename Read>
auto load(const std::filesystem::path& path, Read&& read) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  return read(in);
}

template <typename T>
std::string serialize(void (*write)(std::ostream&, const T&), const T& value) {
  std::ostringstream out;
  write(out, value);
  return out.str();
}

}  // namespace

void write_tree(std::ostream& out, const StaticTree& t) {
  out << t.size() << ' ' << t.root() << '\n';
  for (Key k = 1; k <= t.size(); ++k) out << k << ' ' << t.left(k) << ' ' << t.right(k) << '\n';
}

StaticTree read_tree(std::istream& in) {
  Tokens tok(in, "tree");
  const std::size_t n = universe(tok);
  TreeShape s{n, kNone, std::vector<Key>(n + 1, kNone), std::vector<Key>(n + 1, kNone)};
  s.root = key_in_range(tok.unsigned_int("root"), n, "root");
  for (std::size_t k = 1; k <= n; ++k) {
    if (tok.unsigned_int("key") != k) tok.fail("node lines must list keys 1..n in ascending order");
    s.left[k] = key_in_range(tok.unsigned_int("left"), n, "left child", true);
    s.right[k] = key_in_range(tok.unsigned_int("right"), n, "right child", true);
  }
  tok.expect_end();
  if (!validate_tree(s)) tok.fail("links do not form a binary search tree over 1..n");
  return StaticTree(std::move(s));
}

void write_sequence(std::ostream& out, const SearchSequence& x) {
  out << x.universe() << ' ' << x.size() << '\n';
  if (x.empty()) return;
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << x[i];
  out << '\n';
}

SearchSequence read_sequence(std::istream& in) {
  Tokens tok(in, "sequence");
  const std::size_t n = universe(tok);
  const std::uint64_t m = tok.unsigned_int("m");
  std::vector<Key> items;
  items.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1U << 24)));
  for (std::uint64_t i = 0; i < m; ++i) items.push_back(key_in_range(tok.unsigned_int("search key"), n, "search key"));
  tok.expect_end();
  return SearchSequence(n, std::move(items));
}

void write_frequencies(std::ostream& out, const SearchStats& s) {
  const std::size_t n = s.universe();
  out << n << ' ' << s.length() << ' ' << s.first().value_or(kNone) << ' ' << s.last().value_or(kNone)
      << '\n';
  for (Key a = 1; a <= n; ++a) out << (a > 1 ? " " : "") << s.searches(a);
  out << '\n';
  for (Key a = 1; a <= n; ++a) {
    for (Key b = 1; b <= n; ++b) {
      if (const auto f = s.pair(a, b); f != 0) out << a << ' ' << b << ' ' << f << '\n';
    }
  }
}

SearchStats read_frequencies(std::istream& in) {
  Tokens tok(in, "frequencies");
  const std::size_t n = universe(tok);
  const std::uint64_t m = tok.unsigned_int("m");
  const std::uint64_t first = tok.unsigned_int("first");
  const std::uint64_t last = tok.unsigned_int("last");
  std::optional<Key> first_key, last_key;
  if (m == 0) {
    if (first != 0 || last != 0) tok.fail("first and last must be 0 when m = 0");
  } else {
    first_key = key_in_range(first, n, "first key");
    last_key = key_in_range(last, n, "last key");
  }
  std::vector<std::uint64_t> searches(n + 1, 0);
  for (std::size_t a = 1; a <= n; ++a) searches[a] = tok.unsigned_int("search count");

  PairTable pairs(n);
  std::uint64_t prev = 0;
  while (!tok.done()) {
    const Key a = key_in_range(tok.unsigned_int("pair source"), n, "pair source");
    const Key b = key_in_range(tok.unsigned_int("pair target"), n, "pair target");
    const std::uint64_t count = tok.unsigned_int("pair count");
    if (count == 0) tok.fail("pair lines must have positive counts");
    const std::uint64_t index = (std::uint64_t{a} - 1) * n + b;
    if (index <= prev) tok.fail("pair lines must be strictly ascending in (a, b)");
    prev = index;
    pairs.set(a, b, count);
  }
  try {
    return SearchStats(std::move(pairs), static_cast<std::size_t>(m), std::move(searches), first_key,
                       last_key);
  } catch (const InputError& e) {
    tok.fail(e.what());
  }
}

void write_weights(std::ostream& out, const WeightVector& w) {
  out << w.size() << '\n';
  for (double v : w.values()) out << shortest(v) << '\n';
}

WeightVector read_weights(std::istream& in) {
  Tokens tok(in, "weights");
  const std::size_t n = universe(tok);
  std::vector<double> w(n);
  for (double& v : w) {
    v = tok.real("weight");
    if (!std::isfinite(v) || !(v > 0.0)) tok.fail("weights must be finite and strictly positive");
  }
  tok.expect_end();
  return WeightVector(std::move(w));
}

void write_matrix(std::ostream& out, const TransitionMatrix& m) {
  out << m.size() << '\n';
  for (Key a = 1; a <= m.size(); ++a) {
    const auto& row = m.row(a);
    for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << shortest(row[b]);
    out << '\n';
  }
}

TransitionMatrix read_matrix(std::istream& in) {
  Tokens tok(in, "matrix");
  const std::size_t n = universe(tok);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (auto& row : rows) {
    for (double& p : row) p = tok.real("probability");
  }
  tok.expect_end();
  try {
    return TransitionMatrix(std::move(rows));
  } catch (const InputError& e) {
    tok.fail(e.what());
  }
}

void write_multitree(std::ostream& out, const MultiTree& mt) {
  write_tree(out, mt.global());
  for (Key i = 1; i <= mt.size(); ++i) {
    out << 'T' << i << ':';
    for (Key k : mt.successors(i).members()) out << ' ' << k;
    out << '\n';
  }
}

std::string to_string(const StaticTree& t) { return serialize(&write_tree, t); }
std::string to_string(const SearchSequence& x) { return serialize(&write_sequence, x); }
std::string to_string(const SearchStats& s) { return serialize(&write_frequencies, s); }
std::string to_string(const WeightVector& w) { return serialize(&write_weights, w); }

StaticTree load_tree(const std::filesystem::path& path) { return load(path, read_tree); }
SearchSequence load_sequence(const std::filesystem::path& path) { return load(path, read_sequence); }
SearchStats load_frequencies(const std::filesystem::path& path) { return load(path, read_frequencies); }
WeightVector load_weights(const std::filesystem::path& path) { return load(path, read_weights); }
TransitionMatrix load_matrix(const std::filesystem::path& path) { return load(path, read_matrix); }

void save(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot create '" + path.string() + "'");
  out << contents;
  if (!out) throw UsageError("failed writing '" + path.string() + "'");
}

}  // namespace lazyfinger::io
