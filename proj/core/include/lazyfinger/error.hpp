#pragma once

#include <stdexcept>
#include <string>

namespace lazyfinger {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters: n = 0, d out of range, non power-of-two bit-reversal.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Text input that does not parse or violates its file format's invariants.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that is semantically unusable: keys outside 1..n,
// mismatched universes, too few searches for the requested quantity.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace lazyfinger
