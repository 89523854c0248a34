#pragma once

#include "lazyfinger/sequence.hpp"

namespace lazyfinger {

// Shannon entropy (base 2) of the per-key search counts.
// Throws InputError when m = 0.
double entropy(const SearchStats& s);

// Entropy of the successor given the predecessor, averaged over transitions:
// sum over f(a,b) > 0 of f(a,b)/t * lg(out(a)/f(a,b)), with out(a) the row sum.
// Throws InputError when m < 2.
double conditional_entropy(const SearchStats& s);

// Same quantity for a bare transition table; throws InputError if it is empty.
double conditional_entropy(const PairTable& pairs);

}  // namespace lazyfinger
