#pragma once

#include <cstdint>
#include <string>

namespace lazyfinger {

// Fixed-point rendering with 6 fractional digits, round-half-even on the
// exact binary value.
std::string format_fixed6(double value);

// numerator / denominator to 6 fractional digits, computed exactly in integers
// with round-half-even. denominator = 0 renders "0.000000".
std::string format_ratio6(std::uint64_t numerator, std::uint64_t denominator);

}  // namespace lazyfinger
