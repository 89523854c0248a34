#pragma once

#include <cstddef>
#include <cstdint>

namespace lazyfinger {

// Keys are the integers 1..n. Zero is the "no node" sentinel.
using Key = std::uint32_t;
inline constexpr Key kNone = 0;

// Edge and comparison counts.
using Cost = std::uint64_t;

}  // namespace lazyfinger
