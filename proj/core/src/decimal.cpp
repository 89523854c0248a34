#include "lazyfinger/decimal.hpp"

#include <cstdio>

namespace lazyfinger {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

std::string format_ratio6(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return "0.000000";
  constexpr std::uint64_t kScale = 1'000'000;
  const u128 scaled = static_cast<u128>(numerator) * kScale;
  u128 q = scaled / denominator;
  const u128 rem = scaled % denominator;
  const u128 twice = rem * 2;
  if (twice > denominator || (twice == denominator && (q & 1) == 1)) ++q;
  const auto whole = static_cast<std::uint64_t>(q / kScale);
  const auto frac = static_cast<std::uint64_t>(q % kScale);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%llu.%06llu", static_cast<unsigned long long>(whole),
                static_cast<unsigned long long>(frac));
  return buf;
}

}  // namespace lazyfinger
