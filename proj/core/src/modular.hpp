#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace blowup::detail {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m, if a is a unit.
inline std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, m);
}

}  // namespace blowup::detail
