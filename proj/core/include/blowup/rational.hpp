#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace blowup {

// Exact rational number in canonical form: gcd(|num|, den) == 1, den >= 1.
//
// Intermediate results are formed in 128 bits and narrowed back with a range
// check, so an operation either returns the exact value or throws
// OverflowError. Nothing ever wraps.
class Rat {
 public:
  constexpr Rat() noexcept = default;
  Rat(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit by design of the arithmetic
  Rat(std::int64_t num, std::int64_t den);

  // Accepts "p/q", "-p/q" or a plain integer. Decimals are rejected.
  static Rat parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  // x - floor(x), always in [0, 1).
  Rat frac() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat&, const Rat&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept;

  std::string to_string() const;

 private:
  static Rat from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace blowup
