#include "blowup/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "blowup/errors.hpp"

namespace blowup {
namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("rational literal out of range: " + std::string(whole));
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidArgument("not an exact rational (expected p/q or an integer): " +
                          std::string(whole));
  }
  return v;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  *this = from_wide(num, den);
}

Rat Rat::from_wide(i128 num, i128 den) {
  if (den == 0) throw InvalidArgument("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits64(num) || !fits64(den)) {
    throw OverflowError("rational arithmetic overflowed 64-bit range");
  }
  Rat r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, text));
  std::int64_t n = parse_int(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidArgument("denominator must be an unsigned integer: " + std::string(text));
  }
  std::int64_t d = parse_int(den_text, text);
  if (d == 0) throw InvalidArgument("rational with zero denominator: " + std::string(text));
  return Rat(n, d);
}

std::int64_t Rat::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rat::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rat Rat::frac() const { return from_wide(static_cast<i128>(num_) - static_cast<i128>(floor()) * den_, den_); }

Rat Rat::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == o.den_) return *this = from_wide(static_cast<i128>(num_) + o.num_, den_);
  return *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                           static_cast<i128>(den_) * o.den_);
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  return *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw InvalidArgument("division by zero");
  return *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept {
  // Denominators are positive, so cross-multiplication preserves order; the
  // products fit in 128 bits for any pair of 64-bit operands.
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rat::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace blowup
