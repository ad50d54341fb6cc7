#include "blowup/families.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "blowup/errors.hpp"
#include "modular.hpp"

namespace blowup {
namespace {

using detail::inverse_mod;
using detail::mod;

const Rat h{1, 2};
const Rat t1{1, 3};
const Rat t2{2, 3};
const Rat f1{1, 4};
const Rat s1{1, 6};
const Rat o{0};

Quintuple Q(std::string_view id, std::array<std::int64_t, 5> q) { return {id, q, {o, o, o, o, o}, false}; }
Quintuple N(std::string_view id, std::array<std::int64_t, 5> q, std::array<Rat, 5> r, bool pm) {
  return {id, q, r, pm};
}

const std::array<Quintuple, 46>& table() {
  static const std::array<Quintuple, 46> rows = {
      Q("Q1", {9, 1, -2, -3, -5}),
      Q("Q2", {9, 2, -1, -4, -6}),
      Q("Q3", {12, 3, -4, -5, -6}),
      Q("Q4", {12, 2, -3, -4, -7}),
      Q("Q5", {9, 4, -2, -3, -8}),
      Q("Q6", {12, 1, -2, -3, -8}),
      Q("Q7", {12, 3, -1, -6, -8}),
      Q("Q8", {15, 4, -5, -6, -8}),
      Q("Q9", {12, 2, -1, -4, -9}),
      Q("Q10", {10, 6, -2, -5, -9}),
      Q("Q11", {15, 1, -2, -5, -9}),
      Q("Q12", {12, 5, -3, -4, -10}),
      Q("Q13", {15, 2, -3, -4, -10}),
      Q("Q14", {12, 1, -3, -4, -6}),
      Q("Q15", {14, 1, -3, -5, -7}),
      Q("Q16", {14, 3, -1, -7, -9}),
      Q("Q17", {15, 7, -3, -5, -14}),
      Q("Q18", {15, 1, -3, -5, -8}),
      Q("Q19", {15, 2, -1, -6, -10}),
      Q("Q20", {15, 4, -2, -5, -12}),
      Q("Q21", {18, 1, -4, -6, -9}),
      Q("Q22", {18, 2, -5, -6, -9}),
      Q("Q23", {18, 4, -1, -9, -12}),
      Q("Q24", {20, 1, -4, -7, -10}),
      Q("Q25", {20, 1, -3, -8, -10}),
      Q("Q26", {20, 3, -4, -9, -10}),
      Q("Q27", {20, 3, -1, -10, -12}),
      Q("Q28", {24, 1, -5, -8, -12}),
      Q("Q29", {30, 1, -6, -10, -15}),
      N("N1", {6, 1, -2, -2, -3}, {h, o, o, h, o}, false),
      N("N2", {4, 3, -1, -2, -4}, {o, o, o, h, h}, false),
      N("N3", {8, 1, -2, -3, -4}, {o, o, h, o, h}, false),
      N("N4", {6, 3, -1, -2, -6}, {h, o, o, h, o}, false),
      N("N5", {8, 3, -1, -4, -6}, {o, o, o, h, h}, false),
      N("N6", {12, 1, -3, -4, -6}, {o, o, o, h, h}, false),
      N("N7", {3, 1, -1, -1, -2}, {o, o, t1, t2, o}, true),
      N("N8", {3, 2, -1, -1, -3}, {o, o, o, t2, t1}, true),
      N("N9", {3, 2, -1, -2, -2}, {o, o, o, t1, t2}, true),
      N("N10", {4, 2, -1, -1, -4}, {t1, o, o, t2, o}, true),
      N("N11", {6, 1, -2, -2, -3}, {o, o, o, t2, t1}, true),
      N("N12", {6, 1, -1, -2, -4}, {o, o, t2, o, t1}, true),
      N("N13", {4, 3, -1, -2, -4}, {o, o, t2, o, t1}, true),
      N("N14", {6, 3, -1, -2, -6}, {o, t1, o, t1, t1}, true),
      N("N15", {3, 2, -1, -1, -3}, {f1, o, o, f1, h}, true),
      N("N16", {6, 1, -1, -3, -3}, {o, f1, o, f1, h}, true),
      N("N17", {3, 1, -1, -1, -2}, {o, s1, o, s1, t2}, true),
  };
  return rows;
}

void check_apex(int apex) {
  if (apex < 1 || apex > 5) throw InvalidArgument("apex must be in 1..5, got " + std::to_string(apex));
}

}  // namespace

bool Quintuple::primitive() const noexcept {
  return std::all_of(modifier.begin(), modifier.end(), [](const Rat& r) { return r == Rat(0); });
}

std::int64_t Quintuple::modifier_denominator() const noexcept {
  std::int64_t m = 1;
  for (const auto& r : modifier) m = std::lcm(m, r.den());
  return m;
}

std::span<const Quintuple> quintuple_table() { return table(); }

const Quintuple& find_quintuple(std::string_view id) {
  for (const auto& q : table()) {
    if (q.id == id) return q;
  }
  throw InvalidArgument("unknown quintuple id '" + std::string(id) + "'");
}

std::array<Rat, 5> instantiate(const Quintuple& q, std::int64_t V, Sign sign) {
  if (V < 1) throw InvalidArgument("volume V must be positive");
  const std::int64_t m = q.modifier_denominator();
  if (V % m != 0) {
    throw InvalidArgument(std::string(q.id) + " needs V divisible by " + std::to_string(m) +
                          ", got V=" + std::to_string(V));
  }
  const Rat scale = (q.has_sign && sign == Sign::Minus) ? Rat(-V) : Rat(V);
  std::array<Rat, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = Rat(q.base[i]) + scale * q.modifier[i];
  return out;
}

std::optional<WeightVector> blowup_from_quintuple(const Quintuple& q, int apex, std::int64_t V,
                                                  Sign sign) {
  check_apex(apex);
  const auto a = instantiate(q, V, sign);
  const auto l = static_cast<std::size_t>(apex - 1);
  auto inv = inverse_mod(a[l].num(), V);
  if (!inv) return std::nullopt;
  const std::int64_t unit = mod(-*inv, V);

  std::vector<std::int64_t> weights;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == l) continue;
    const auto r = static_cast<std::int64_t>(static_cast<__int128>(mod(a[i].num(), V)) * unit % V);
    if (r == 0) return std::nullopt;
    weights.push_back(r);
    sum += r;
  }
  if (sum != V + 1 || gcd_of(weights) != 1) return std::nullopt;
  return WeightVector(std::move(weights));
}

Rat bound_dim1(std::span<const std::int64_t, 5> tuple, int apex) {
  check_apex(apex);
  const auto l = static_cast<std::size_t>(apex - 1);
  if (tuple[l] == 0) throw InvalidArgument("apex entry is zero: the line lies in H_0");
  std::optional<Rat> best;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == l) continue;
    Rat r = Rat(-tuple[i], tuple[l]);
    if (!best || r > *best) best = r;
  }
  return *best;
}

Rat bound_dim1(const Quintuple& q, int apex) { return bound_dim1(std::span<const std::int64_t, 5>(q.base), apex); }

std::optional<std::int64_t> bound_subset(std::span<const Rat> p, std::span<const std::size_t> J,
                                         std::int64_t s) {
  if (J.empty() || J.size() >= p.size()) {
    throw InvalidArgument("J must be a proper nonempty subset of the coordinates");
  }
  if (s < 1) throw InvalidArgument("s must be a positive integer");
  std::vector<bool> seen(p.size(), false);
  Rat in_j(0), all(0);
  for (auto j : J) {
    if (j >= p.size() || seen[j]) throw InvalidArgument("J has an out-of-range or repeated index");
    seen[j] = true;
    in_j += p[j];
  }
  for (const auto& c : p) all += c;
  if (!(in_j - Rat(s) * all).is_integer()) return std::nullopt;
  return s;
}

bool check_ratio_lemma(const Quintuple& q) {
  const auto& b = q.base;
  const Rat first = Rat(-b[0], b[2]);
  const Rat second = Rat(-b[4], b[1]);
  return std::max(first, second) < Rat(7);
}

std::string quintuple_table_csv() {
  std::string out = "id,q1,q2,q3,q4,q5,r1,r2,r3,r4,r5,r_den,plus_minus\n";
  for (const auto& q : table()) {
    const std::int64_t m = q.modifier_denominator();
    out += q.id;
    for (auto b : q.base) out += "," + std::to_string(b);
    for (const auto& r : q.modifier) out += "," + std::to_string((r * Rat(m)).num());
    out += "," + std::to_string(m) + "," + (q.has_sign ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace blowup
