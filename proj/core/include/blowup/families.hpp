#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "blowup/rational.hpp"
#include "blowup/weights.hpp"

namespace blowup {

// Resolution of the "plus or minus" in the modifier of rows N7-N17. The choice
// is made once per row; both entries of a row flip together.
enum class Sign { Plus, Minus };

// One row of the table of one-parameter families of hollow 4-simplices
// (Q1-Q29 primitive, N1-N17 non-primitive).
//
// The affine dependence of the family at volume V is base + V * modifier
// (with the modifier negated under Sign::Minus for rows with has_sign). base
// sums to zero; the modifier is zero for Q-rows and otherwise sums to +-1,
// which is zero modulo V after scaling. base is ordered
// q1 > q2 > 0 > q3 >= q4 >= q5.
struct Quintuple {
  std::string_view id;
  std::array<std::int64_t, 5> base;
  std::array<Rat, 5> modifier;
  bool has_sign = false;

  bool primitive() const noexcept;
  // lcm of the modifier denominators (1 for Q-rows): V must be a multiple.
  std::int64_t modifier_denominator() const noexcept;
};

std::span<const Quintuple> quintuple_table();

// Throws InvalidArgument for an unknown id.
const Quintuple& find_quintuple(std::string_view id);

// base + V * modifier. Throws InvalidArgument when V * modifier is not
// integral.
std::array<Rat, 5> instantiate(const Quintuple& q, std::int64_t V, Sign sign = Sign::Plus);

// Reads the blowup weights off the family member of volume V with the vertex
// `apex` (1..5) as origin: scale the instantiated tuple by a unit of Z_V so
// that the apex entry becomes -1, drop it, and keep the other four residues
// in [0, V-1] if they are positive, primitive and sum to V + 1. Absent
// otherwise, including when the apex entry is not a unit modulo V.
std::optional<WeightVector> blowup_from_quintuple(const Quintuple& q, int apex, std::int64_t V,
                                                  Sign sign = Sign::Plus);

// max over i != apex of -a_i / a_apex. Throws InvalidArgument when the apex
// entry is zero.
Rat bound_dim1(std::span<const std::int64_t, 5> tuple, int apex);

// The smallest-weight bound for the family's line direction. Only the base
// part of the row enters: the bound depends on the line, not on V.
Rat bound_dim1(const Quintuple& q, int apex);

// If sum_{i in J} p_i - s * sum_i p_i is an integer, every blowup with
// generating point p has sum_{i in J} n_i <= s (or all weights off J vanish);
// returns s. Otherwise absent. J holds 0-based coordinate indices and must be
// a proper nonempty subset.
std::optional<std::int64_t> bound_subset(std::span<const Rat> p, std::span<const std::size_t> J,
                                         std::int64_t s);

// max{-q1/q3, -q5/q2} < 7 on the base, which caps n_min at 6 for every
// member of the family.
bool check_ratio_lemma(const Quintuple& q);

// id,q1..q5,r1..r5 numerators,r denominator,plus_minus
std::string quintuple_table_csv();

}  // namespace blowup
