#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

// Primitive nonnegative weight vector n = (n_1, ..., n_d) of a weighted
// blowup, with index V = sum(n) - 1 >= 1.
//
// Construction validates primitivity and the index; zero weights are allowed
// here (they are points of the closed orthant) but every classification entry
// point calls require_positive().
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::int64_t> weights);

  std::size_t dim() const noexcept { return weights_.size(); }
  std::int64_t index() const noexcept { return index_; }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  std::int64_t operator[](std::size_t i) const { return weights_[i]; }

  std::int64_t min_weight() const;
  bool all_positive() const;
  // Throws InvalidArgument when some weight is zero (a degenerate blowup).
  void require_positive() const;

  // Nondecreasing representative of the permutation class.
  WeightVector sorted() const;

  // "(a,b,c)"
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) {
    return a.weights_ <=> b.weights_;
  }

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t index_;
};

// gcd of all entries (0 for the empty or all-zero sequence).
std::int64_t gcd_of(std::span<const std::int64_t> values);

// The generating point p = n / V of the cyclic lattice Z^d + Z p. It lies in
// Omega = { x >= 0, sum(x) > 1 } and satisfies sum(p) = 1 + 1/V.
class GeneratingPoint {
 public:
  explicit GeneratingPoint(WeightVector weights);

  const WeightVector& weights() const noexcept { return weights_; }
  std::span<const Rat> coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  std::int64_t index() const noexcept { return weights_.index(); }

 private:
  WeightVector weights_;
  std::vector<Rat> coords_;
};

}  // namespace blowup
