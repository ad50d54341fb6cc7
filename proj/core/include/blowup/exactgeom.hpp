#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/rational.hpp"
#include "blowup/weights.hpp"

namespace blowup {

enum class Membership { Outside, Interior, BoundaryNonVertex, Vertex };

std::string_view to_string(Membership m) noexcept;

enum class Closure { Open, Closed };

// The simplex p + eps * (Delta - p), i.e. the standard simplex
// Conv(0, e_1, ..., e_d) shrunk towards the generating point p by eps.
//
// Vertex 0 is the apex (1 - eps) p, vertex i >= 1 is p + eps (e_i - p). Along
// every axis the simplex lies in [lower(i), lower(i) + eps].
class ShrunkSimplex {
 public:
  ShrunkSimplex(GeneratingPoint p, Rat eps);

  const GeneratingPoint& point() const noexcept { return p_; }
  const Rat& eps() const noexcept { return eps_; }
  std::size_t dim() const noexcept { return p_.dim(); }

  const Rat& lower(std::size_t axis) const { return lower_[axis]; }
  std::vector<Rat> vertex(std::size_t i) const;

 private:
  GeneratingPoint p_;
  Rat eps_;
  std::vector<Rat> lower_;
};

// A point k p + z of the lattice Lambda_p = Z^d + Z p, with its position
// relative to a shrunk simplex.
struct LatticeWitness {
  std::int64_t k = 0;
  std::vector<std::int64_t> z;
  std::vector<Rat> point;
  Membership membership = Membership::Outside;

  friend bool operator==(const LatticeWitness&, const LatticeWitness&) = default;
};

// The witness record for the point {k p} + z.
LatticeWitness make_witness(const GeneratingPoint& p, std::int64_t k,
                            std::span<const std::int64_t> z, Membership m);

// ({k n_1 / V}, ..., {k n_d / V}) for 1 <= k <= V - 1.
std::vector<Rat> frac_point(const WeightVector& n, std::int64_t k);

// Exact barycentric classification of x against the simplex.
Membership classify_point(std::span<const Rat> x, const ShrunkSimplex& s);

// All points of Lambda_p in the open interior (Closure::Open) or in the closed
// simplex (Closure::Closed), ordered by k and then lexicographically by z.
std::vector<LatticeWitness> lattice_points_in_shrunk_simplex(const ShrunkSimplex& s,
                                                             Closure mode);

// Walks the cosets k = 0, ..., V-1 of Lambda_p / Z^d and reports every lattice
// point inside the closed simplex, in (k, lex z) order.
//
// Coordinates are kept on the common grid 1/(b V) where eps = a/b, so every
// membership test is an exact integer comparison. Per coset and axis the
// admissible translates form an interval of length eps <= 1, hence at most two
// candidates.
class CosetScanner {
 public:
  explicit CosetScanner(const ShrunkSimplex& s);

  // visit(k, z, membership) -> bool; returning false stops the walk.
  template <typename Visitor>
  void for_each(Visitor&& visit) const;

  // Number of integer translates examined along one axis for coset k; used to
  // check the at-most-two-candidates bound.
  std::int64_t candidates_on_axis(std::int64_t k, std::size_t axis) const;

 private:
  static std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
  }
  static std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept {
    return -floor_div(-a, b);
  }

  std::vector<std::int64_t> step_;      // n_i mod V
  std::int64_t index_;
  std::int64_t eps_num_;
  std::int64_t eps_den_;
  std::int64_t scale_;                  // b V
  std::int64_t width_;                  // a V: eps on the scaled grid
  std::vector<std::int64_t> lower_;     // (b - a) n_i: (1 - eps) p_i on the scaled grid
};

template <typename Visitor>
void CosetScanner::for_each(Visitor&& visit) const {
  const std::size_t d = step_.size();
  std::vector<std::int64_t> residue(d, 0);  // k n_i mod V
  std::vector<std::int64_t> zlo(d), zhi(d), z(d), lambda(d);

  for (std::int64_t k = 0; k < index_; ++k) {
    if (k > 0) {
      for (std::size_t i = 0; i < d; ++i) {
        residue[i] += step_[i];
        if (residue[i] >= index_) residue[i] -= index_;
      }
    }
    bool empty = false;
    for (std::size_t i = 0; i < d && !empty; ++i) {
      const std::int64_t at = eps_den_ * residue[i];
      zlo[i] = ceil_div(lower_[i] - at, scale_);
      zhi[i] = floor_div(lower_[i] + width_ - at, scale_);
      empty = zlo[i] > zhi[i];
    }
    if (empty) continue;

    // Odometer over the (at most 2^d) translate combinations, lex order.
    z = zlo;
    for (;;) {
      std::int64_t used = 0;
      for (std::size_t i = 0; i < d; ++i) {
        lambda[i] = eps_den_ * (residue[i] + z[i] * index_) - lower_[i];
        used += lambda[i];
      }
      const std::int64_t lambda0 = width_ - used;
      if (lambda0 >= 0) {
        bool interior = lambda0 > 0;
        std::size_t at_width = lambda0 == width_;
        std::size_t zeros = lambda0 == 0;
        for (std::size_t i = 0; i < d; ++i) {
          interior = interior && lambda[i] > 0;
          at_width += lambda[i] == width_;
          zeros += lambda[i] == 0;
        }
        const Membership m = interior                          ? Membership::Interior
                             : (at_width == 1 && zeros == d) ? Membership::Vertex
                                                             : Membership::BoundaryNonVertex;
        if (!visit(k, std::span<const std::int64_t>(z), m)) return;
      }
      std::size_t axis = d;
      while (axis > 0 && z[axis - 1] == zhi[axis - 1]) {
        z[axis - 1] = zlo[axis - 1];
        --axis;
      }
      if (axis == 0) break;
      ++z[axis - 1];
    }
  }
}

// A point of Z^d found by the original-coordinates oracle.
struct OraclePoint {
  std::vector<std::int64_t> x;
  Membership membership = Membership::Outside;
};

// Every integer point of the closed simplex eps * Conv(e_1, ..., e_d, n),
// found by scanning the integer bounding box and solving barycentric
// coordinates exactly. Independent of the Lambda_p machinery; throws
// BudgetExceeded when V exceeds max_index.
std::vector<OraclePoint> brute_force_lattice_points(const WeightVector& n, const Rat& eps,
                                                    std::int64_t max_index = 60);

// The affine map fixing e_1, ..., e_d and sending n to the origin: x maps to
// x + (1 - sum(x)) p. It carries Z^d onto Lambda_p and eps * Delta_n onto the
// shrunk simplex.
std::vector<Rat> to_coset_frame(const WeightVector& n, std::span<const std::int64_t> x);

}  // namespace blowup
