#include "blowup/classifier.hpp"

#include <algorithm>
#include <numeric>

namespace blowup {

SingularityClass classify(const WeightVector& n, const Rat& eps) {
  n.require_positive();
  const ShrunkSimplex simplex(GeneratingPoint(n), eps);

  std::optional<LatticeWitness> first_nonvertex;
  std::optional<LatticeWitness> first_interior;
  CosetScanner(simplex).for_each(
      [&](std::int64_t k, std::span<const std::int64_t> z, Membership m) {
        if (m == Membership::Vertex) return true;
        if (!first_nonvertex) first_nonvertex = make_witness(simplex.point(), k, z, m);
        if (m == Membership::Interior) {
          first_interior = make_witness(simplex.point(), k, z, m);
          return false;
        }
        return true;
      });

  SingularityClass out;
  out.eps = eps;
  out.eps_log_terminal = !first_nonvertex;
  out.eps_log_canonical = !first_interior;
  if (first_interior) {
    out.witness = std::move(first_interior);
  } else if (first_nonvertex) {
    out.witness = std::move(first_nonvertex);
  }
  return out;
}

bool is_terminal_fast(const WeightVector& n) {
  n.require_positive();
  const std::int64_t V = n.index();
  const std::size_t d = n.dim();
  std::vector<std::int64_t> step(d), residue(d, 0);
  for (std::size_t i = 0; i < d; ++i) step[i] = n[i] % V;
  for (std::int64_t k = 1; k < V; ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < d; ++i) {
      residue[i] += step[i];
      if (residue[i] >= V) residue[i] -= V;
      sum += residue[i];
    }
    if (sum <= V) return false;
  }
  return true;
}

bool is_canonical_fast(const WeightVector& n) {
  n.require_positive();
  const std::int64_t V = n.index();
  const std::size_t d = n.dim();
  std::vector<std::int64_t> step(d), residue(d, 0);
  for (std::size_t i = 0; i < d; ++i) step[i] = n[i] % V;
  for (std::int64_t k = 1; k < V; ++k) {
    std::int64_t sum = 0;
    bool on_coordinate_facet = false;
    for (std::size_t i = 0; i < d; ++i) {
      residue[i] += step[i];
      if (residue[i] >= V) residue[i] -= V;
      sum += residue[i];
      on_coordinate_facet = on_coordinate_facet || residue[i] == 0;
    }
    if (!on_coordinate_facet && sum < V) return false;
  }
  return true;
}

bool kawakita_form(const WeightVector& n) {
  if (n.dim() != 3) throw InvalidArgument("kawakita_form needs d = 3, got d = " + std::to_string(n.dim()));
  n.require_positive();
  auto w = n.sorted();
  return w[0] == 1 && std::gcd(w[1], w[2]) == 1;
}

}  // namespace blowup
