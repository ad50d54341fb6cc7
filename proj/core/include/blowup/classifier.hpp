#pragma once

#include <optional>

#include "blowup/exactgeom.hpp"
#include "blowup/rational.hpp"
#include "blowup/weights.hpp"

namespace blowup {

// Verdict for the weighted blowup of A^d with weights n at a given eps.
//
// The witness is present iff a flag is false. When eps-log canonicity fails it
// is the first interior lattice point (which refutes both flags); otherwise it
// is the first non-vertex point of the closed simplex. "First" means smallest
// coset index k, then lexicographically smallest translate z.
struct SingularityClass {
  Rat eps{1};
  bool eps_log_terminal = false;
  bool eps_log_canonical = false;
  std::optional<LatticeWitness> witness;
};

SingularityClass classify(const WeightVector& n, const Rat& eps);

// Terminal test at eps = 1 straight from residues: for every k in [1, V-1]
// the residues k n_i mod V must sum to more than V. Stops at the first
// violating k.
bool is_terminal_fast(const WeightVector& n);

// Canonical test at eps = 1. A coset point lies in the open standard simplex
// iff all its residues are positive and they sum to less than V, so canonical
// means: for every k, some residue vanishes or the residues sum to at least V.
bool is_canonical_fast(const WeightVector& n);

// True iff d = 3 and the sorted weights are (1, a, b) with gcd(a, b) = 1.
bool kawakita_form(const WeightVector& n);

}  // namespace blowup
