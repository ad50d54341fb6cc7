#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "blowup/weights.hpp"

namespace blowup::testing {

// Uniform-ish positive primitive weight vector of dimension d with index at
// most v_max. Rejection sampling on the composition of V + 1.
inline WeightVector random_weights(std::mt19937_64& rng, std::size_t d, std::int64_t v_max) {
  const std::int64_t v_min = std::max<std::int64_t>(1, static_cast<std::int64_t>(d) - 1);
  std::uniform_int_distribution<std::int64_t> pick_v(v_min, std::max(v_min, v_max));
  for (;;) {
    const std::int64_t total = pick_v(rng) + 1;
    // d - 1 distinct cut points in [1, total - 1].
    std::vector<std::int64_t> cuts;
    std::uniform_int_distribution<std::int64_t> pick_cut(1, total - 1);
    while (cuts.size() + 1 < d) {
      const std::int64_t c = pick_cut(rng);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::int64_t> n;
    std::int64_t prev = 0;
    for (std::int64_t c : cuts) {
      n.push_back(c - prev);
      prev = c;
    }
    n.push_back(total - prev);
    if (gcd_of(n) == 1) return WeightVector(std::move(n));
  }
}

inline WeightVector shuffled(const WeightVector& n, std::mt19937_64& rng) {
  std::vector<std::int64_t> w(n.weights().begin(), n.weights().end());
  std::shuffle(w.begin(), w.end(), rng);
  return WeightVector(std::move(w));
}

}  // namespace blowup::testing
