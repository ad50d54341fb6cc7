#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "blowup/classifier.hpp"
#include "blowup/histogram.hpp"
#include "blowup/rational.hpp"
#include "blowup/weights.hpp"

namespace blowup {

// Which singularity condition a census keeps. Terminal and Canonical are the
// eps = 1 cases and use the residue fast paths; the eps variants run the
// geometric classifier at the query's eps.
enum class Verdict { Terminal, Canonical, EpsLogTerminal, EpsLogCanonical };

std::string_view to_string(Verdict v) noexcept;
Verdict parse_verdict(std::string_view text);

struct CensusQuery {
  std::size_t dim = 4;
  std::int64_t v_min = 1;
  std::int64_t v_max = 1;
  Rat eps{1};
  std::optional<std::int64_t> min_weight;  // keep hits with n_min >= t
  Verdict verdict = Verdict::Terminal;
};

struct CensusOptions {
  unsigned threads = 0;                         // 0: hardware concurrency
  std::uint64_t budget = 100'000'000;           // cap on projected candidates
};

struct CensusResult {
  Histogram histogram;                 // n_min over every vector passing the verdict
  std::vector<WeightVector> hits;      // passing vectors that also meet min_weight, by (V, lex)
  std::uint64_t candidates = 0;        // primitive sorted vectors examined
};

// All nondecreasing primitive n with n_i >= 1 and sum(n) = V + 1, in
// lexicographic order: one representative per permutation class.
std::vector<WeightVector> enumerate_blowups(std::size_t d, std::int64_t V);

// Same enumeration restricted to vectors with n_1 == first, streamed.
void for_each_blowup(std::size_t d, std::int64_t V, std::int64_t first,
                     const std::function<void(std::span<const std::int64_t>)>& visit);

// Number of partitions of V + 1 into d positive parts summed over the range
// (an upper bound on the candidates, ignoring primitivity). Saturates at
// `stop_above` + 1 so huge ranges cost nothing to reject.
std::uint64_t projected_candidates(std::size_t d, std::int64_t v_min, std::int64_t v_max,
                                   std::uint64_t stop_above = UINT64_MAX - 1);

bool passes(const WeightVector& n, Verdict verdict, const Rat& eps);

// Deterministic regardless of options.threads: work is split into
// (V, n_1) blocks and merged back in block order.
CensusResult run_census(const CensusQuery& query, const CensusOptions& options = {});

struct FamilyCheck {
  std::int64_t value = 0;
  std::optional<WeightVector> weights;       // absent when the filled vector is imprimitive
  std::optional<SingularityClass> verdict;
  std::int64_t n_min = 0;
};

// Fills the single empty slot of `pattern` with every value in [lo, hi] and
// classifies the result at eps. Imprimitive fillings are reported without a
// verdict rather than failing the run.
std::vector<FamilyCheck> verify_family(std::span<const std::optional<std::int64_t>> pattern,
                                       std::int64_t lo, std::int64_t hi, const Rat& eps);

}  // namespace blowup
