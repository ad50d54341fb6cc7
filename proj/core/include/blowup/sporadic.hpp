#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "blowup/histogram.hpp"
#include "blowup/weights.hpp"

namespace blowup {

// An empty 4-simplex of normalized volume V, given by the residues b in
// (Z_V)^5 such that b / V are barycentric coordinates of a generator of the
// lattice modulo Z^4. Residues are stored reduced to [0, V-1]; sum(b) == 0
// mod V.
struct SporadicRecord {
  std::int64_t volume = 1;
  std::array<std::int64_t, 5> residues{};

  friend bool operator==(const SporadicRecord&, const SporadicRecord&) = default;
};

struct ParseOptions {
  // Strict: whitespace-separated, residues already in [0, V-1]. Liberal also
  // accepts commas and any integer representative.
  bool strict = false;
};

// One record per non-comment line: "V b1 b2 b3 b4 b5". Lines starting with
// '#' and blank lines are skipped. Throws DataError naming the line for
// malformed input and for records whose residues do not sum to 0 mod V.
std::vector<SporadicRecord> parse_dataset(std::istream& in, ParseOptions options = {});
std::vector<SporadicRecord> parse_dataset(const std::filesystem::path& path,
                                          ParseOptions options = {});

struct ApexBlowup {
  int apex = 0;  // 1..5
  WeightVector weights;
};

// For each apex l with b_l a unit mod V: scale b so that b_l = -1, drop it,
// and emit the other four residues when they sum to V + 1 (and are positive
// and primitive). Symmetric records may emit the same weights more than once.
std::vector<ApexBlowup> blowups_from_record(const SporadicRecord& r);

// (V, (n_1, n_2, n_3, n_4, V - 1)) for positive 4-dimensional n; apex 5 of
// the result gives back n.
SporadicRecord record_from_weights(const WeightVector& n);

// n_min over every (record, apex) pair that yields a blowup.
Histogram sporadic_histogram(std::span<const SporadicRecord> records);

struct SporadicReport {
  std::size_t records = 0;
  Histogram histogram;                 // per (record, apex) pair
  std::size_t distinct = 0;            // distinct (V, sorted weights)
  std::optional<SporadicRecord> argmax_record;
  std::optional<WeightVector> argmax_weights;  // first blowup reaching the largest n_min
};

SporadicReport sporadic_report(std::span<const SporadicRecord> records);

// Records used as fixtures: the V=245 maximizer of n_min, the V=419 record of
// largest volume, and the V=37 record of the blowup (6,10,15,7).
std::span<const SporadicRecord> embedded_fixtures();

}  // namespace blowup
