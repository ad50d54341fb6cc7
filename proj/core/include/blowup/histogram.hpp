#pragma once

#include <cstdint>
#include <map>

namespace blowup {

// Counts keyed by smallest weight n_min. total always equals the sum of the
// counts.
struct Histogram {
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t total = 0;

  void add(std::int64_t n_min, std::int64_t times = 1);
  void merge(const Histogram& other);
  std::int64_t count(std::int64_t n_min) const;
  std::int64_t max_key() const;  // 0 when empty

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

}  // namespace blowup
