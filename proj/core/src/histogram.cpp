#include "blowup/histogram.hpp"

#include "blowup/errors.hpp"

namespace blowup {

void Histogram::add(std::int64_t n_min, std::int64_t times) {
  if (n_min < 1) throw InvalidArgument("histogram keys must be >= 1");
  if (times <= 0) return;
  counts[n_min] += times;
  total += times;
}

void Histogram::merge(const Histogram& other) {
  for (const auto& [key, c] : other.counts) add(key, c);
}

std::int64_t Histogram::count(std::int64_t n_min) const {
  auto it = counts.find(n_min);
  return it == counts.end() ? 0 : it->second;
}

std::int64_t Histogram::max_key() const { return counts.empty() ? 0 : counts.rbegin()->first; }

}  // namespace blowup
