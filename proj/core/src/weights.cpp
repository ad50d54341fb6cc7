#include "blowup/weights.hpp"

#include <algorithm>
#include <numeric>

#include "blowup/errors.hpp"

namespace blowup {

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

WeightVector::WeightVector(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) {
    throw InvalidArgument("a weight vector needs at least two entries");
  }
  std::int64_t sum = 0;
  for (auto w : weights_) {
    if (w < 0) throw InvalidArgument("weights must be nonnegative");
    if (__builtin_add_overflow(sum, w, &sum)) throw OverflowError("weight sum overflows");
  }
  if (sum < 2) throw InvalidArgument("weights must sum to at least 2 (index V >= 1)");
  if (gcd_of(weights_) != 1) {
    throw InvalidArgument("weights " + to_string() + " are not primitive (gcd > 1)");
  }
  index_ = sum - 1;
}

std::int64_t WeightVector::min_weight() const {
  return *std::min_element(weights_.begin(), weights_.end());
}

bool WeightVector::all_positive() const {
  return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w > 0; });
}

void WeightVector::require_positive() const {
  if (!all_positive()) {
    throw InvalidArgument("weights " + to_string() + " contain a zero: degenerate blowup");
  }
}

WeightVector WeightVector::sorted() const {
  auto w = weights_;
  std::sort(w.begin(), w.end());
  return WeightVector(std::move(w));
}

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(weights_[i]);
  }
  return s + ")";
}

GeneratingPoint::GeneratingPoint(WeightVector weights) : weights_(std::move(weights)) {
  coords_.reserve(weights_.dim());
  for (auto w : weights_.weights()) coords_.emplace_back(w, weights_.index());
}

}  // namespace blowup
