#include "output.hpp"

namespace blowup::cli {

Json to_json(const Rat& r) { return r.to_string(); }

Json to_json(const WeightVector& n) {
  Json a = Json::array();
  for (auto w : n.weights()) a.push_back(w);
  return a;
}

Json to_json(const LatticeWitness& w) {
  Json point = Json::array();
  for (const auto& x : w.point) point.push_back(to_json(x));
  return Json{{"k", w.k}, {"z", w.z}, {"point", point}, {"membership", to_string(w.membership)}};
}

Json to_json(const Histogram& h) {
  Json rows = Json::array();
  for (const auto& [n_min, count] : h.counts) rows.push_back({{"n_min", n_min}, {"count", count}});
  return rows;
}

Json to_json(const SporadicRecord& r) {
  return Json{{"V", r.volume}, {"residues", r.residues}};
}

void write_histogram_csv(std::ostream& os, const Histogram& h) {
  os << "n_min,count\n";
  for (const auto& [n_min, count] : h.counts) os << n_min << ',' << count << '\n';
}

void write_hits_csv(std::ostream& os, std::span<const WeightVector> hits) {
  std::size_t d = hits.empty() ? 0 : hits.front().dim();
  os << 'V';
  for (std::size_t i = 1; i <= d; ++i) os << ",n_" << i;
  os << ",n_min\n";
  for (const auto& n : hits) {
    os << n.index();
    for (auto w : n.weights()) os << ',' << w;
    os << ',' << n.min_weight() << '\n';
  }
}

}  // namespace blowup::cli
