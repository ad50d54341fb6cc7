#pragma once

#include <ostream>
#include <span>

#include <json.hpp>

#include "blowup/classifier.hpp"
#include "blowup/histogram.hpp"
#include "blowup/projections.hpp"
#include "blowup/sporadic.hpp"
#include "blowup/weights.hpp"

namespace blowup::cli {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("1/2") so no precision is lost on the way
// through a JSON parser.
Json to_json(const Rat& r);
Json to_json(const WeightVector& n);
Json to_json(const LatticeWitness& w);
Json to_json(const Histogram& h);
Json to_json(const SporadicRecord& r);

void write_histogram_csv(std::ostream& os, const Histogram& h);
// V,n_1,...,n_d,n_min
void write_hits_csv(std::ostream& os, std::span<const WeightVector> hits);

}  // namespace blowup::cli
