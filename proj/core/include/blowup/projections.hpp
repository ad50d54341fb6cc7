#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

// A projected point configuration S = {s_0, s_1, ..., s_d} in Z^k, k <= 3,
// given as a multiset. `origin` designates the image of the origin; the
// remaining points are the images of e_1, ..., e_d.
struct ProjectedConfig {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<std::int64_t>> points;
  std::size_t origin = 0;
};

// A facet-supporting hyperplane {normal . x = offset} of Conv(S), with the
// normal primitive and oriented so that normal . s <= offset for all of S.
// `incident` lists the indices of points on the hyperplane.
struct FacetData {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;
  std::vector<std::size_t> incident;

  friend bool operator==(const FacetData&, const FacetData&) = default;
};

// Facets by brute force over k-subsets of distinct points, sorted by
// (normal, offset). Throws InvalidArgument when k is not in 1..3, points
// have the wrong length, or S does not affinely span R^k.
std::vector<FacetData> facets(const ProjectedConfig& s);

// max - min of the facet's primitive functional over S.
std::int64_t facet_width(const ProjectedConfig& s, const FacetData& f);

std::int64_t max_facet_width(const ProjectedConfig& s);

// max over facets H of min over s_i off H of dist(H, s_0) / dist(H, s_i);
// facets through s_0 contribute 0. Throws InvalidArgument if some facet
// contains every s_i with i >= 1.
Rat ell_L(const ProjectedConfig& s);

}  // namespace blowup
