#include "blowup/projections.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "blowup/errors.hpp"

namespace blowup {
namespace {

using Point = std::vector<std::int64_t>;

std::int64_t dot(const Point& a, const Point& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point minus(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Integer vector orthogonal to the differences spanning a candidate facet, or
// empty if those differences are linearly dependent.
Point normal_through(const std::vector<const Point*>& pts, std::size_t k) {
  Point n;
  if (k == 1) {
    n = {1};
  } else if (k == 2) {
    Point u = minus(*pts[1], *pts[0]);
    n = {-u[1], u[0]};
  } else {
    Point u = minus(*pts[1], *pts[0]);
    Point v = minus(*pts[2], *pts[0]);
    n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  }
  std::int64_t g = 0;
  for (auto c : n) g = std::gcd(g, c);
  if (g == 0) return {};
  for (auto& c : n) c /= g;
  return n;
}

std::size_t affine_rank(const std::vector<Point>& pts, std::size_t k) {
  // Rank of the differences to the first point, by fraction-free elimination.
  std::vector<Point> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(minus(pts[i], pts[0]));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](const Point& r) { return r[col] != 0; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::int64_t a = rows[rank][col], b = rows[r][col];
      for (std::size_t c = 0; c < k; ++c) rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
      std::int64_t g = 0;
      for (auto v : rows[r]) g = std::gcd(g, v);
      if (g > 1) for (auto& v : rows[r]) v /= g;
    }
    ++rank;
  }
  return rank;
}

void validate(const ProjectedConfig& s) {
  const std::size_t k = s.ambient_dim;
  if (k < 1 || k > 3) throw InvalidArgument("projected configurations must live in Z^1..Z^3");
  if (s.points.size() < 2) throw InvalidArgument("configuration needs at least two points");
  if (s.origin >= s.points.size()) throw InvalidArgument("origin index out of range");
  for (const auto& p : s.points) {
    if (p.size() != k) throw InvalidArgument("point of the wrong dimension in configuration");
  }
  if (affine_rank(s.points, k) != k) {
    throw InvalidArgument("configuration is degenerate: it does not affinely span R^" +
                          std::to_string(k));
  }
}

}  // namespace

std::vector<FacetData> facets(const ProjectedConfig& s) {
  validate(s);
  const std::size_t k = s.ambient_dim;
  std::vector<Point> distinct(s.points.begin(), s.points.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::set<std::pair<Point, std::int64_t>> found;
  std::vector<std::size_t> pick(k);
  // Enumerate k-subsets of the distinct points in lexicographic index order.
  std::vector<bool> mask(distinct.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<const Point*> chosen;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      if (mask[i]) chosen.push_back(&distinct[i]);
    }
    Point n = normal_through(chosen, k);
    if (n.empty()) continue;
    const std::int64_t c = dot(n, *chosen[0]);
    bool below = true, above = true;
    for (const auto& p : distinct) {
      const std::int64_t v = dot(n, p);
      below = below && v <= c;
      above = above && v >= c;
    }
    if (below) found.emplace(n, c);
    if (above) {
      for (auto& x : n) x = -x;
      found.emplace(n, -c);
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));

  std::vector<FacetData> out;
  for (const auto& [n, c] : found) {
    FacetData f{n, c, {}};
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (dot(n, s.points[i]) == c) f.incident.push_back(i);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::int64_t facet_width(const ProjectedConfig& s, const FacetData& f) {
  std::int64_t lo = dot(f.normal, s.points.front()), hi = lo;
  for (const auto& p : s.points) {
    const std::int64_t v = dot(f.normal, p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

std::int64_t max_facet_width(const ProjectedConfig& s) {
  std::int64_t best = 0;
  for (const auto& f : facets(s)) best = std::max(best, facet_width(s, f));
  return best;
}

Rat ell_L(const ProjectedConfig& s) {
  Rat best(0);
  for (const auto& f : facets(s)) {
    const std::int64_t origin_gap = f.offset - dot(f.normal, s.points[s.origin]);
    std::optional<Rat> ell_h;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i == s.origin) continue;
      const std::int64_t gap = f.offset - dot(f.normal, s.points[i]);
      if (gap == 0) continue;
      Rat ratio(origin_gap, gap);
      if (!ell_h || ratio < *ell_h) ell_h = ratio;
    }
    if (!ell_h) {
      throw InvalidArgument("a facet contains every non-origin point; the bound is undefined");
    }
    best = std::max(best, *ell_h);
  }
  return best;
}

}  // namespace blowup
