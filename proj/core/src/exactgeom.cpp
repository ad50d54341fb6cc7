#include "blowup/exactgeom.hpp"

#include <limits>

namespace blowup {

std::string_view to_string(Membership m) noexcept {
  switch (m) {
    case Membership::Outside: return "Outside";
    case Membership::Interior: return "Interior";
    case Membership::BoundaryNonVertex: return "BoundaryNonVertex";
    case Membership::Vertex: return "Vertex";
  }
  return "?";
}

ShrunkSimplex::ShrunkSimplex(GeneratingPoint p, Rat eps) : p_(std::move(p)), eps_(eps) {
  if (eps_ <= Rat(0) || eps_ > Rat(1)) {
    throw InvalidArgument("epsilon must lie in (0,1], got " + eps_.to_string());
  }
  const Rat shrink = Rat(1) - eps_;
  lower_.reserve(p_.dim());
  for (const auto& c : p_.coords()) lower_.push_back(shrink * c);
}

std::vector<Rat> ShrunkSimplex::vertex(std::size_t i) const {
  if (i > dim()) throw InvalidArgument("vertex index out of range");
  std::vector<Rat> v = lower_;
  if (i > 0) v[i - 1] += eps_;
  return v;
}

LatticeWitness make_witness(const GeneratingPoint& p, std::int64_t k,
                            std::span<const std::int64_t> z, Membership m) {
  LatticeWitness w;
  w.k = k;
  w.z.assign(z.begin(), z.end());
  w.membership = m;
  w.point.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    w.point.push_back((Rat(k) * p.coords()[i]).frac() + Rat(z[i]));
  }
  return w;
}

std::vector<Rat> frac_point(const WeightVector& n, std::int64_t k) {
  const std::int64_t V = n.index();
  if (k < 1 || k > V - 1) {
    throw InvalidArgument("coset index k=" + std::to_string(k) + " outside [1, " +
                          std::to_string(V - 1) + "]");
  }
  std::vector<Rat> out;
  out.reserve(n.dim());
  for (auto w : n.weights()) {
    __int128 r = static_cast<__int128>(k) * w % V;
    out.emplace_back(static_cast<std::int64_t>(r), V);
  }
  return out;
}

Membership classify_point(std::span<const Rat> x, const ShrunkSimplex& s) {
  const std::size_t d = s.dim();
  if (x.size() != d) {
    throw InvalidArgument("point has dimension " + std::to_string(x.size()) +
                          ", simplex has dimension " + std::to_string(d));
  }
  // Barycentric coordinates of (x - apex) / eps in the standard simplex:
  // lambda_i = y_i for i >= 1 and lambda_0 = 1 - sum(y).
  std::vector<Rat> lambda(d + 1);
  Rat sum(0);
  for (std::size_t i = 0; i < d; ++i) {
    lambda[i + 1] = (x[i] - s.lower(i)) / s.eps();
    sum += lambda[i + 1];
  }
  lambda[0] = Rat(1) - sum;

  std::size_t positive = 0, zeros = 0, ones = 0;
  for (const auto& l : lambda) {
    if (l < Rat(0)) return Membership::Outside;
    positive += l > Rat(0);
    zeros += l == Rat(0);
    ones += l == Rat(1);
  }
  if (positive == d + 1) return Membership::Interior;
  if (ones == 1 && zeros == d) return Membership::Vertex;
  return Membership::BoundaryNonVertex;
}

CosetScanner::CosetScanner(const ShrunkSimplex& s)
    : index_(s.point().index()), eps_num_(s.eps().num()), eps_den_(s.eps().den()) {
  const auto& n = s.point().weights();
  // Every scaled quantity is bounded by d * b * (sum(n) + V) in magnitude.
  __int128 bound = static_cast<__int128>(n.dim()) * eps_den_ * (2 * static_cast<__int128>(index_) + 1);
  if (bound > std::numeric_limits<std::int64_t>::max() / 4) {
    throw OverflowError("coset scan for " + n.to_string() + " at eps=" + s.eps().to_string() +
                        " does not fit 64-bit arithmetic");
  }
  scale_ = eps_den_ * index_;
  width_ = eps_num_ * index_;
  for (auto w : n.weights()) {
    step_.push_back(w % index_);
    lower_.push_back((eps_den_ - eps_num_) * w);
  }
}

std::int64_t CosetScanner::candidates_on_axis(std::int64_t k, std::size_t axis) const {
  const std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(k) * step_.at(axis) % index_);
  const std::int64_t at = eps_den_ * r;
  const std::int64_t lo = ceil_div(lower_[axis] - at, scale_);
  const std::int64_t hi = floor_div(lower_[axis] + width_ - at, scale_);
  return hi >= lo ? hi - lo + 1 : 0;
}

std::vector<LatticeWitness> lattice_points_in_shrunk_simplex(const ShrunkSimplex& s,
                                                             Closure mode) {
  std::vector<LatticeWitness> out;
  const auto& p = s.point();
  CosetScanner(s).for_each([&](std::int64_t k, std::span<const std::int64_t> z, Membership m) {
    if (mode == Closure::Open && m != Membership::Interior) return true;
    out.push_back(make_witness(p, k, z, m));
    return true;
  });
  return out;
}

std::vector<OraclePoint> brute_force_lattice_points(const WeightVector& n, const Rat& eps,
                                                    std::int64_t max_index) {
  const std::int64_t V = n.index();
  if (V > max_index) {
    throw BudgetExceeded("brute-force oracle capped at V=" + std::to_string(max_index) +
                             ", got V=" + std::to_string(V),
                         static_cast<std::uint64_t>(V));
  }
  if (eps <= Rat(0) || eps > Rat(1)) {
    throw InvalidArgument("epsilon must lie in (0,1], got " + eps.to_string());
  }
  const std::size_t d = n.dim();

  // eps * Delta_n sits inside the box [0, eps * max(1, n_i)] on every axis.
  std::vector<std::int64_t> hi(d);
  for (std::size_t i = 0; i < d; ++i) hi[i] = (eps * Rat(std::max<std::int64_t>(1, n[i]))).floor();

  // Vertices eps e_i and eps n, where integral.
  std::vector<std::vector<Rat>> vertices;
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<Rat> v(d, Rat(0));
    for (std::size_t j = 0; j < d; ++j) v[j] = i < d ? Rat(i == j ? 1 : 0) * eps : eps * Rat(n[j]);
    vertices.push_back(std::move(v));
  }

  std::vector<OraclePoint> out;
  std::vector<std::int64_t> x(d, 0);
  const Rat lo_sum = eps;
  const Rat hi_sum = eps * Rat(V + 1);
  for (;;) {
    Rat sum(0);
    for (auto xi : x) sum += Rat(xi);
    // Solve x / eps = sum_i lambda_i e_i + mu n with sum(lambda) + mu = 1:
    // mu = (sum(x)/eps - 1) / V and lambda_i = x_i/eps - mu n_i.
    if (sum >= lo_sum && sum <= hi_sum) {
      const Rat mu = (sum / eps - Rat(1)) / Rat(V);
      bool inside = true, interior = mu > Rat(0);
      std::vector<Rat> lambda(d);
      for (std::size_t i = 0; i < d && inside; ++i) {
        lambda[i] = Rat(x[i]) / eps - mu * Rat(n[i]);
        inside = lambda[i] >= Rat(0);
        interior = interior && lambda[i] > Rat(0);
      }
      if (inside) {
        Membership m = Membership::BoundaryNonVertex;
        if (interior) {
          m = Membership::Interior;
        } else {
          for (const auto& v : vertices) {
            bool same = true;
            for (std::size_t j = 0; j < d && same; ++j) same = v[j] == Rat(x[j]);
            if (same) m = Membership::Vertex;
          }
        }
        out.push_back({x, m});
      }
    }
    std::size_t axis = d;
    while (axis > 0 && x[axis - 1] == hi[axis - 1]) {
      x[axis - 1] = 0;
      --axis;
    }
    if (axis == 0) break;
    ++x[axis - 1];
  }
  return out;
}

std::vector<Rat> to_coset_frame(const WeightVector& n, std::span<const std::int64_t> x) {
  if (x.size() != n.dim()) throw InvalidArgument("dimension mismatch in to_coset_frame");
  Rat shift(1);
  for (auto xi : x) shift -= Rat(xi);
  shift /= Rat(n.index());
  std::vector<Rat> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(Rat(x[i]) + shift * Rat(n[i]));
  return out;
}

}  // namespace blowup
