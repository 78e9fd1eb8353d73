#include "reachmon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "reachmon/errors.hpp"
#include "reachmon/linear_feasibility.hpp"

namespace reachmon {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) {
    throw NumericError(std::string(what) + " contains a non-finite entry");
  }
}

}  // namespace

Zonotope::Zonotope(Eigen::VectorXd c, Eigen::MatrixXd gens)
    : center(std::move(c)), generators(std::move(gens)) {
  if (center.size() < 1) {
    throw DimensionError("zonotope dimension must be >= 1");
  }
  if (generators.size() == 0 && generators.rows() != center.size()) {
    generators.resize(center.size(), 0);
  }
  if (generators.rows() != center.size()) {
    throw DimensionError("zonotope generator rows must match center size");
  }
  require_finite(center, "zonotope center");
  require_finite(generators, "zonotope generators");
}

Zonotope Zonotope::point(Eigen::VectorXd c) {
  const auto n = c.size();
  return Zonotope(std::move(c), Eigen::MatrixXd(n, 0));
}

IntervalBox::IntervalBox(Eigen::VectorXd lo, Eigen::VectorXd hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) {
    throw DimensionError("interval box bound sizes disagree");
  }
  require_finite(lower, "interval box lower bound");
  require_finite(upper, "interval box upper bound");
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (lower(i) > upper(i)) {
      throw FormatError(0, "interval box has lower > upper in dimension " +
                               std::to_string(i));
    }
  }
}

Halfspace::Halfspace(Eigen::VectorXd n, double off)
    : normal(std::move(n)), offset(off) {
  if (normal.size() < 1) {
    throw DimensionError("halfspace dimension must be >= 1");
  }
  require_finite(normal, "halfspace normal");
  if (!std::isfinite(offset)) {
    throw NumericError("halfspace offset is non-finite");
  }
  if (normal.isZero(0.0)) {
    throw FormatError(0, "halfspace normal vector is zero");
  }
}

UnsafeSpec::UnsafeSpec(std::vector<UnsafeDisjunct> ds)
    : disjuncts(std::move(ds)) {
  if (disjuncts.empty()) {
    throw FormatError(0, "unsafe specification needs at least one disjunct");
  }
  const int n = dim();
  for (const auto& d : disjuncts) {
    const int dn = std::holds_alternative<Halfspace>(d)
                       ? std::get<Halfspace>(d).dim()
                       : std::get<Zonotope>(d).dim();
    if (dn != n) {
      throw DimensionError("unsafe disjuncts have mixed dimensions");
    }
  }
}

int UnsafeSpec::dim() const {
  const auto& d = disjuncts.front();
  return std::holds_alternative<Halfspace>(d) ? std::get<Halfspace>(d).dim()
                                              : std::get<Zonotope>(d).dim();
}

Zonotope from_interval(const IntervalBox& box) {
  const int n = box.dim();
  if (n < 1) {
    throw FormatError(0, "interval box dimension must be >= 1");
  }
  const Eigen::VectorXd center = (box.lower + box.upper) / 2.0;
  const Eigen::VectorXd half = (box.upper - box.lower) / 2.0;
  int width_count = 0;
  for (int i = 0; i < n; ++i) {
    if (half(i) != 0.0) ++width_count;
  }
  Eigen::MatrixXd gens = Eigen::MatrixXd::Zero(n, width_count);
  int col = 0;
  for (int i = 0; i < n; ++i) {
    if (half(i) != 0.0) gens(i, col++) = half(i);
  }
  return Zonotope(center, gens);
}

Zonotope affine_map(const Zonotope& z, const Eigen::MatrixXd& m,
                    const Eigen::VectorXd& b) {
  if (m.cols() != z.dim()) {
    throw DimensionError("affine_map: matrix columns must match zonotope dim");
  }
  if (b.size() != m.rows()) {
    throw DimensionError("affine_map: vector size must match matrix rows");
  }
  return Zonotope(m * z.center + b, m * z.generators);
}

Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("minkowski_sum: dimensions disagree");
  }
  Eigen::MatrixXd gens(a.dim(), a.num_generators() + b.num_generators());
  gens << a.generators, b.generators;
  return Zonotope(a.center + b.center, gens);
}

IntervalBox interval_hull(const Zonotope& z) {
  const Eigen::VectorXd radius = z.generators.cwiseAbs().rowwise().sum();
  return IntervalBox(z.center - radius, z.center + radius);
}

double support(const Zonotope& z, const Eigen::VectorXd& direction) {
  if (direction.size() != z.dim()) {
    throw DimensionError("support: direction size must match zonotope dim");
  }
  return direction.dot(z.center) +
         (z.generators.transpose() * direction).cwiseAbs().sum();
}

bool intersects(const Zonotope& a, const Zonotope& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("intersects: dimensions disagree");
  }
  // Disjoint interval hulls settle the answer without an LP.
  const IntervalBox ha = interval_hull(a);
  const IntervalBox hb = interval_hull(b);
  for (int i = 0; i < a.dim(); ++i) {
    if (ha.lower(i) > hb.upper(i) + kFeasibilityEps ||
        hb.lower(i) > ha.upper(i) + kFeasibilityEps) {
      return false;
    }
  }
  // a.c + A xi_a = b.c + B xi_b  <=>  [A, -B] xi = b.c - a.c.
  Eigen::MatrixXd m(a.dim(), a.num_generators() + b.num_generators());
  m << a.generators, -b.generators;
  return box_equality_feasible(m, b.center - a.center, kFeasibilityEps);
}

bool intersects_disjunct(const Zonotope& z, const UnsafeDisjunct& d) {
  if (const auto* hs = std::get_if<Halfspace>(&d)) {
    if (hs->dim() != z.dim()) {
      throw DimensionError("intersects_disjunct: dimensions disagree");
    }
    return support(z, hs->normal) >= hs->offset;
  }
  return intersects(z, std::get<Zonotope>(d));
}

bool intersects_unsafe(const Zonotope& z, const UnsafeSpec& u) {
  for (const auto& d : u.disjuncts) {
    if (intersects_disjunct(z, d)) return true;
  }
  return false;
}

Zonotope order_reduce(const Zonotope& z, int max_generators) {
  const int n = z.dim();
  const int m = z.num_generators();
  if (max_generators < n) {
    throw DimensionError("order_reduce: max_generators must be >= dimension");
  }
  if (m <= max_generators) return z;

  const int keep = max_generators - n;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> norm(m);
  for (int j = 0; j < m; ++j) norm[j] = z.generators.col(j).norm();
  std::stable_sort(order.begin(), order.end(),
                   [&](int l, int r) { return norm[l] > norm[r]; });

  std::vector<bool> kept(m, false);
  for (int k = 0; k < keep; ++k) kept[order[k]] = true;

  // Discarded columns collapse to an axis-aligned box of their row sums.
  Eigen::VectorXd radius = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < m; ++j) {
    if (!kept[j]) radius += z.generators.col(j).cwiseAbs();
  }
  int box_cols = 0;
  for (int i = 0; i < n; ++i) {
    if (radius(i) != 0.0) ++box_cols;
  }

  Eigen::MatrixXd gens(n, keep + box_cols);
  int col = 0;
  for (int j = 0; j < m; ++j) {
    if (kept[j]) gens.col(col++) = z.generators.col(j);
  }
  for (int i = 0; i < n; ++i) {
    if (radius(i) != 0.0) {
      gens.col(col).setZero();
      gens(i, col++) = radius(i);
    }
  }
  return Zonotope(z.center, gens);
}

}  // namespace reachmon
