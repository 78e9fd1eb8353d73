#include "reachmon/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "reachmon/errors.hpp"

namespace reachmon {

UncertainLinearSystem::UncertainLinearSystem(
    Eigen::MatrixXd nominal, std::vector<UncertaintyEntry> uncertainty)
    : nominal_(std::move(nominal)), uncertainty_(std::move(uncertainty)) {
  if (nominal_.rows() < 1 || nominal_.rows() != nominal_.cols()) {
    throw DimensionError("system matrix must be square and nonempty");
  }
  if (!nominal_.allFinite()) {
    throw NumericError("system matrix contains a non-finite entry");
  }
  const int n = dim();
  std::sort(uncertainty_.begin(), uncertainty_.end(),
            [](const UncertaintyEntry& a, const UncertaintyEntry& b) {
              return std::pair(a.row, a.col) < std::pair(b.row, b.col);
            });
  for (std::size_t k = 0; k < uncertainty_.size(); ++k) {
    const auto& e = uncertainty_[k];
    if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n) {
      throw DimensionError("uncertainty index out of range");
    }
    if (!std::isfinite(e.lo) || !std::isfinite(e.hi)) {
      throw NumericError("uncertainty interval has a non-finite bound");
    }
    if (e.lo > e.hi) {
      throw FormatError(0, "uncertainty interval has lo > hi at cell (" +
                               std::to_string(e.row) + "," +
                               std::to_string(e.col) + ")");
    }
    if (k > 0 && uncertainty_[k - 1].row == e.row &&
        uncertainty_[k - 1].col == e.col) {
      throw FormatError(0, "duplicate uncertainty entry at cell (" +
                               std::to_string(e.row) + "," +
                               std::to_string(e.col) + ")");
    }
  }
}

Zonotope step_nominal(const UncertainLinearSystem& sys, const Zonotope& z) {
  if (z.dim() != sys.dim()) {
    throw DimensionError("step_nominal: dimensions disagree");
  }
  return affine_map(z, sys.nominal(), Eigen::VectorXd::Zero(sys.dim()));
}

Zonotope uncertainty_bloat(const UncertainLinearSystem& sys,
                           const Zonotope& z) {
  if (z.dim() != sys.dim()) {
    throw DimensionError("uncertainty_bloat: dimensions disagree");
  }
  const int n = sys.dim();
  const IntervalBox hull = interval_hull(z);
  Eigen::VectorXd lo = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd hi = Eigen::VectorXd::Zero(n);
  for (const auto& e : sys.uncertainty()) {
    // Interval product [e.lo, e.hi] * [hull.lower(col), hull.upper(col)].
    const double p1 = e.lo * hull.lower(e.col);
    const double p2 = e.lo * hull.upper(e.col);
    const double p3 = e.hi * hull.lower(e.col);
    const double p4 = e.hi * hull.upper(e.col);
    lo(e.row) += std::min(std::min(p1, p2), std::min(p3, p4));
    hi(e.row) += std::max(std::max(p1, p2), std::max(p3, p4));
  }
  return from_interval(IntervalBox(lo, hi));
}

Zonotope step(const UncertainLinearSystem& sys, const Zonotope& z,
              int max_generators) {
  return order_reduce(
      minkowski_sum(step_nominal(sys, z), uncertainty_bloat(sys, z)),
      max_generators);
}

}  // namespace reachmon
