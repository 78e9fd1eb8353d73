#pragma once

#include <Eigen/Dense>
#include <vector>

#include "reachmon/geometry.hpp"

namespace reachmon {

/// Additive interval perturbation of one cell of the update matrix:
/// A[row][col] ranges over [nominal + lo, nominal + hi].
struct UncertaintyEntry {
  int row;
  int col;
  double lo;
  double hi;
};

/// Discrete-time bounding model x' = (A + dA) x where each dA cell ranges
/// over its declared interval, chosen fresh at every step. Unmapped cells
/// are exact. Immutable after construction.
class UncertainLinearSystem {
 public:
  UncertainLinearSystem(Eigen::MatrixXd nominal,
                        std::vector<UncertaintyEntry> uncertainty);

  int dim() const { return static_cast<int>(nominal_.rows()); }
  const Eigen::MatrixXd& nominal() const { return nominal_; }
  const std::vector<UncertaintyEntry>& uncertainty() const {
    return uncertainty_;
  }

 private:
  Eigen::MatrixXd nominal_;
  std::vector<UncertaintyEntry> uncertainty_;  // sorted by (row, col), unique
};

/// Exact image of z under the nominal matrix.
Zonotope step_nominal(const UncertainLinearSystem& sys, const Zonotope& z);

/// Axis-aligned zonotope B with dA * x in B for every admissible dA and
/// every x in z, from the interval product of the dA intervals with the
/// interval hull of z.
Zonotope uncertainty_bloat(const UncertainLinearSystem& sys, const Zonotope& z);

/// Sound one-step over-approximation: nominal image plus uncertainty bloat,
/// combined by Minkowski sum and order-reduced to max_generators.
Zonotope step(const UncertainLinearSystem& sys, const Zonotope& z,
              int max_generators);

/// Default generator cap for a system of dimension n.
inline int default_max_generators(int n) { return 5 * n; }

}  // namespace reachmon
