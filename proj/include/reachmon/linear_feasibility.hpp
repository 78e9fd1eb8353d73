#pragma once

#include <Eigen/Dense>
#include <vector>

namespace reachmon {

/// Outcome of the dense simplex solver.
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status;
  double objective;        // valid when status == kOptimal
  std::vector<double> x;   // primal point, valid when status == kOptimal
};

/// Dense two-phase simplex: maximize c.x subject to A x <= b, x >= 0.
/// `eps` is the feasibility/pivot tolerance. Throws NumericError when the
/// pivot budget is exhausted (cycling or severe ill-conditioning) instead of
/// guessing an answer.
LpResult solve_lp(const std::vector<std::vector<double>>& a,
                  const std::vector<double>& b, const std::vector<double>& c,
                  double eps);

/// Decides whether there is xi in [-1,1]^m with  M xi = d, within `eps` of
/// equality. This is the feasibility kernel behind zonotope intersection.
bool box_equality_feasible(const Eigen::MatrixXd& m, const Eigen::VectorXd& d,
                           double eps);

}  // namespace reachmon
