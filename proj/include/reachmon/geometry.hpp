#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>
#include <vector>

namespace reachmon {

/// Single numeric tolerance used by every geometry decision procedure.
/// Feasibility of the intersection LP is decided within this slack on the
/// equality constraints: above double-precision noise, below model scales.
inline constexpr double kFeasibilityEps = 1e-7;

/// Affine image of a unit box: { center + generators * xi : xi in [-1,1]^m }.
/// Zero generator columns (m == 0) denote a single point. Values are
/// immutable after construction; every operation below is a pure function.
struct Zonotope {
  Eigen::VectorXd center;
  Eigen::MatrixXd generators;  // n x m, one generator per column

  Zonotope(Eigen::VectorXd c, Eigen::MatrixXd gens);

  static Zonotope point(Eigen::VectorXd c);

  int dim() const { return static_cast<int>(center.size()); }
  int num_generators() const { return static_cast<int>(generators.cols()); }
};

/// Axis-aligned box given by per-dimension bounds, lower[i] <= upper[i].
struct IntervalBox {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  IntervalBox(Eigen::VectorXd lo, Eigen::VectorXd hi);

  int dim() const { return static_cast<int>(lower.size()); }
};

/// Closed halfspace `normal . x >= offset`; the unsafe side of a threshold.
struct Halfspace {
  Eigen::VectorXd normal;
  double offset;

  Halfspace(Eigen::VectorXd n, double off);

  int dim() const { return static_cast<int>(normal.size()); }
};

using UnsafeDisjunct = std::variant<Halfspace, Zonotope>;

/// Disjunction of unsafe regions; a state is unsafe when it lies in any of
/// them. Nonempty by construction.
struct UnsafeSpec {
  std::vector<UnsafeDisjunct> disjuncts;

  explicit UnsafeSpec(std::vector<UnsafeDisjunct> ds);

  int dim() const;
};

/// Exact zonotope encoding of a box: midpoint center, one axis-aligned
/// generator per dimension of nonzero width.
Zonotope from_interval(const IntervalBox& box);

/// Exact image { m * x + b : x in z }.
Zonotope affine_map(const Zonotope& z, const Eigen::MatrixXd& m,
                    const Eigen::VectorXd& b);

/// Exact Minkowski sum: centers add, generator columns concatenate.
Zonotope minkowski_sum(const Zonotope& a, const Zonotope& b);

/// Tightest axis-aligned box containing z.
IntervalBox interval_hull(const Zonotope& z);

/// Support function h(z, d) = d.c + sum_j |d.g_j| (max of d.x over z).
double support(const Zonotope& z, const Eigen::VectorXd& direction);

/// Exact emptiness decision for the intersection of two zonotopes, via
/// linear feasibility of  a.c + A xi_a = b.c + B xi_b,  xi in [-1,1].
/// Throws NumericError if the feasibility procedure breaks down; never
/// degrades a numerical failure into "false".
bool intersects(const Zonotope& a, const Zonotope& b);

/// Does z touch a single unsafe disjunct? Halfspaces are decided exactly by
/// the support function (closed: touching counts), zonotopes via intersects.
bool intersects_disjunct(const Zonotope& z, const UnsafeDisjunct& d);

/// True iff z intersects any disjunct of u.
bool intersects_unsafe(const Zonotope& z, const UnsafeSpec& u);

/// Sound order reduction: keeps the (max_generators - n) largest-norm
/// generator columns and boxes the remainder into axis-aligned generators.
/// The result contains z and has at most max_generators generators.
Zonotope order_reduce(const Zonotope& z, int max_generators);

}  // namespace reachmon
