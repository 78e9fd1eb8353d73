#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "reachmon/errors.hpp"
#include "reachmon/geometry.hpp"
#include "reachmon/linear_feasibility.hpp"
#include "reachmon/random.hpp"

using namespace reachmon;
using oracles::make_zono;
using oracles::vec;

namespace {

Zonotope unit_box_at(double x, double y) {
  return make_zono({x, y}, {{1, 0}, {0, 1}});
}

bool contains_point(const Zonotope& z, const Eigen::VectorXd& p) {
  return intersects(z, Zonotope::point(p));
}

// Matches two unordered point sets up to tolerance.
bool same_point_set(std::vector<Eigen::VectorXd> a,
                    std::vector<Eigen::VectorXd> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& pa : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const Eigen::VectorXd& pb) {
      return (pa - pb).lpNorm<Eigen::Infinity>() <= tol;
    });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("from_interval: symmetric box") {
  const Zonotope z = from_interval(IntervalBox(vec({-1, -1}), vec({1, 1})));
  CHECK(z.center.isApprox(vec({0, 0})));
  CHECK(z.generators.isApprox(Eigen::MatrixXd::Identity(2, 2)));
}

TEST_CASE("from_interval: degenerate box is a point") {
  const Zonotope z = from_interval(IntervalBox(vec({3}), vec({3})));
  CHECK(z.center(0) == 3.0);
  CHECK(z.num_generators() == 0);
}

TEST_CASE("from_interval: asymmetric box, corner enumeration agrees") {
  const Zonotope z = from_interval(IntervalBox(vec({0, -4}), vec({2, 0})));
  CHECK(z.center.isApprox(vec({1, -2})));
  const std::vector<Eigen::VectorXd> expected = {
      vec({0, -4}), vec({0, 0}), vec({2, -4}), vec({2, 0})};
  CHECK(same_point_set(oracles::corner_points(z), expected, 1e-12));
}

TEST_CASE("from_interval: invalid boxes") {
  CHECK_THROWS_AS(IntervalBox(vec({1}), vec({0})), FormatError);
  CHECK_THROWS_AS(from_interval(IntervalBox(Eigen::VectorXd(0),
                                            Eigen::VectorXd(0))),
                  Error);
}

TEST_CASE("affine_map: identity and scaling") {
  const Zonotope z = unit_box_at(0.5, -0.25);
  const Zonotope same =
      affine_map(z, Eigen::MatrixXd::Identity(2, 2), vec({0, 0}));
  CHECK(same.center.isApprox(z.center));
  CHECK(same.generators.isApprox(z.generators));

  const Zonotope scaled = affine_map(
      unit_box_at(0, 0), 2.0 * Eigen::MatrixXd::Identity(2, 2), vec({0, 0}));
  CHECK(scaled.center.isZero(0.0));
  CHECK(scaled.generators.isApprox(2.0 * Eigen::MatrixXd::Identity(2, 2)));
}

TEST_CASE("affine_map: rotation maps extreme points onto extreme points") {
  const Zonotope z = make_zono({1, 0}, {{1, 0}, {0, 2}});
  Eigen::MatrixXd rot(2, 2);
  rot << 0, 1, -1, 0;
  const Zonotope out = affine_map(z, rot, vec({0, 0}));
  CHECK(out.center.isApprox(vec({0, -1})));
  CHECK(out.generators.col(0).isApprox(vec({0, -1})));
  CHECK(out.generators.col(1).isApprox(vec({2, 0})));

  std::vector<Eigen::VectorXd> mapped;
  for (const auto& p : oracles::corner_points(z)) mapped.push_back(rot * p);
  CHECK(same_point_set(mapped, oracles::corner_points(out), 1e-12));
}

TEST_CASE("affine_map: dimension mismatch") {
  CHECK_THROWS_AS(affine_map(unit_box_at(0, 0), Eigen::MatrixXd::Identity(3, 3),
                             vec({0, 0, 0})),
                  DimensionError);
}

TEST_CASE("minkowski_sum: point summand translates") {
  const Zonotope a = unit_box_at(0, 0);
  const Zonotope sum = minkowski_sum(a, Zonotope::point(vec({3, -1})));
  CHECK(sum.center.isApprox(vec({3, -1})));
  CHECK(sum.generators.isApprox(a.generators));
}

TEST_CASE("minkowski_sum: doubling a unit box") {
  const Zonotope sum = minkowski_sum(unit_box_at(0, 0), unit_box_at(0, 0));
  const IntervalBox hull = interval_hull(sum);
  CHECK(hull.lower.isApprox(vec({-2, -2})));
  CHECK(hull.upper.isApprox(vec({2, 2})));
}

TEST_CASE("minkowski_sum and affine_map: support-function exactness") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const Zonotope a = oracles::random_zonotope(rng, 2, 3, 2.0, 1.5);
    const Zonotope b = oracles::random_zonotope(rng, 2, 4, 2.0, 1.5);
    const Zonotope sum = minkowski_sum(a, b);

    Eigen::MatrixXd m(2, 2);
    m << rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
        rng.uniform(-2, 2);
    const Eigen::VectorXd offset = vec({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    const Zonotope mapped = affine_map(a, m, offset);

    for (int k = 0; k < 32; ++k) {
      const Eigen::VectorXd d = oracles::random_direction(rng, 2);
      CHECK(std::abs(support(sum, d) - (support(a, d) + support(b, d))) <=
            1e-9);
      CHECK(std::abs(support(mapped, d) -
                     (d.dot(offset) + support(a, m.transpose() * d))) <= 1e-9);
    }
  }
}

TEST_CASE("interval_hull: point, skewed pair, unit square") {
  const IntervalBox p = interval_hull(Zonotope::point(vec({2, 5})));
  CHECK(p.lower.isApprox(vec({2, 5})));
  CHECK(p.upper.isApprox(vec({2, 5})));

  const Zonotope skew = make_zono({0, 0}, {{1, 0}, {1, 1}});
  const IntervalBox h = interval_hull(skew);
  CHECK(h.lower.isApprox(vec({-2, -1})));
  CHECK(h.upper.isApprox(vec({2, 1})));
  // sign-assignment enumeration gives the same extremes
  double max_x = -1e300, max_y = -1e300, min_x = 1e300, min_y = 1e300;
  for (const auto& c : oracles::corner_points(skew)) {
    max_x = std::max(max_x, c(0));
    min_x = std::min(min_x, c(0));
    max_y = std::max(max_y, c(1));
    min_y = std::min(min_y, c(1));
  }
  CHECK(h.lower(0) == doctest::Approx(min_x));
  CHECK(h.upper(0) == doctest::Approx(max_x));
  CHECK(h.lower(1) == doctest::Approx(min_y));
  CHECK(h.upper(1) == doctest::Approx(max_y));

  const IntervalBox square = interval_hull(unit_box_at(0, 0));
  CHECK(square.lower.isApprox(vec({-1, -1})));
  CHECK(square.upper.isApprox(vec({1, 1})));
}

TEST_CASE("interval_hull contains random members") {
  Rng rng(7);
  const Zonotope z = oracles::random_zonotope(rng, 3, 6, 2.0, 1.0);
  const IntervalBox hull = interval_hull(z);
  for (int k = 0; k < 1000; ++k) {
    Eigen::VectorXd xi(z.num_generators());
    for (int j = 0; j < z.num_generators(); ++j) xi(j) = rng.uniform(-1, 1);
    const Eigen::VectorXd p = z.center + z.generators * xi;
    CHECK(((p - hull.lower).array() >= -1e-12).all());
    CHECK(((hull.upper - p).array() >= -1e-12).all());
  }
}

TEST_CASE("intersects: coordinate separation cases") {
  const Zonotope origin = unit_box_at(0, 0);
  CHECK(intersects(origin, origin));
  CHECK_FALSE(intersects(origin, unit_box_at(3, 0)));
  CHECK(intersects(origin, unit_box_at(1.5, 0)));
  CHECK_THROWS_AS(
      intersects(origin, Zonotope::point(vec({0, 0, 0}))),
      DimensionError);
}

TEST_CASE("intersects: agrees with grid oracle and is symmetric") {
  Rng rng(91);
  int true_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int ma = 2 + static_cast<int>(rng.next_u64() % 2);
    const int mb = 2 + static_cast<int>(rng.next_u64() % 2);
    const Zonotope a = oracles::random_zonotope(rng, 2, ma, 2.5, 1.0);
    const Zonotope b = oracles::random_zonotope(rng, 2, mb, 2.5, 1.0);
    const bool lp = intersects(a, b);
    CHECK(lp == intersects(b, a));
    CHECK(lp == oracles::grid_intersects_2d(a, b, 41));
    if (lp) ++true_count;
  }
  // the sample mixes both outcomes
  CHECK(true_count > 5);
  CHECK(true_count < 55);
}

TEST_CASE("intersects: points and degenerate operands") {
  CHECK(intersects(Zonotope::point(vec({1, 2})), Zonotope::point(vec({1, 2}))));
  CHECK_FALSE(
      intersects(Zonotope::point(vec({1, 2})), Zonotope::point(vec({1, 3}))));
  CHECK(intersects(Zonotope::point(vec({0.5, 0.5})), unit_box_at(0, 0)));
  CHECK_FALSE(intersects(Zonotope::point(vec({2.5, 0})), unit_box_at(0, 0)));
}

TEST_CASE("intersects_unsafe: closed halfspace thresholds") {
  const UnsafeSpec far_spec({Halfspace(vec({1, 0}), 4.0)});
  CHECK_FALSE(intersects_unsafe(unit_box_at(0, 0), far_spec));
  CHECK(intersects_unsafe(unit_box_at(4, 0), far_spec));

  const UnsafeSpec touch_spec({Halfspace(vec({1, 0}), 1.0)});
  CHECK(intersects_unsafe(unit_box_at(0, 0), touch_spec));

  const UnsafeSpec zono_spec({UnsafeDisjunct(unit_box_at(3, 0))});
  CHECK_FALSE(intersects_unsafe(unit_box_at(0, 0), zono_spec));
  CHECK(intersects_unsafe(unit_box_at(1.5, 0), zono_spec));
}

TEST_CASE("order_reduce: no-op, full boxing, containment") {
  const Zonotope z = make_zono({0, 0}, {{1, 0}, {0, 1}, {0.5, 0.5}});
  const Zonotope untouched = order_reduce(z, 4);
  CHECK(untouched.num_generators() == 3);
  CHECK(untouched.generators.isApprox(z.generators));

  const Zonotope boxed = order_reduce(z, 2);
  const Zonotope hull_zono = from_interval(interval_hull(z));
  CHECK(boxed.center.isApprox(hull_zono.center));
  CHECK(boxed.generators.isApprox(hull_zono.generators));

  CHECK_THROWS_AS(order_reduce(z, 1), DimensionError);
}

TEST_CASE("order_reduce: reduced zonotope contains the original") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Zonotope z = oracles::random_zonotope(rng, 2, 6, 1.0, 0.8);
    const Zonotope red = order_reduce(z, 4);
    CHECK(red.num_generators() <= 4);
    const IntervalBox hz = interval_hull(z);
    const IntervalBox hr = interval_hull(red);
    CHECK(((hz.lower - hr.lower).array() >= -1e-12).all());
    CHECK(((hr.upper - hz.upper).array() >= -1e-12).all());
    for (int k = 0; k < 1000; ++k) {
      Eigen::VectorXd xi(z.num_generators());
      for (int j = 0; j < z.num_generators(); ++j) xi(j) = rng.uniform(-1, 1);
      CHECK(contains_point(red, z.center + z.generators * xi));
    }
  }
}

TEST_CASE("zonotope invariants rejected") {
  Eigen::VectorXd bad(2);
  bad << 1.0, std::nan("");
  CHECK_THROWS_AS(Zonotope::point(bad), NumericError);
  CHECK_THROWS_AS(Zonotope(vec({1}), Eigen::MatrixXd::Zero(2, 1)),
                  DimensionError);
  CHECK_THROWS_AS(Halfspace(vec({0, 0}), 1.0), FormatError);
  CHECK_THROWS_AS(UnsafeSpec({}), FormatError);
}

TEST_CASE("box_equality_feasible: zero-variable edge cases") {
  CHECK(box_equality_feasible(Eigen::MatrixXd(2, 0), vec({0, 0}),
                              kFeasibilityEps));
  CHECK_FALSE(box_equality_feasible(Eigen::MatrixXd(2, 0), vec({0, 1e-3}),
                                    kFeasibilityEps));
}
