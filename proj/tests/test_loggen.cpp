#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "oracles.hpp"
#include "reachmon/errors.hpp"
#include "reachmon/loggen.hpp"
#include "reachmon/monitor_offline.hpp"

using namespace reachmon;
using oracles::vec;

namespace {

UncertainLinearSystem scalar_system(double a, double unc_lo = 0.0,
                                    double unc_hi = 0.0) {
  Eigen::MatrixXd nominal(1, 1);
  nominal << a;
  std::vector<UncertaintyEntry> unc;
  if (unc_lo != 0.0 || unc_hi != 0.0) unc.push_back({0, 0, unc_lo, unc_hi});
  return UncertainLinearSystem(nominal, unc);
}

GenConfig scalar_config(double x0, Timestep length, double p, double noise,
                        std::uint64_t seed) {
  return GenConfig{Zonotope::point(vec({x0})), length, p, vec({noise}), seed};
}

}  // namespace

TEST_CASE("simulate_behavior: deterministic exact trajectory") {
  const auto sys = scalar_system(2.0);
  const Behavior beh = simulate_behavior(sys, scalar_config(1, 3, 0.5, 0, 42));
  REQUIRE(beh.states.size() == 4);
  CHECK(beh.states[0](0) == doctest::Approx(1));
  CHECK(beh.states[1](0) == doctest::Approx(2));
  CHECK(beh.states[2](0) == doctest::Approx(4));
  CHECK(beh.states[3](0) == doctest::Approx(8));
}

TEST_CASE("simulate_behavior: same seed, same behavior") {
  const auto sys = scalar_system(1.0, -0.2, 0.2);
  const GenConfig cfg{from_interval(IntervalBox(vec({0.5}), vec({1.5}))), 25,
                      0.5, vec({0.1}), 777};
  const Behavior a = simulate_behavior(sys, cfg);
  const Behavior b = simulate_behavior(sys, cfg);
  REQUIRE(a.states.size() == b.states.size());
  for (std::size_t t = 0; t < a.states.size(); ++t) {
    CHECK(a.states[t] == b.states[t]);
  }
  GenConfig other = cfg;
  other.seed = 778;
  const Behavior c = simulate_behavior(sys, other);
  bool all_equal = true;
  for (std::size_t t = 0; t < a.states.size(); ++t) {
    all_equal = all_equal && a.states[t] == c.states[t];
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("generate_log: probability extremes") {
  const auto sys = scalar_system(0.95, -0.01, 0.01);
  const Log all = generate_log(sys, scalar_config(1, 20, 1.0, 0.05, 9));
  CHECK(all.samples.size() == 21);

  const Log only_start = generate_log(sys, scalar_config(1, 20, 0.0, 0.05, 9));
  REQUIRE(only_start.samples.size() == 1);
  CHECK(only_start.samples[0].time == 0);
}

TEST_CASE("generate_log: zero noise samples equal the simulated states") {
  const auto sys = scalar_system(1.0, -0.1, 0.1);
  const GenConfig cfg = scalar_config(1, 30, 0.5, 0.0, 1337);
  const auto [log, beh] = generate_log_with_behavior(sys, cfg);
  const Behavior standalone = simulate_behavior(sys, cfg);
  for (const auto& s : log.samples) {
    const double truth = beh.states[static_cast<std::size_t>(s.time)](0);
    CHECK(s.set.center(0) == truth);
    CHECK(s.set.num_generators() == 0);
    CHECK(standalone.states[static_cast<std::size_t>(s.time)](0) == truth);
  }
}

TEST_CASE("generate_log: samples always contain the true state") {
  const auto sys = scalar_system(1.02, -0.05, 0.05);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto [log, beh] =
        generate_log_with_behavior(sys, scalar_config(1, 40, 0.3, 0.07, seed));
    for (const auto& s : log.samples) {
      const double truth = beh.states[static_cast<std::size_t>(s.time)](0);
      REQUIRE(s.box.has_value());
      CHECK(truth >= s.box->lower(0));
      CHECK(truth <= s.box->upper(0));
    }
  }
}

TEST_CASE("generate_log: mean sample count matches 1 + pT") {
  const auto sys = scalar_system(1.0);
  const double p = 0.3;
  const Timestep len = 100;
  double total = 0.0;
  const int runs = 200;
  for (int k = 0; k < runs; ++k) {
    total += static_cast<double>(
        generate_log(sys, scalar_config(1, len, p, 0, 5000 + k))
            .samples.size());
  }
  const double mean = total / runs;
  const double expected = 1.0 + p * static_cast<double>(len);
  const double se =
      std::sqrt(static_cast<double>(len) * p * (1 - p) / runs);
  CHECK(std::abs(mean - expected) <= 3.0 * se);
}

TEST_CASE("generate_log: offline flowpipes cover the generating trajectory") {
  const auto sys = scalar_system(1.0, -0.08, 0.08);
  const UnsafeSpec u({Halfspace(vec({1}), 1e6)});
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto [log, beh] =
        generate_log_with_behavior(sys, scalar_config(1, 25, 0.35, 0.05, seed));
    const Verdict v = monitor_offline(sys, log, u, 5, false);
    for (const auto& seg : v.segments) {
      for (Timestep t = seg.start_time; t <= seg.end_time(); ++t) {
        const IntervalBox h = interval_hull(seg.at(t));
        const double x = beh.states[static_cast<std::size_t>(t)](0);
        CHECK(x >= h.lower(0) - 1e-9);
        CHECK(x <= h.upper(0) + 1e-9);
      }
    }
  }
}

TEST_CASE("generate_log: config validation") {
  const auto sys = scalar_system(1.0);
  CHECK_THROWS_AS(generate_log(sys, scalar_config(1, 0, 0.5, 0, 1)),
                  DimensionError);
  CHECK_THROWS_AS(generate_log(sys, scalar_config(1, 10, 1.5, 0, 1)),
                  DimensionError);
  CHECK_THROWS_AS(generate_log(sys, scalar_config(1, 10, 0.5, -0.1, 1)),
                  DimensionError);
}
