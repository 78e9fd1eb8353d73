#pragma once

#include <cstdint>
#include <utility>

#include "reachmon/monitor_online.hpp"

namespace reachmon {

/// Recipe for a random ground-truth behavior and its noisy, aperiodic log.
struct GenConfig {
  Zonotope init;           // initial set; x0 drawn uniformly from it
  Timestep length;         // number of steps T (behavior covers 0..T)
  double log_probability;  // per-step chance of a sample after t=0
  Eigen::VectorXd noise;   // per-dimension half-width on recorded samples
  std::uint64_t seed;
};

/// Simulates one admissible trajectory of the bounding model: x0 uniform in
/// init, each dA entry redrawn uniformly per step. Draw order is fixed
/// (xi components first, then per step the uncertainty entries in their
/// stored order), so a seed pins the behavior exactly.
Behavior simulate_behavior(const UncertainLinearSystem& sys,
                           const GenConfig& cfg);

/// Simulates a behavior and selects sample times: t=0 always, each later
/// step independently with probability log_probability. Samples are the
/// true state boxed by the noise half-widths. The returned log always
/// contains the matching true state at every sample time.
std::pair<Log, Behavior> generate_log_with_behavior(
    const UncertainLinearSystem& sys, const GenConfig& cfg);

Log generate_log(const UncertainLinearSystem& sys, const GenConfig& cfg);

}  // namespace reachmon
