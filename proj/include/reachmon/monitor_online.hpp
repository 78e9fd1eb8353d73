#pragma once

#include <Eigen/Dense>
#include <vector>

#include "reachmon/monitor_offline.hpp"

namespace reachmon {

/// Ground-truth trace: one state vector at every timestep 0..T.
struct Behavior {
  std::vector<Eigen::VectorXd> states;

  int dim() const {
    return states.empty() ? 0 : static_cast<int>(states.front().size());
  }
  Timestep last_time() const {
    return static_cast<Timestep>(states.size()) - 1;
  }
};

void validate_behavior(const Behavior& beh);

struct OnlineConfig {
  Eigen::VectorXd noise;  // per-dimension sensor half-width, >= 0
  int max_skip;           // hard cap on steps between samples, >= 1
  int max_generators;
};

struct OnlineResult {
  Verdict verdict;
  Log synthesized;  // exactly the triggered readings, interval kind
};

/// When must the next sample be taken? Computes the flowpipe from the
/// current sample over min(max_skip, remaining) steps; with no possible
/// violation in sight the full horizon is skipped, otherwise sampling
/// happens one step before the first possible violation (never earlier
/// than the next step). Result is always in (t_k, t_k + horizon].
Timestep next_trigger(const UncertainLinearSystem& sys,
                      const Zonotope& current_sample, Timestep t_k,
                      const UnsafeSpec& u, const OnlineConfig& cfg,
                      Timestep remaining);

/// Online monitoring: reads the behavior only at triggered times, wraps
/// each reading in the sensor-noise box, and records a witness whenever a
/// taken sample itself touches the unsafe region.
OnlineResult monitor_online(const UncertainLinearSystem& sys,
                            const Behavior& beh, const UnsafeSpec& u,
                            const OnlineConfig& cfg);

}  // namespace reachmon
