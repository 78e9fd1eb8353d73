#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reachmon/dynamics.hpp"
#include "reachmon/geometry.hpp"

namespace reachmon {

using Timestep = std::int64_t;

/// Per-timestep reach sets between two anchors: sets[k] holds the reach set
/// at start_time + k, sets[0] being the initial set itself.
struct Flowpipe {
  Timestep start_time;
  std::vector<Zonotope> sets;

  Flowpipe(Timestep start, std::vector<Zonotope> reach_sets);

  Timestep end_time() const {
    return start_time + static_cast<Timestep>(sets.size()) - 1;
  }
  const Zonotope& at(Timestep t) const { return sets[t - start_time]; }
};

/// Iterates the one-step reachability `steps` times from `init`.
Flowpipe compute_flowpipe(const UncertainLinearSystem& sys,
                          const Zonotope& init, Timestep start_time,
                          Timestep steps, int max_generators);

/// Earliest absolute timestep whose reach set touches u; absent when the
/// whole flowpipe stays clear. `min_offset` skips that many leading sets
/// (0 scans everything including the initial set).
std::optional<Timestep> first_unsafe(const Flowpipe& fp, const UnsafeSpec& u,
                                     Timestep min_offset = 0);

/// Every absolute timestep whose reach set touches u, in increasing order.
std::vector<Timestep> unsafe_times(const Flowpipe& fp, const UnsafeSpec& u,
                                   Timestep min_offset = 0);

}  // namespace reachmon
