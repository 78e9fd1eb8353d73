#include "reachmon/flowpipe.hpp"

#include "reachmon/errors.hpp"

namespace reachmon {

Flowpipe::Flowpipe(Timestep start, std::vector<Zonotope> reach_sets)
    : start_time(start), sets(std::move(reach_sets)) {
  if (start_time < 0) {
    throw DimensionError("flowpipe start time must be nonnegative");
  }
  if (sets.empty()) {
    throw DimensionError("flowpipe must hold at least the initial set");
  }
  const int n = sets.front().dim();
  for (const auto& z : sets) {
    if (z.dim() != n) {
      throw DimensionError("flowpipe sets have mixed dimensions");
    }
  }
}

Flowpipe compute_flowpipe(const UncertainLinearSystem& sys,
                          const Zonotope& init, Timestep start_time,
                          Timestep steps, int max_generators) {
  if (steps < 0) {
    throw DimensionError("flowpipe step count must be nonnegative");
  }
  std::vector<Zonotope> sets;
  sets.reserve(static_cast<std::size_t>(steps) + 1);
  sets.push_back(init);
  for (Timestep k = 0; k < steps; ++k) {
    sets.push_back(step(sys, sets.back(), max_generators));
  }
  return Flowpipe(start_time, std::move(sets));
}

std::optional<Timestep> first_unsafe(const Flowpipe& fp, const UnsafeSpec& u,
                                     Timestep min_offset) {
  for (std::size_t k = static_cast<std::size_t>(min_offset); k < fp.sets.size();
       ++k) {
    if (intersects_unsafe(fp.sets[k], u)) {
      return fp.start_time + static_cast<Timestep>(k);
    }
  }
  return std::nullopt;
}

std::vector<Timestep> unsafe_times(const Flowpipe& fp, const UnsafeSpec& u,
                                   Timestep min_offset) {
  std::vector<Timestep> hits;
  for (std::size_t k = static_cast<std::size_t>(min_offset); k < fp.sets.size();
       ++k) {
    if (intersects_unsafe(fp.sets[k], u)) {
      hits.push_back(fp.start_time + static_cast<Timestep>(k));
    }
  }
  return hits;
}

}  // namespace reachmon
