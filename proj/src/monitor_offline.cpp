#include "reachmon/monitor_offline.hpp"

#include <algorithm>
#include <map>

#include "reachmon/errors.hpp"

namespace reachmon {

void validate_log(const Log& log) {
  if (log.samples.empty()) {
    throw FormatError(0, "log has no samples");
  }
  if (log.samples.front().time < 0) {
    throw FormatError(0, "log sample times must be nonnegative");
  }
  for (std::size_t k = 0; k < log.samples.size(); ++k) {
    const auto& s = log.samples[k];
    if (s.set.dim() != log.dimension) {
      throw DimensionError("log sample dimension mismatch at t=" +
                           std::to_string(s.time));
    }
    if (k > 0 && s.time <= log.samples[k - 1].time) {
      throw FormatError(0, "log sample times must be strictly increasing");
    }
  }
}

std::optional<Zonotope> hull_intersect_overapprox(const Zonotope& z,
                                                  const UnsafeDisjunct& d) {
  if (!intersects_disjunct(z, d)) return std::nullopt;
  IntervalBox hull = interval_hull(z);
  Eigen::VectorXd lo = hull.lower;
  Eigen::VectorXd hi = hull.upper;
  const int n = z.dim();

  if (const auto* hs = std::get_if<Halfspace>(&d)) {
    // Tighten each dimension against normal . x >= offset: the best the
    // other coordinates can contribute bounds what x_i must supply.
    for (int i = 0; i < n; ++i) {
      const double ni = hs->normal(i);
      if (ni == 0.0) continue;
      double rest = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double nj = hs->normal(j);
        rest += nj >= 0.0 ? nj * hi(j) : nj * lo(j);
      }
      const double bound = (hs->offset - rest) / ni;
      if (ni > 0.0) {
        lo(i) = std::max(lo(i), bound);
      } else {
        hi(i) = std::min(hi(i), bound);
      }
    }
  } else {
    const IntervalBox other = interval_hull(std::get<Zonotope>(d));
    lo = lo.cwiseMax(other.lower);
    hi = hi.cwiseMin(other.upper);
  }

  // The exact intersection is nonempty, so clipping cannot empty the box
  // beyond rounding noise; clamp any such sliver.
  for (int i = 0; i < n; ++i) {
    if (lo(i) > hi(i)) {
      const double mid = (lo(i) + hi(i)) / 2.0;
      lo(i) = mid;
      hi(i) = mid;
    }
  }
  return from_interval(IntervalBox(lo, hi));
}

bool refine_segment(const UncertainLinearSystem& sys, const Flowpipe& fp,
                    Timestep hit_time, const UnsafeSpec& u,
                    const Zonotope& next_sample, Timestep next_time,
                    int max_generators) {
  if (hit_time <= fp.start_time || hit_time > fp.end_time() ||
      hit_time > next_time) {
    throw DimensionError("refine_segment: hit time out of range");
  }
  const Zonotope& reach = fp.at(hit_time);
  for (const auto& d : u.disjuncts) {
    const std::optional<Zonotope> overlap = hull_intersect_overapprox(reach, d);
    if (!overlap) continue;  // this disjunct never touched the reach set
    const Flowpipe forward = compute_flowpipe(
        sys, *overlap, hit_time, next_time - hit_time, max_generators);
    if (intersects(forward.sets.back(), next_sample)) {
      return false;  // a trajectory through the overlap stays log-consistent
    }
  }
  return true;
}

Verdict monitor_offline(const UncertainLinearSystem& sys, const Log& log,
                        const UnsafeSpec& u, int max_generators, bool refine) {
  validate_log(log);
  if (log.dimension != sys.dim() || u.dim() != sys.dim()) {
    throw DimensionError("monitor_offline: dimensions disagree");
  }

  // At most one witness per timestep; a sample's own hit takes precedence
  // over the flowpipe hit at the same time and is never refined away.
  std::map<Timestep, Witness> witnesses;
  std::vector<Flowpipe> segments;

  for (const auto& s : log.samples) {
    if (intersects_unsafe(s.set, u)) {
      witnesses.emplace(s.time, Witness{s.time, s.set, false});
    }
  }

  for (std::size_t k = 0; k + 1 < log.samples.size(); ++k) {
    const auto& cur = log.samples[k];
    const auto& next = log.samples[k + 1];
    const Timestep steps = next.time - cur.time;
    Flowpipe fp =
        compute_flowpipe(sys, cur.set, cur.time, steps, max_generators);
    for (Timestep off = 1; off <= steps; ++off) {
      const Timestep t = cur.time + off;
      if (witnesses.contains(t)) continue;
      if (!intersects_unsafe(fp.sets[off], u)) continue;
      bool refined = false;
      if (refine) {
        refined = refine_segment(sys, fp, t, u, next.set, next.time,
                                 max_generators);
      }
      witnesses.emplace(t, Witness{t, fp.sets[off], refined});
    }
    segments.push_back(std::move(fp));
  }

  // The span after the last sample is not extrapolated; the trailing
  // zero-step flowpipe just anchors reporting at the final sample.
  segments.push_back(
      Flowpipe(log.samples.back().time, {log.samples.back().set}));

  Verdict verdict{VerdictStatus::kSafe, {}, std::move(segments)};
  for (auto& [t, w] : witnesses) {
    if (!w.refined_away) verdict.status = VerdictStatus::kPossiblyUnsafe;
    verdict.witnesses.push_back(std::move(w));
  }
  return verdict;
}

}  // namespace reachmon
