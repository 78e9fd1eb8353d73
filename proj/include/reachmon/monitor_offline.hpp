#pragma once

#include <optional>
#include <vector>

#include "reachmon/flowpipe.hpp"

namespace reachmon {

/// How a log's samples are serialized. Interval samples keep their exact
/// bounds so files round-trip bit-for-bit.
enum class LogKind { kInterval, kZonotope };

struct LogSample {
  Timestep time;
  Zonotope set;
  /// Present for interval samples: the bounds exactly as parsed/generated.
  std::optional<IntervalBox> box;
};

/// Time-ordered, aperiodic sequence of noisy set-valued samples.
struct Log {
  int dimension;
  LogKind kind;
  std::vector<LogSample> samples;
};

/// Validates the log invariants (nonempty, strictly increasing times,
/// uniform dimension, nonnegative first time); throws on violation.
void validate_log(const Log& log);

enum class VerdictStatus { kSafe, kPossiblyUnsafe };

/// One potential violation: the monitored set touched the unsafe region at
/// `time`. refined_away means later evidence proved no consistent trajectory
/// passes through the overlap.
struct Witness {
  Timestep time;
  Zonotope reach_set;
  bool refined_away;
};

/// Monitoring outcome. Status is PossiblyUnsafe iff some witness survived
/// refinement. Segments hold every computed flowpipe (for reporting) plus a
/// trailing zero-step flowpipe anchored at the final sample.
struct Verdict {
  VerdictStatus status;
  std::vector<Witness> witnesses;
  std::vector<Flowpipe> segments;
};

/// Over-approximates z intersected with one unsafe disjunct as an
/// axis-aligned zonotope: the interval hull of z clipped against the
/// halfspace (per-dimension tightening) or against the disjunct's hull.
/// Absent when z and the disjunct do not intersect at all.
std::optional<Zonotope> hull_intersect_overapprox(const Zonotope& z,
                                                  const UnsafeDisjunct& d);

/// Can the unsafe overlap at hit_time be ruled out using the next sample?
/// For every disjunct touching the reach set at hit_time, a fresh flowpipe
/// is started from the clipped overlap; the hit is refined away only when
/// every such flowpipe misses next_sample at next_time, so any trajectory
/// through the overlap would contradict the log.
bool refine_segment(const UncertainLinearSystem& sys, const Flowpipe& fp,
                    Timestep hit_time, const UnsafeSpec& u,
                    const Zonotope& next_sample, Timestep next_time,
                    int max_generators);

/// Offline monitoring: stitches flowpipes across consecutive samples, scans
/// them against u, and (optionally) refines hits between samples using the
/// next sample. Hits of a logged sample itself are never refined away.
Verdict monitor_offline(const UncertainLinearSystem& sys, const Log& log,
                        const UnsafeSpec& u, int max_generators, bool refine);

}  // namespace reachmon
