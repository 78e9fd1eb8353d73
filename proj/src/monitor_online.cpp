#include "reachmon/monitor_online.hpp"

#include <algorithm>

#include "reachmon/errors.hpp"

namespace reachmon {

namespace {

LogSample noisy_sample(const Behavior& beh, Timestep t,
                       const Eigen::VectorXd& noise) {
  const Eigen::VectorXd& x = beh.states[static_cast<std::size_t>(t)];
  IntervalBox box(x - noise, x + noise);
  Zonotope set = from_interval(box);
  return LogSample{t, std::move(set), std::move(box)};
}

void validate_config(const OnlineConfig& cfg, int dim) {
  if (cfg.noise.size() != dim) {
    throw DimensionError("online config noise size must match dimension");
  }
  if (!cfg.noise.allFinite() || (cfg.noise.array() < 0.0).any()) {
    throw NumericError("online config noise must be finite and nonnegative");
  }
  if (cfg.max_skip < 1) {
    throw DimensionError("online config max_skip must be >= 1");
  }
}

// Trigger rule applied to an already-computed horizon flowpipe.
Timestep trigger_from_flowpipe(const Flowpipe& fp, Timestep t_k,
                               const UnsafeSpec& u, Timestep horizon) {
  const std::optional<Timestep> hit = first_unsafe(fp, u, 1);
  if (!hit) return t_k + horizon;
  return std::max<Timestep>(*hit - 1, t_k + 1);
}

}  // namespace

void validate_behavior(const Behavior& beh) {
  if (beh.states.empty()) {
    throw FormatError(0, "behavior has no states");
  }
  const int n = beh.dim();
  if (n < 1) {
    throw DimensionError("behavior dimension must be >= 1");
  }
  for (const auto& x : beh.states) {
    if (x.size() != n) {
      throw DimensionError("behavior states have mixed dimensions");
    }
    if (!x.allFinite()) {
      throw NumericError("behavior state contains a non-finite entry");
    }
  }
}

Timestep next_trigger(const UncertainLinearSystem& sys,
                      const Zonotope& current_sample, Timestep t_k,
                      const UnsafeSpec& u, const OnlineConfig& cfg,
                      Timestep remaining) {
  if (remaining < 1) {
    throw DimensionError("next_trigger: remaining steps must be >= 1");
  }
  const Timestep horizon = std::min<Timestep>(cfg.max_skip, remaining);
  const Flowpipe fp =
      compute_flowpipe(sys, current_sample, t_k, horizon, cfg.max_generators);
  return trigger_from_flowpipe(fp, t_k, u, horizon);
}

OnlineResult monitor_online(const UncertainLinearSystem& sys,
                            const Behavior& beh, const UnsafeSpec& u,
                            const OnlineConfig& cfg) {
  validate_behavior(beh);
  const int n = sys.dim();
  if (beh.dim() != n || u.dim() != n) {
    throw DimensionError("monitor_online: dimensions disagree");
  }
  validate_config(cfg, n);

  const Timestep end = beh.last_time();
  Log synthesized{n, LogKind::kInterval, {}};
  std::vector<Witness> witnesses;
  std::vector<Flowpipe> segments;

  LogSample current = noisy_sample(beh, 0, cfg.noise);
  if (intersects_unsafe(current.set, u)) {
    witnesses.push_back(Witness{0, current.set, false});
  }
  synthesized.samples.push_back(current);

  Timestep t_k = 0;
  while (t_k < end) {
    const Timestep horizon = std::min<Timestep>(cfg.max_skip, end - t_k);
    Flowpipe fp = compute_flowpipe(sys, current.set, t_k, horizon,
                                   cfg.max_generators);
    const Timestep trigger = trigger_from_flowpipe(fp, t_k, u, horizon);

    // Report only the realized span up to the trigger.
    fp.sets.erase(fp.sets.begin() + static_cast<std::ptrdiff_t>(trigger - t_k) + 1,
                  fp.sets.end());
    segments.push_back(std::move(fp));

    current = noisy_sample(beh, trigger, cfg.noise);
    if (intersects_unsafe(current.set, u)) {
      witnesses.push_back(Witness{trigger, current.set, false});
    }
    synthesized.samples.push_back(current);
    t_k = trigger;
  }

  segments.push_back(Flowpipe(t_k, {current.set}));

  const VerdictStatus status = witnesses.empty()
                                   ? VerdictStatus::kSafe
                                   : VerdictStatus::kPossiblyUnsafe;
  return OnlineResult{Verdict{status, std::move(witnesses), std::move(segments)},
                      std::move(synthesized)};
}

}  // namespace reachmon
