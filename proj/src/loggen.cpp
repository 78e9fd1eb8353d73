#include "reachmon/loggen.hpp"

#include "reachmon/errors.hpp"
#include "reachmon/random.hpp"

namespace reachmon {

namespace {

void validate_config(const UncertainLinearSystem& sys, const GenConfig& cfg) {
  if (cfg.init.dim() != sys.dim()) {
    throw DimensionError("generator config init set dimension mismatch");
  }
  if (cfg.length < 1) {
    throw DimensionError("generator config length must be >= 1");
  }
  if (!(cfg.log_probability >= 0.0 && cfg.log_probability <= 1.0)) {
    throw DimensionError("log probability must be in [0, 1]");
  }
  if (cfg.noise.size() != sys.dim() || !cfg.noise.allFinite() ||
      (cfg.noise.array() < 0.0).any()) {
    throw DimensionError("noise must be finite, nonnegative, of system size");
  }
}

Behavior simulate_with(const UncertainLinearSystem& sys, const GenConfig& cfg,
                       Rng& rng) {
  Eigen::VectorXd xi(cfg.init.num_generators());
  for (Eigen::Index j = 0; j < xi.size(); ++j) {
    xi(j) = rng.uniform(-1.0, 1.0);
  }

  Behavior beh;
  beh.states.reserve(static_cast<std::size_t>(cfg.length) + 1);
  beh.states.push_back(cfg.init.center + cfg.init.generators * xi);
  for (Timestep t = 0; t < cfg.length; ++t) {
    Eigen::MatrixXd a = sys.nominal();
    for (const auto& e : sys.uncertainty()) {
      a(e.row, e.col) += rng.uniform(e.lo, e.hi);
    }
    beh.states.push_back(a * beh.states.back());
  }
  return beh;
}

}  // namespace

Behavior simulate_behavior(const UncertainLinearSystem& sys,
                           const GenConfig& cfg) {
  validate_config(sys, cfg);
  Rng rng(cfg.seed);
  return simulate_with(sys, cfg, rng);
}

std::pair<Log, Behavior> generate_log_with_behavior(
    const UncertainLinearSystem& sys, const GenConfig& cfg) {
  validate_config(sys, cfg);
  Rng rng(cfg.seed);
  Behavior beh = simulate_with(sys, cfg, rng);

  Log log{sys.dim(), LogKind::kInterval, {}};
  for (Timestep t = 0; t <= cfg.length; ++t) {
    if (t > 0 && !rng.bernoulli(cfg.log_probability)) continue;
    const Eigen::VectorXd& x = beh.states[static_cast<std::size_t>(t)];
    IntervalBox box(x - cfg.noise, x + cfg.noise);
    log.samples.push_back(LogSample{t, from_interval(box), std::move(box)});
  }

  // Each sample box contains the true state by construction; keep that as a
  // hard guarantee of the generator.
  for (const auto& s : log.samples) {
    const Eigen::VectorXd& x = beh.states[static_cast<std::size_t>(s.time)];
    if (((x - s.box->lower).array() < 0.0).any() ||
        ((s.box->upper - x).array() < 0.0).any()) {
      throw NumericError("generated sample does not contain the true state");
    }
  }
  return {std::move(log), std::move(beh)};
}

Log generate_log(const UncertainLinearSystem& sys, const GenConfig& cfg) {
  return generate_log_with_behavior(sys, cfg).first;
}

}  // namespace reachmon
