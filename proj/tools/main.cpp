// reachmon — command-line safety monitor for black-box system logs backed by
// an uncertain-linear-system bounding model.
//
// Subcommands: offline, online, genlog, plot, case. Exit code 0 means every
// check came back safe, 2 flags a possible violation, 1 is any usage,
// format, or numeric error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "reachmon/errors.hpp"
#include "reachmon/formats.hpp"
#include "reachmon/loggen.hpp"
#include "reachmon/monitor_offline.hpp"
#include "reachmon/monitor_online.hpp"

namespace fs = std::filesystem;
using namespace reachmon;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << content;
}

const char* status_name(VerdictStatus s) {
  return s == VerdictStatus::kSafe ? "SAFE" : "POSSIBLY_UNSAFE";
}

int status_exit_code(VerdictStatus s) {
  return s == VerdictStatus::kSafe ? 0 : 2;
}

std::string verdict_report(const Verdict& v, std::size_t sample_count) {
  std::string out = "STATUS=";
  out += status_name(v.status);
  out += "\nsamples=" + std::to_string(sample_count);
  out += "\nwitnesses=" + std::to_string(v.witnesses.size());
  out += '\n';
  for (const auto& w : v.witnesses) {
    out += "witness t=" + std::to_string(w.time);
    out += w.refined_away ? " refined_away=yes" : " refined_away=no";
    const IntervalBox hull = interval_hull(w.reach_set);
    out += " hull=";
    for (int i = 0; i < hull.dim(); ++i) {
      out += i == 0 ? "" : " ";
      out += '[' + format_double(hull.lower(i)) + ',' +
             format_double(hull.upper(i)) + ']';
    }
    out += '\n';
  }
  return out;
}

Eigen::VectorXd noise_vector(const std::vector<double>& noise, int dim) {
  Eigen::VectorXd v(dim);
  if (noise.empty()) {
    v.setZero();
  } else if (noise.size() == 1) {
    v.setConstant(noise[0]);
  } else if (noise.size() == static_cast<std::size_t>(dim)) {
    for (int i = 0; i < dim; ++i) v(i) = noise[static_cast<std::size_t>(i)];
  } else {
    throw Error("--noise needs 1 value or one per dimension (" +
                std::to_string(dim) + ")");
  }
  return v;
}

struct OfflineOptions {
  std::string model_path;
  std::string log_path;
  std::string unsafe_path;
  std::string out_dir = "out";
  int max_generators = 0;  // 0 = model default
  bool refine = true;
  int dim = 0;
  std::string prefix = "offline";
  bool plots_only = false;
};

int run_offline_pipeline(const OfflineOptions& opt) {
  const ModelFile model = parse_model(read_file(opt.model_path));
  const Log log = parse_mlog(read_file(opt.log_path));
  const UnsafeSpec unsafe = parse_unsafe(read_file(opt.unsafe_path));
  const int max_gens =
      opt.max_generators > 0 ? opt.max_generators : model.max_generators;

  const Verdict verdict =
      monitor_offline(model.system, log, unsafe, max_gens, opt.refine);

  const fs::path out(opt.out_dir);
  const auto threshold = unsafe_threshold_for_dim(unsafe, opt.dim);
  write_file(out / (opt.prefix + ".csv"),
             export_plot_csv(verdict, opt.dim, threshold));
  write_file(out / (opt.prefix + ".svg"),
             export_plot_svg(verdict, opt.dim, threshold));
  if (!opt.plots_only) {
    write_file(out / (opt.prefix + "_verdict.txt"),
               verdict_report(verdict, log.samples.size()));
  }
  std::cout << "STATUS=" << status_name(verdict.status) << "\n";
  return status_exit_code(verdict.status);
}

struct OnlineOptions {
  std::string model_path;
  std::string behavior_path;
  std::string unsafe_path;
  std::string out_dir = "out";
  int max_generators = 0;
  std::vector<double> noise;
  int max_skip = 10;
  int dim = 0;
  std::string prefix = "online";
};

int run_online_pipeline(const OnlineOptions& opt) {
  const ModelFile model = parse_model(read_file(opt.model_path));
  const Behavior beh = parse_mbeh(read_file(opt.behavior_path));
  const UnsafeSpec unsafe = parse_unsafe(read_file(opt.unsafe_path));
  const int max_gens =
      opt.max_generators > 0 ? opt.max_generators : model.max_generators;
  const OnlineConfig cfg{noise_vector(opt.noise, model.system.dim()),
                         opt.max_skip, max_gens};

  const OnlineResult result = monitor_online(model.system, beh, unsafe, cfg);

  const fs::path out(opt.out_dir);
  const auto threshold = unsafe_threshold_for_dim(unsafe, opt.dim);
  write_file(out / (opt.prefix + "_synthesized.mlog"),
             write_mlog(result.synthesized));
  write_file(out / (opt.prefix + ".csv"),
             export_plot_csv(result.verdict, opt.dim, threshold));
  write_file(out / (opt.prefix + ".svg"),
             export_plot_svg(result.verdict, opt.dim, threshold));
  write_file(out / (opt.prefix + "_verdict.txt"),
             verdict_report(result.verdict, result.synthesized.samples.size()));
  std::cout << "STATUS=" << status_name(result.verdict.status) << "\n";
  std::cout << "samples=" << result.synthesized.samples.size()
            << " of=" << beh.states.size() << "\n";
  return status_exit_code(result.verdict.status);
}

struct GenlogOptions {
  std::string model_path;
  std::string init_path;
  std::string out_dir = "out";
  long long length = 100;
  double probability = 0.5;
  std::vector<double> noise;
  std::uint64_t seed = 1;
  std::string prefix = "generated";
};

int run_genlog(const GenlogOptions& opt) {
  const ModelFile model = parse_model(read_file(opt.model_path));
  const Log init_log = parse_mlog(read_file(opt.init_path));
  const GenConfig cfg{init_log.samples.front().set, opt.length,
                      opt.probability,
                      noise_vector(opt.noise, model.system.dim()), opt.seed};
  const auto [log, beh] = generate_log_with_behavior(model.system, cfg);

  const fs::path out(opt.out_dir);
  write_file(out / (opt.prefix + ".mlog"), write_mlog(log));
  write_file(out / (opt.prefix + ".mbeh"), write_mbeh(beh));
  std::cout << "samples=" << log.samples.size() << " steps=" << opt.length
            << "\n";
  return 0;
}

// Bundled case studies: committed static logs and behaviors over editable
// model/unsafe files, mirroring the four sample-density/noise quadrants,
// the online run, and the offline-vs-online comparison.
struct CaseStudy {
  const char* name;
  int dim;  // plotted state variable
  double online_noise;
  int online_max_skip;
};

const CaseStudy kCases[] = {
    {"anesthesia", 0, 0.05, 20},
    {"acc", 0, 0.2, 25},
};

const char* variant_log(int variant) {
  switch (variant) {
    case 1: return "log_sporadic_low.mlog";
    case 2: return "log_sporadic_high.mlog";
    case 3: return "log_frequent_low.mlog";
    case 4: return "log_frequent_high.mlog";
  }
  throw Error("--offline variant must be 1..4");
}

struct CaseOptions {
  std::string name;
  std::string cases_dir = "cases";
  std::string out_dir;
  int offline_variant = 0;
  bool online = false;
  bool compare = false;
};

int run_case(const CaseOptions& opt) {
  const CaseStudy* cs = nullptr;
  for (const auto& c : kCases) {
    if (opt.name == c.name) cs = &c;
  }
  if (!cs) {
    throw Error("unknown case '" + opt.name + "' (anesthesia, acc)");
  }
  const fs::path dir = fs::path(opt.cases_dir) / cs->name;
  const std::string out_dir =
      opt.out_dir.empty() ? ("out/" + opt.name) : opt.out_dir;

  const int selected = (opt.offline_variant > 0 ? 1 : 0) +
                       (opt.online ? 1 : 0) + (opt.compare ? 1 : 0);
  if (selected != 1) {
    throw Error("pick exactly one of --offline <1..4>, --online, --compare");
  }

  if (opt.offline_variant > 0) {
    OfflineOptions off;
    off.model_path = (dir / "model.mmodel").string();
    off.log_path = (dir / variant_log(opt.offline_variant)).string();
    off.unsafe_path = (dir / "unsafe.munsafe").string();
    off.out_dir = out_dir;
    off.dim = cs->dim;
    off.prefix = "offline" + std::to_string(opt.offline_variant);
    return run_offline_pipeline(off);
  }

  if (opt.online) {
    OnlineOptions on;
    on.model_path = (dir / "model.mmodel").string();
    on.behavior_path = (dir / "behavior.mbeh").string();
    on.unsafe_path = (dir / "unsafe.munsafe").string();
    on.out_dir = out_dir;
    on.noise = {cs->online_noise};
    on.max_skip = cs->online_max_skip;
    on.dim = cs->dim;
    return run_online_pipeline(on);
  }

  // compare: offline on the frequent/low log overlaid with the online run
  const ModelFile model = parse_model(read_file(dir / "model.mmodel"));
  const UnsafeSpec unsafe = parse_unsafe(read_file(dir / "unsafe.munsafe"));
  const Log log = parse_mlog(read_file(dir / variant_log(3)));
  const Behavior beh = parse_mbeh(read_file(dir / "behavior.mbeh"));

  const Verdict off_verdict =
      monitor_offline(model.system, log, unsafe, model.max_generators, true);
  const OnlineConfig cfg{noise_vector({cs->online_noise}, model.system.dim()),
                         cs->online_max_skip, model.max_generators};
  const OnlineResult on_result = monitor_online(model.system, beh, unsafe, cfg);

  const auto threshold = unsafe_threshold_for_dim(unsafe, cs->dim);
  const fs::path out(out_dir);
  write_file(out / "compare_offline.csv",
             export_plot_csv(off_verdict, cs->dim, threshold));
  write_file(out / "compare_online.csv",
             export_plot_csv(on_result.verdict, cs->dim, threshold));
  const std::vector<PlotSeries> series = {
      {collect_plot_rows(off_verdict, cs->dim), "#2ca02c", "magenta"},
      {collect_plot_rows(on_result.verdict, cs->dim), "#1f77b4", "black"},
  };
  write_file(out / "compare.svg", export_plot_svg(series, threshold));
  std::string report = "STATUS_OFFLINE=";
  report += status_name(off_verdict.status);
  report += "\nSTATUS_ONLINE=";
  report += status_name(on_result.verdict.status);
  report += "\noffline_samples=" + std::to_string(log.samples.size());
  report += "\nonline_samples=" +
            std::to_string(on_result.synthesized.samples.size());
  report += '\n';
  write_file(out / "compare_verdict.txt", report);
  std::cout << "STATUS_OFFLINE=" << status_name(off_verdict.status) << "\n"
            << "STATUS_ONLINE=" << status_name(on_result.verdict.status)
            << "\n";
  const bool any_unsafe =
      off_verdict.status == VerdictStatus::kPossiblyUnsafe ||
      on_result.verdict.status == VerdictStatus::kPossiblyUnsafe;
  return any_unsafe ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "reachmon: offline/online safety monitoring of noisy aperiodic logs "
      "via zonotope reachability of an uncertain-linear bounding model"};
  app.require_subcommand(1);

  OfflineOptions off;
  auto* offline = app.add_subcommand(
      "offline", "monitor a recorded log for possible safety violations");
  offline->add_option("--model", off.model_path, ".mmodel bounding model")
      ->required();
  offline->add_option("--log", off.log_path, ".mlog recorded log")->required();
  offline->add_option("--unsafe", off.unsafe_path, ".munsafe specification")
      ->required();
  offline->add_option("--out", off.out_dir, "output directory");
  offline->add_option("--max-generators", off.max_generators,
                      "zonotope order cap (default: model file)");
  offline->add_flag("--refine,!--no-refine", off.refine,
                    "refine spurious alarms with the next sample");
  offline->add_option("--dim", off.dim, "state dimension to plot");

  OnlineOptions on;
  auto* online = app.add_subcommand(
      "online", "monitor a behavior, sampling only when risk appears");
  online->add_option("--model", on.model_path, ".mmodel bounding model")
      ->required();
  online->add_option("--behavior", on.behavior_path, ".mbeh full behavior")
      ->required();
  online->add_option("--unsafe", on.unsafe_path, ".munsafe specification")
      ->required();
  online->add_option("--out", on.out_dir, "output directory");
  online->add_option("--max-generators", on.max_generators,
                     "zonotope order cap (default: model file)");
  online->add_option("--noise", on.noise,
                     "sensor half-width (one value or one per dimension)");
  online->add_option("--max-skip", on.max_skip,
                     "hard cap on steps between samples");
  online->add_option("--dim", on.dim, "state dimension to plot");

  GenlogOptions gen;
  auto* genlog = app.add_subcommand(
      "genlog", "generate a random noisy aperiodic log and its behavior");
  genlog->add_option("--model", gen.model_path, ".mmodel bounding model")
      ->required();
  genlog->add_option("--init", gen.init_path,
                     ".mlog whose first sample is the initial set")
      ->required();
  genlog->add_option("--out", gen.out_dir, "output directory");
  genlog->add_option("--length", gen.length, "number of timesteps");
  genlog->add_option("--probability", gen.probability,
                     "per-step logging probability");
  genlog->add_option("--noise", gen.noise,
                     "sample noise half-width (one value or one per dim)");
  genlog->add_option("--seed", gen.seed, "random seed");
  genlog->add_option("--prefix", gen.prefix, "output file prefix");

  OfflineOptions plot_opt;
  plot_opt.prefix = "plot";
  plot_opt.plots_only = true;
  auto* plot = app.add_subcommand(
      "plot", "run offline monitoring and export only the plots");
  plot->add_option("--model", plot_opt.model_path, ".mmodel bounding model")
      ->required();
  plot->add_option("--log", plot_opt.log_path, ".mlog recorded log")
      ->required();
  plot->add_option("--unsafe", plot_opt.unsafe_path, ".munsafe specification")
      ->required();
  plot->add_option("--out", plot_opt.out_dir, "output directory");
  plot->add_option("--max-generators", plot_opt.max_generators,
                   "zonotope order cap (default: model file)");
  plot->add_flag("--refine,!--no-refine", plot_opt.refine,
                 "refine spurious alarms with the next sample");
  plot->add_option("--dim", plot_opt.dim, "state dimension to plot");

  CaseOptions case_opt;
  auto* case_cmd =
      app.add_subcommand("case", "run a bundled case study (anesthesia, acc)");
  case_cmd->add_option("name", case_opt.name, "case study name")->required();
  case_cmd->add_option("--offline", case_opt.offline_variant,
                       "offline variant 1..4 "
                       "(sample density x sample noise quadrants)");
  case_cmd->add_flag("--online", case_opt.online, "online monitoring run");
  case_cmd->add_flag("--compare", case_opt.compare,
                     "overlay offline and online monitoring");
  case_cmd->add_option("--cases-dir", case_opt.cases_dir,
                       "directory holding the bundled case files");
  case_cmd->add_option("--out", case_opt.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*offline) return run_offline_pipeline(off);
    if (*online) return run_online_pipeline(on);
    if (*genlog) return run_genlog(gen);
    if (*plot) return run_offline_pipeline(plot_opt);
    if (*case_cmd) return run_case(case_opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
