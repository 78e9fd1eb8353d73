#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reachmon/loggen.hpp"

namespace reachmon {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// `.mlog` — noisy aperiodic logs.
/// Header `#MLOG v1 dim=<n> type=<interval|zonotope>`, `#` comment lines,
/// one sample per line. Interval: `<t> <l1> <u1> ... <ln> <un>`. Zonotope:
/// `<t> <m> <c1>..<cn> <g[1][1]>..<g[n][1]> ...` (generators column-major).
/// Times strictly increasing. parse(write(x)) == x bit-for-bit.
Log parse_mlog(const std::string& text);
std::string write_mlog(const Log& log);

/// `.mbeh` — full behaviors. Header `#MBEH v1 dim=<n>`, then exactly one
/// line `<t> <x1> ... <xn>` for t = 0,1,...,T with consecutive times.
Behavior parse_mbeh(const std::string& text);
std::string write_mbeh(const Behavior& beh);

/// `.mmodel` — bounding models. Header `#MMODEL v1 dim=<n>`, then keyword
/// lines: `var <name>*n` (optional), `maxgen <k>` (optional), `row <a>*n`
/// (exactly n of them, top to bottom), `unc <i> <j> <lo> <hi>` (repeated).
struct ModelFile {
  UncertainLinearSystem system;
  std::vector<std::string> var_names;
  int max_generators;
};
ModelFile parse_model(const std::string& text);
std::string write_model(const ModelFile& mf);

/// `.munsafe` — unsafe specifications. Header `#MUNSAFE v1 dim=<n>`, then
/// disjunct lines: `halfspace <a1>..<an> <offset>` (a . x >= offset) or
/// `zonotope <m> <c1>..<cn> <generators column-major>`.
UnsafeSpec parse_unsafe(const std::string& text);
std::string write_unsafe(const UnsafeSpec& u);

/// One plot row per covered timestep: reach-set hull bounds in the chosen
/// dimension, plus the sample hull bounds at sample (segment-anchor) times.
struct PlotRow {
  Timestep t;
  double reach_lower;
  double reach_upper;
  std::optional<double> sample_lower;
  std::optional<double> sample_upper;
};

std::vector<PlotRow> collect_plot_rows(const Verdict& verdict, int dim_index);

/// CSV columns: t, reach_lower, reach_upper, sample_lower, sample_upper,
/// unsafe_threshold (sample cells empty off sample times).
std::string export_plot_csv(const Verdict& verdict, int dim_index,
                            std::optional<double> unsafe_threshold);

/// One band to draw: reach envelope plus sample marks, with fill colors.
struct PlotSeries {
  std::vector<PlotRow> rows;
  std::string reach_color;
  std::string sample_color;
};

/// Standalone SVG: reach bands, then sample marks, then the unsafe
/// threshold line, in that paint order.
std::string export_plot_svg(const std::vector<PlotSeries>& series,
                            std::optional<double> unsafe_threshold);
std::string export_plot_svg(const Verdict& verdict, int dim_index,
                            std::optional<double> unsafe_threshold);

/// Threshold for plotting: first halfspace disjunct aligned with the given
/// axis, returned as the state-space bound offset / normal[dim].
std::optional<double> unsafe_threshold_for_dim(const UnsafeSpec& u,
                                               int dim_index);

}  // namespace reachmon
