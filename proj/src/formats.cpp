#include "reachmon/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <string_view>

#include "reachmon/errors.hpp"

namespace reachmon {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

double parse_number(std::string_view tok, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError(line, "expected a number, found '" + std::string(tok) + "'");
  }
  if (!std::isfinite(v)) {
    throw FormatError(line, "non-finite number '" + std::string(tok) + "'");
  }
  return v;
}

long long parse_integer(std::string_view tok, int line, const char* what) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError(line, std::string("expected ") + what + ", found '" +
                                std::string(tok) + "'");
  }
  return v;
}

// Walks the text line by line with 1-based numbering; blank lines are
// skipped, `#` lines after the header are comments.
class LineScanner {
 public:
  explicit LineScanner(const std::string& text) : text_(text) {}

  // Next content line, or nullopt at end. Sets line() to its number.
  std::optional<std::string_view> next(bool skip_comments) {
    while (pos_ < text_.size()) {
      std::size_t eol = text_.find('\n', pos_);
      if (eol == std::string::npos) eol = text_.size();
      std::string_view line(text_.data() + pos_, eol - pos_);
      pos_ = eol + 1;
      ++line_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const std::size_t start = line.find_first_not_of(" \t");
      if (start == std::string_view::npos) continue;
      if (skip_comments && line[start] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  int line() const { return line_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

// Parses `#<MAGIC> v1 key=value ...`, returning the key/value pairs.
std::map<std::string, std::string, std::less<>> parse_header(
    LineScanner& scanner, const std::string& magic) {
  const auto line = scanner.next(/*skip_comments=*/false);
  if (!line) {
    throw FormatError(1, "empty input, expected header '" + magic + " v1 ...'");
  }
  const auto tokens = split_tokens(*line);
  if (tokens.size() < 2 || tokens[0] != magic || tokens[1] != "v1") {
    throw FormatError(scanner.line(),
                      "malformed header, expected '" + magic + " v1 ...'");
  }
  std::map<std::string, std::string, std::less<>> kv;
  for (std::size_t k = 2; k < tokens.size(); ++k) {
    const auto eq = tokens[k].find('=');
    if (eq == std::string_view::npos) {
      throw FormatError(scanner.line(), "malformed header field '" +
                                            std::string(tokens[k]) + "'");
    }
    kv.emplace(std::string(tokens[k].substr(0, eq)),
               std::string(tokens[k].substr(eq + 1)));
  }
  return kv;
}

int header_dim(const std::map<std::string, std::string, std::less<>>& kv,
               int line) {
  const auto it = kv.find("dim");
  if (it == kv.end()) throw FormatError(line, "header is missing dim=<n>");
  const long long n = parse_integer(it->second, line, "dimension");
  if (n < 1) throw FormatError(line, "dimension must be >= 1");
  return static_cast<int>(n);
}

Timestep parse_time(std::string_view tok, int line) {
  const long long t = parse_integer(tok, line, "a timestep");
  if (t < 0) throw FormatError(line, "timestep must be nonnegative");
  return static_cast<Timestep>(t);
}

Zonotope parse_zonotope_tokens(const std::vector<std::string_view>& tokens,
                               std::size_t offset, int n, int line) {
  if (tokens.size() < offset + 1) {
    throw FormatError(line, "missing generator count");
  }
  const long long m = parse_integer(tokens[offset], line, "generator count");
  if (m < 0) throw FormatError(line, "generator count must be nonnegative");
  const std::size_t need = offset + 1 + static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(n * m);
  if (tokens.size() != need) {
    throw FormatError(line, "expected " + std::to_string(need) +
                                " fields for a zonotope with " +
                                std::to_string(m) + " generators, found " +
                                std::to_string(tokens.size()));
  }
  Eigen::VectorXd center(n);
  std::size_t k = offset + 1;
  for (int i = 0; i < n; ++i) center(i) = parse_number(tokens[k++], line);
  Eigen::MatrixXd gens(n, m);
  for (long long j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) gens(i, j) = parse_number(tokens[k++], line);
  }
  return Zonotope(std::move(center), std::move(gens));
}

void append_zonotope_tokens(std::string& out, const Zonotope& z) {
  out += ' ';
  out += std::to_string(z.num_generators());
  for (int i = 0; i < z.dim(); ++i) {
    out += ' ';
    out += format_double(z.center(i));
  }
  for (int j = 0; j < z.num_generators(); ++j) {
    for (int i = 0; i < z.dim(); ++i) {
      out += ' ';
      out += format_double(z.generators(i, j));
    }
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

Log parse_mlog(const std::string& text) {
  LineScanner scanner(text);
  const auto kv = parse_header(scanner, "#MLOG");
  const int n = header_dim(kv, scanner.line());
  const auto type_it = kv.find("type");
  if (type_it == kv.end()) {
    throw FormatError(scanner.line(), "header is missing type=<interval|zonotope>");
  }
  LogKind kind;
  if (type_it->second == "interval") {
    kind = LogKind::kInterval;
  } else if (type_it->second == "zonotope") {
    kind = LogKind::kZonotope;
  } else {
    throw FormatError(scanner.line(),
                      "unknown log type '" + type_it->second + "'");
  }

  Log log{n, kind, {}};
  while (const auto line = scanner.next(/*skip_comments=*/true)) {
    const auto tokens = split_tokens(*line);
    const int ln = scanner.line();
    const Timestep t = parse_time(tokens[0], ln);
    if (!log.samples.empty() && t <= log.samples.back().time) {
      throw FormatError(ln, "sample times must be strictly increasing (t=" +
                                std::to_string(t) + " after t=" +
                                std::to_string(log.samples.back().time) + ")");
    }
    if (kind == LogKind::kInterval) {
      if (tokens.size() != 1 + 2 * static_cast<std::size_t>(n)) {
        throw FormatError(ln, "expected " + std::to_string(1 + 2 * n) +
                                  " fields for an interval sample, found " +
                                  std::to_string(tokens.size()));
      }
      Eigen::VectorXd lo(n), hi(n);
      for (int i = 0; i < n; ++i) {
        lo(i) = parse_number(tokens[1 + 2 * i], ln);
        hi(i) = parse_number(tokens[2 + 2 * i], ln);
        if (lo(i) > hi(i)) {
          throw FormatError(ln, "interval has lower > upper in dimension " +
                                    std::to_string(i + 1));
        }
      }
      IntervalBox box(std::move(lo), std::move(hi));
      log.samples.push_back(LogSample{t, from_interval(box), std::move(box)});
    } else {
      Zonotope z = parse_zonotope_tokens(tokens, 1, n, ln);
      log.samples.push_back(LogSample{t, std::move(z), std::nullopt});
    }
  }
  if (log.samples.empty()) {
    throw FormatError(scanner.line(), "log has no samples");
  }
  return log;
}

std::string write_mlog(const Log& log) {
  std::string out = "#MLOG v1 dim=" + std::to_string(log.dimension) +
                    " type=" +
                    (log.kind == LogKind::kInterval ? "interval" : "zonotope") +
                    "\n";
  for (const auto& s : log.samples) {
    out += std::to_string(s.time);
    if (log.kind == LogKind::kInterval) {
      const IntervalBox box = s.box ? *s.box : interval_hull(s.set);
      for (int i = 0; i < log.dimension; ++i) {
        out += ' ';
        out += format_double(box.lower(i));
        out += ' ';
        out += format_double(box.upper(i));
      }
    } else {
      append_zonotope_tokens(out, s.set);
    }
    out += '\n';
  }
  return out;
}

Behavior parse_mbeh(const std::string& text) {
  LineScanner scanner(text);
  const auto kv = parse_header(scanner, "#MBEH");
  const int n = header_dim(kv, scanner.line());

  Behavior beh;
  Timestep expected = 0;
  while (const auto line = scanner.next(/*skip_comments=*/true)) {
    const auto tokens = split_tokens(*line);
    const int ln = scanner.line();
    if (tokens.size() != 1 + static_cast<std::size_t>(n)) {
      throw FormatError(ln, "expected " + std::to_string(1 + n) +
                                " fields for a state, found " +
                                std::to_string(tokens.size()));
    }
    const Timestep t = parse_time(tokens[0], ln);
    if (t != expected) {
      throw FormatError(ln, "expected time " + std::to_string(expected) +
                                ", found " + std::to_string(t));
    }
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = parse_number(tokens[1 + i], ln);
    beh.states.push_back(std::move(x));
    ++expected;
  }
  if (beh.states.empty()) {
    throw FormatError(scanner.line(), "behavior has no states");
  }
  return beh;
}

std::string write_mbeh(const Behavior& beh) {
  std::string out = "#MBEH v1 dim=" + std::to_string(beh.dim()) + "\n";
  for (std::size_t t = 0; t < beh.states.size(); ++t) {
    out += std::to_string(t);
    for (Eigen::Index i = 0; i < beh.states[t].size(); ++i) {
      out += ' ';
      out += format_double(beh.states[t](i));
    }
    out += '\n';
  }
  return out;
}

ModelFile parse_model(const std::string& text) {
  LineScanner scanner(text);
  const auto kv = parse_header(scanner, "#MMODEL");
  const int n = header_dim(kv, scanner.line());

  std::vector<std::string> var_names;
  int max_generators = default_max_generators(n);
  Eigen::MatrixXd nominal(n, n);
  int rows_seen = 0;
  std::vector<UncertaintyEntry> uncertainty;
  int last_line = scanner.line();

  while (const auto line = scanner.next(/*skip_comments=*/true)) {
    const auto tokens = split_tokens(*line);
    const int ln = scanner.line();
    last_line = ln;
    const std::string_view key = tokens[0];
    if (key == "var") {
      if (tokens.size() != 1 + static_cast<std::size_t>(n)) {
        throw FormatError(ln, "expected " + std::to_string(n) +
                                  " variable names, found " +
                                  std::to_string(tokens.size() - 1));
      }
      var_names.assign(tokens.begin() + 1, tokens.end());
    } else if (key == "maxgen") {
      if (tokens.size() != 2) {
        throw FormatError(ln, "maxgen takes exactly one value");
      }
      const long long v = parse_integer(tokens[1], ln, "a generator cap");
      if (v < n) {
        throw FormatError(ln, "maxgen must be >= the dimension");
      }
      max_generators = static_cast<int>(v);
    } else if (key == "row") {
      if (rows_seen >= n) {
        throw FormatError(ln, "more than " + std::to_string(n) +
                                  " nominal rows");
      }
      if (tokens.size() != 1 + static_cast<std::size_t>(n)) {
        throw FormatError(ln, "expected " + std::to_string(n) +
                                  " entries in a nominal row, found " +
                                  std::to_string(tokens.size() - 1));
      }
      for (int j = 0; j < n; ++j) {
        nominal(rows_seen, j) = parse_number(tokens[1 + j], ln);
      }
      ++rows_seen;
    } else if (key == "unc") {
      if (tokens.size() != 5) {
        throw FormatError(ln, "unc takes exactly: row col lo hi");
      }
      const long long i = parse_integer(tokens[1], ln, "a row index");
      const long long j = parse_integer(tokens[2], ln, "a column index");
      if (i < 0 || i >= n || j < 0 || j >= n) {
        throw FormatError(ln, "uncertainty index out of range");
      }
      const double lo = parse_number(tokens[3], ln);
      const double hi = parse_number(tokens[4], ln);
      if (lo > hi) {
        throw FormatError(ln, "uncertainty interval has lo > hi");
      }
      for (const auto& e : uncertainty) {
        if (e.row == i && e.col == j) {
          throw FormatError(ln, "duplicate uncertainty entry for cell (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
        }
      }
      uncertainty.push_back(UncertaintyEntry{static_cast<int>(i),
                                             static_cast<int>(j), lo, hi});
    } else {
      throw FormatError(ln, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (rows_seen != n) {
    throw FormatError(last_line, "expected " + std::to_string(n) +
                                     " nominal rows, found " +
                                     std::to_string(rows_seen));
  }
  if (var_names.empty()) {
    for (int i = 0; i < n; ++i) var_names.push_back("x" + std::to_string(i + 1));
  }
  try {
    return ModelFile{UncertainLinearSystem(std::move(nominal),
                                           std::move(uncertainty)),
                     std::move(var_names), max_generators};
  } catch (const FormatError& e) {
    throw FormatError(last_line, e.what());
  }
}

std::string write_model(const ModelFile& mf) {
  const int n = mf.system.dim();
  std::string out = "#MMODEL v1 dim=" + std::to_string(n) + "\n";
  out += "var";
  for (const auto& name : mf.var_names) {
    out += ' ';
    out += name;
  }
  out += "\nmaxgen " + std::to_string(mf.max_generators) + "\n";
  for (int i = 0; i < n; ++i) {
    out += "row";
    for (int j = 0; j < n; ++j) {
      out += ' ';
      out += format_double(mf.system.nominal()(i, j));
    }
    out += '\n';
  }
  for (const auto& e : mf.system.uncertainty()) {
    out += "unc " + std::to_string(e.row) + ' ' + std::to_string(e.col) + ' ' +
           format_double(e.lo) + ' ' + format_double(e.hi) + '\n';
  }
  return out;
}

UnsafeSpec parse_unsafe(const std::string& text) {
  LineScanner scanner(text);
  const auto kv = parse_header(scanner, "#MUNSAFE");
  const int n = header_dim(kv, scanner.line());

  std::vector<UnsafeDisjunct> disjuncts;
  while (const auto line = scanner.next(/*skip_comments=*/true)) {
    const auto tokens = split_tokens(*line);
    const int ln = scanner.line();
    const std::string_view key = tokens[0];
    if (key == "halfspace") {
      if (tokens.size() != 2 + static_cast<std::size_t>(n)) {
        throw FormatError(ln, "expected " + std::to_string(n) +
                                  " normal entries plus an offset");
      }
      Eigen::VectorXd normal(n);
      for (int i = 0; i < n; ++i) normal(i) = parse_number(tokens[1 + i], ln);
      const double offset = parse_number(tokens[1 + n], ln);
      if (normal.isZero(0.0)) {
        throw FormatError(ln, "halfspace normal vector is zero");
      }
      disjuncts.emplace_back(Halfspace(std::move(normal), offset));
    } else if (key == "zonotope") {
      disjuncts.emplace_back(parse_zonotope_tokens(tokens, 1, n, ln));
    } else {
      throw FormatError(ln, "unknown disjunct kind '" + std::string(key) + "'");
    }
  }
  if (disjuncts.empty()) {
    throw FormatError(scanner.line(),
                      "unsafe specification needs at least one disjunct");
  }
  return UnsafeSpec(std::move(disjuncts));
}

std::string write_unsafe(const UnsafeSpec& u) {
  std::string out = "#MUNSAFE v1 dim=" + std::to_string(u.dim()) + "\n";
  for (const auto& d : u.disjuncts) {
    if (const auto* hs = std::get_if<Halfspace>(&d)) {
      out += "halfspace";
      for (int i = 0; i < hs->dim(); ++i) {
        out += ' ';
        out += format_double(hs->normal(i));
      }
      out += ' ';
      out += format_double(hs->offset);
      out += '\n';
    } else {
      out += "zonotope";
      append_zonotope_tokens(out, std::get<Zonotope>(d));
      out += '\n';
    }
  }
  return out;
}

std::vector<PlotRow> collect_plot_rows(const Verdict& verdict, int dim_index) {
  if (verdict.segments.empty()) return {};
  const int n = verdict.segments.front().sets.front().dim();
  if (dim_index < 0 || dim_index >= n) {
    throw DimensionError("plot dimension index out of range");
  }
  std::map<Timestep, PlotRow> rows;
  for (const auto& seg : verdict.segments) {
    for (std::size_t k = 0; k < seg.sets.size(); ++k) {
      const Timestep t = seg.start_time + static_cast<Timestep>(k);
      const IntervalBox hull = interval_hull(seg.sets[k]);
      // Later segments win at shared times: they are anchored on samples.
      auto [it, inserted] = rows.insert_or_assign(
          t, PlotRow{t, hull.lower(dim_index), hull.upper(dim_index),
                     std::nullopt, std::nullopt});
      (void)it;
      (void)inserted;
    }
  }
  for (const auto& seg : verdict.segments) {
    const IntervalBox hull = interval_hull(seg.sets.front());
    auto& row = rows.at(seg.start_time);
    row.sample_lower = hull.lower(dim_index);
    row.sample_upper = hull.upper(dim_index);
  }
  std::vector<PlotRow> out;
  out.reserve(rows.size());
  for (auto& [t, row] : rows) out.push_back(row);
  return out;
}

std::string export_plot_csv(const Verdict& verdict, int dim_index,
                            std::optional<double> unsafe_threshold) {
  std::string out =
      "t,reach_lower,reach_upper,sample_lower,sample_upper,unsafe_threshold\n";
  for (const auto& row : collect_plot_rows(verdict, dim_index)) {
    out += std::to_string(row.t);
    out += ',';
    out += format_double(row.reach_lower);
    out += ',';
    out += format_double(row.reach_upper);
    out += ',';
    if (row.sample_lower) out += format_double(*row.sample_lower);
    out += ',';
    if (row.sample_upper) out += format_double(*row.sample_upper);
    out += ',';
    if (unsafe_threshold) out += format_double(*unsafe_threshold);
    out += '\n';
  }
  return out;
}

namespace {

struct PlotExtent {
  double t_min, t_max, y_min, y_max;
};

std::string svg_coord(double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof(buf), "%.2f", v);
  return std::string(buf, buf + len);
}

}  // namespace

std::string export_plot_svg(const std::vector<PlotSeries>& series,
                            std::optional<double> unsafe_threshold) {
  PlotExtent ext{0.0, 1.0, 0.0, 1.0};
  bool first = true;
  for (const auto& s : series) {
    for (const auto& row : s.rows) {
      if (first) {
        ext = {static_cast<double>(row.t), static_cast<double>(row.t),
               row.reach_lower, row.reach_upper};
        first = false;
      }
      ext.t_min = std::min(ext.t_min, static_cast<double>(row.t));
      ext.t_max = std::max(ext.t_max, static_cast<double>(row.t));
      ext.y_min = std::min(ext.y_min, row.reach_lower);
      ext.y_max = std::max(ext.y_max, row.reach_upper);
    }
  }
  if (unsafe_threshold) {
    ext.y_min = std::min(ext.y_min, *unsafe_threshold);
    ext.y_max = std::max(ext.y_max, *unsafe_threshold);
  }
  if (ext.t_max - ext.t_min < 1.0) ext.t_max = ext.t_min + 1.0;
  if (ext.y_max - ext.y_min <= 0.0) ext.y_max = ext.y_min + 1.0;

  const double width = 800.0, height = 480.0, margin = 50.0;
  const auto sx = [&](double t) {
    return margin + (t - ext.t_min) / (ext.t_max - ext.t_min) *
                        (width - 2 * margin);
  };
  const auto sy = [&](double y) {
    return height - margin -
           (y - ext.y_min) / (ext.y_max - ext.y_min) * (height - 2 * margin);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"480\" viewBox=\"0 0 800 480\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"480\" fill=\"white\"/>\n";

  // Reach bands: upper envelope forward, lower envelope backward.
  for (const auto& s : series) {
    if (s.rows.empty()) continue;
    out += "<polygon fill=\"" + s.reach_color + "\" fill-opacity=\"0.45\" "
           "stroke=\"" + s.reach_color + "\" stroke-width=\"0.5\" points=\"";
    for (const auto& row : s.rows) {
      out += svg_coord(sx(static_cast<double>(row.t))) + ',' +
             svg_coord(sy(row.reach_upper)) + ' ';
    }
    for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) {
      out += svg_coord(sx(static_cast<double>(it->t))) + ',' +
             svg_coord(sy(it->reach_lower)) + ' ';
    }
    out += "\"/>\n";
  }

  // Sample marks.
  for (const auto& s : series) {
    for (const auto& row : s.rows) {
      if (!row.sample_lower) continue;
      const double half_w = 3.0;
      const double x = sx(static_cast<double>(row.t));
      const double y_top = sy(*row.sample_upper);
      const double y_bot = sy(*row.sample_lower);
      const double h = std::max(2.0, y_bot - y_top);
      out += "<rect x=\"" + svg_coord(x - half_w) + "\" y=\"" +
             svg_coord(y_top) + "\" width=\"" + svg_coord(2 * half_w) +
             "\" height=\"" + svg_coord(h) + "\" fill=\"" + s.sample_color +
             "\"/>\n";
    }
  }

  if (unsafe_threshold) {
    const double y = sy(*unsafe_threshold);
    out += "<line x1=\"" + svg_coord(margin) + "\" y1=\"" + svg_coord(y) +
           "\" x2=\"" + svg_coord(width - margin) + "\" y2=\"" + svg_coord(y) +
           "\" stroke=\"red\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
  }

  // Axes.
  out += "<line x1=\"" + svg_coord(margin) + "\" y1=\"" +
         svg_coord(height - margin) + "\" x2=\"" + svg_coord(width - margin) +
         "\" y2=\"" + svg_coord(height - margin) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + svg_coord(margin) + "\" y1=\"" + svg_coord(margin) +
         "\" x2=\"" + svg_coord(margin) + "\" y2=\"" +
         svg_coord(height - margin) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + svg_coord(width / 2) + "\" y=\"" +
         svg_coord(height - margin / 4) +
         "\" font-size=\"12\" text-anchor=\"middle\">t = " +
         format_double(ext.t_min) + " .. " + format_double(ext.t_max) +
         "</text>\n";
  out += "<text x=\"" + svg_coord(margin / 4) + "\" y=\"" +
         svg_coord(height / 2) +
         "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 " +
         svg_coord(margin / 4) + ' ' + svg_coord(height / 2) + ")\">" +
         format_double(ext.y_min) + " .. " + format_double(ext.y_max) +
         "</text>\n";
  out += "</svg>\n";
  return out;
}

std::string export_plot_svg(const Verdict& verdict, int dim_index,
                            std::optional<double> unsafe_threshold) {
  return export_plot_svg(
      {PlotSeries{collect_plot_rows(verdict, dim_index), "#1f77b4", "black"}},
      unsafe_threshold);
}

std::optional<double> unsafe_threshold_for_dim(const UnsafeSpec& u,
                                               int dim_index) {
  for (const auto& d : u.disjuncts) {
    const auto* hs = std::get_if<Halfspace>(&d);
    if (!hs) continue;
    bool aligned = hs->normal(dim_index) != 0.0;
    for (int i = 0; aligned && i < hs->dim(); ++i) {
      if (i != dim_index && hs->normal(i) != 0.0) aligned = false;
    }
    if (aligned) return hs->offset / hs->normal(dim_index);
  }
  return std::nullopt;
}

}  // namespace reachmon
