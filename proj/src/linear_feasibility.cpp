#include "reachmon/linear_feasibility.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "reachmon/errors.hpp"

namespace reachmon {

namespace {

// Dense two-phase simplex in the compact dictionary layout (KACTL scheme).
// Pivot selection orders candidates by (value, variable id), which gives
// Bland-style tie-breaking. A pivot budget turns cycling or severe
// ill-conditioning into an explicit NumericError.
class SimplexTableau {
 public:
  SimplexTableau(const std::vector<std::vector<double>>& a,
                 const std::vector<double>& b, const std::vector<double>& c,
                 double eps)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        eps_(eps),
        nonbasic_(n_ + 1),
        basic_(m_),
        d_(m_ + 2, std::vector<double>(n_ + 2, 0.0)),
        budget_(20000 + 200 * (m_ + n_)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = -1.0;
      d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;  // phase-1 auxiliary variable
    d_[m_ + 1][n_] = 1.0;
  }

  LpResult solve() {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (d_[r][n_ + 1] < -eps_) {
      pivot(r, n_);
      if (!run_phase(2) || d_[m_ + 1][n_ + 1] < -eps_) {
        return {LpStatus::kInfeasible, -kInf, {}};
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j) {
          if (better(d_[i][j], nonbasic_[j], d_[i][s], nonbasic_[s])) s = j;
        }
        pivot(i, s);
      }
    }
    const bool bounded = run_phase(1);
    if (!bounded) return {LpStatus::kUnbounded, kInf, {}};
    std::vector<double> x(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) x[basic_[i]] = d_[i][n_ + 1];
    }
    return {LpStatus::kOptimal, d_[m_][n_ + 1], std::move(x)};
  }

 private:
  static bool better(double va, int ia, double vb, int ib) {
    return std::pair(va, ia) < std::pair(vb, ib);
  }

  void pivot(int r, int s) {
    if (--budget_ < 0) {
      throw NumericError("simplex pivot budget exhausted");
    }
    std::vector<double>& a = d_[r];
    const double inv = 1.0 / a[s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::fabs(d_[i][s]) <= eps_) continue;
      std::vector<double>& row = d_[i];
      const double inv2 = row[s] * inv;
      for (int j = 0; j < n_ + 2; ++j) row[j] -= a[j] * inv2;
      row[s] = a[s] * inv2;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) a[j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_[i][s] *= -inv;
    }
    a[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Returns false when the phase objective is unbounded.
  bool run_phase(int phase) {
    const int obj = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (s == -1 ||
            better(d_[obj][j], nonbasic_[j], d_[obj][s], nonbasic_[s])) {
          s = j;
        }
      }
      if (d_[obj][s] >= -eps_) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= eps_) continue;
        if (r == -1 || better(d_[i][n_ + 1] / d_[i][s], basic_[i],
                              d_[r][n_ + 1] / d_[r][s], basic_[r])) {
          r = i;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  double eps_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> d_;
  long budget_;
};

}  // namespace

LpResult solve_lp(const std::vector<std::vector<double>>& a,
                  const std::vector<double>& b, const std::vector<double>& c,
                  double eps) {
  if (b.empty()) {
    // No constraints: feasible at the origin; unbounded iff any c_j > 0.
    for (double cj : c) {
      if (cj > eps) {
        return {LpStatus::kUnbounded, std::numeric_limits<double>::infinity(), {}};
      }
    }
    return {LpStatus::kOptimal, 0.0, std::vector<double>(c.size(), 0.0)};
  }
  if (c.empty()) {
    // No variables: feasible iff every right-hand side admits zero.
    for (double bi : b) {
      if (bi < -eps) {
        return {LpStatus::kInfeasible,
                -std::numeric_limits<double>::infinity(),
                {}};
      }
    }
    return {LpStatus::kOptimal, 0.0, {}};
  }
  return SimplexTableau(a, b, c, eps).solve();
}

bool box_equality_feasible(const Eigen::MatrixXd& m, const Eigen::VectorXd& d,
                           double eps) {
  const int rows = static_cast<int>(m.rows());
  const int vars = static_cast<int>(m.cols());
  if (rows != d.size()) {
    throw DimensionError("box_equality_feasible: rows of M and d disagree");
  }
  if (vars == 0) {
    return d.lpNorm<Eigen::Infinity>() <= eps;
  }

  // Substitute y = xi + 1, y in [0, 2]: M y = d + M 1. Each equality is
  // split into a <= pair; the upper bounds y_j <= 2 become rows.
  const Eigen::VectorXd e = d + m.rowwise().sum();
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(2 * rows + vars);
  b.reserve(2 * rows + vars);
  for (int i = 0; i < rows; ++i) {
    std::vector<double> pos(vars), neg(vars);
    for (int j = 0; j < vars; ++j) {
      pos[j] = m(i, j);
      neg[j] = -m(i, j);
    }
    a.push_back(std::move(pos));
    b.push_back(e(i));
    a.push_back(std::move(neg));
    b.push_back(-e(i));
  }
  for (int j = 0; j < vars; ++j) {
    std::vector<double> row(vars, 0.0);
    row[j] = 1.0;
    a.push_back(std::move(row));
    b.push_back(2.0);
  }

  const std::vector<double> zero_objective(vars, 0.0);
  const LpResult res = solve_lp(a, b, zero_objective, eps);
  if (res.status == LpStatus::kUnbounded) {
    throw NumericError("feasibility LP reported unbounded for zero objective");
  }
  return res.status == LpStatus::kOptimal;
}

}  // namespace reachmon
