#pragma once

// The Heisenberg GH obstruction. In a Schrödinger representation the
// orbitwise laplacian acts as multiplication by 4 pi^2 (x_1^2+...+x_k^2),
// so non-surjectivity reduces to pointwise division and the value at 0.
// Also the necessary-condition checker for translation actions on
// Heisenberg nilmanifolds: center coverage plus a diophantine base scan.

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypolab/errors.hpp"
#include "hypolab/liealg.hpp"
#include "hypolab/ratlinalg.hpp"
#include "hypolab/torus.hpp"

namespace hypolab::heis {

struct SchrodingerModel {
  int g = 1;          // Heisenberg parameter: functions of g variables
  int k = 1;          // acting generators, k <= g after normalization
  double R = 6.0;     // grid domain [-R, R]^g
  double h = 0.05;    // resolution
  double tol = 1e-9;  // relative tolerance on v(0) for solvability

  SchrodingerModel(int g_, int k_, double R_ = 6.0, double h_ = 0.05, double tol_ = 1e-9)
      : g(g_), k(k_), R(R_), h(h_), tol(tol_) {
    if (g < 1 || k < 1 || k > g) throw std::invalid_argument("SchrodingerModel: need 1 <= k <= g");
    if (R <= 0 || h <= 0) throw std::invalid_argument("SchrodingerModel: need R, h > 0");
  }

  int points_per_axis() const { return 2 * static_cast<int>(std::llround(R / h)) + 1; }
  double axis_coord(int i) const { return -R + h * i; }
  int origin_index() const { return static_cast<int>(std::llround(R / h)); }
};

/// 4 pi^2 (x_1^2 + ... + x_k^2) — only the first k coordinates enter.
inline double multiplication_symbol(const SchrodingerModel& model, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != model.g)
    throw std::invalid_argument("multiplication_symbol: point dimension mismatch");
  double s = 0;
  for (int i = 0; i < model.k; ++i) s += x[i] * x[i];
  return 4.0 * std::numbers::pi * std::numbers::pi * s;
}

/// Real-valued function sampled on the model grid, stored flat in row-major
/// order over the g axes.
struct GridFunction {
  int g = 1;
  int m = 0;  // points per axis
  std::vector<double> values;

  explicit GridFunction(const SchrodingerModel& model)
      : g(model.g), m(model.points_per_axis()),
        values(static_cast<std::size_t>(std::pow(m, model.g)), 0.0) {}

  std::size_t flat(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (int a = 0; a < g; ++a) f = f * static_cast<std::size_t>(m) + static_cast<std::size_t>(idx[a]);
    return f;
  }

  double& at(const std::vector<int>& idx) { return values[flat(idx)]; }
  double at(const std::vector<int>& idx) const { return values[flat(idx)]; }

  double max_abs() const {
    double v = 0;
    for (double x : values) v = std::max(v, std::abs(x));
    return v;
  }
};

/// Samples f on the grid.
inline GridFunction sample(const SchrodingerModel& model,
                           const std::function<double(const std::vector<double>&)>& f) {
  GridFunction out(model);
  std::vector<int> idx(model.g, 0);
  std::vector<double> x(model.g, 0.0);
  std::function<void(int)> go = [&](int axis) {
    if (axis == model.g) {
      out.at(idx) = f(x);
      return;
    }
    for (int i = 0; i < out.m; ++i) {
      idx[axis] = i;
      x[axis] = model.axis_coord(i);
      go(axis + 1);
    }
  };
  go(0);
  return out;
}

struct MultiplicationSolve {
  bool obstructed = false;
  double witness_v0 = 0;   // v(0), the certificate that v is not in the image
  GridFunction u;          // defined only when not obstructed
  double residual = 0;     // max relative error of symbol * u vs v outside |x_(k)| < 3h
  int filled_points = 0;   // near-singular points filled by quadratic extrapolation

  explicit MultiplicationSolve(const SchrodingerModel& model) : u(model) {}
};

/// Divide by the multiplication symbol when v(0) vanishes (to tolerance);
/// otherwise return the obstruction witness v(0) != 0 certifying
/// v not in Im(Delta_alpha) in this representation. The removable
/// singularity along {x_1 = ... = x_k = 0} is filled by a quadratic fit
/// along the x_1 axis; accuracy is only claimed outside the 3h-ball.
inline MultiplicationSolve attempt_solve_multiplication(const SchrodingerModel& model,
                                                        const GridFunction& v) {
  MultiplicationSolve res(model);
  std::vector<int> origin(model.g, model.origin_index());
  double v0 = v.at(origin);
  double vmax = v.max_abs();
  if (vmax == 0) return res;  // v = 0 -> u = 0
  if (std::abs(v0) > model.tol * vmax) {
    res.obstructed = true;
    res.witness_v0 = v0;
    return res;
  }
  double cut = 3.0 * model.h;
  std::vector<int> idx(model.g, 0);
  std::vector<double> x(model.g, 0.0);
  std::function<void(int)> go = [&](int axis) {
    if (axis == model.g) {
      double rk2 = 0;
      for (int i = 0; i < model.k; ++i) rk2 += x[i] * x[i];
      if (rk2 >= cut * cut) {
        double s = 4.0 * std::numbers::pi * std::numbers::pi * rk2;
        res.u.at(idx) = v.at(idx) / s;
      }
      return;
    }
    for (int i = 0; i < res.u.m; ++i) {
      idx[axis] = i;
      x[axis] = model.axis_coord(i);
      go(axis + 1);
    }
  };
  go(0);
  // fill the near-singular tube by quadratic extrapolation along x_1
  int steps = static_cast<int>(std::ceil(cut / model.h)) + 1;
  std::function<void(int)> fill = [&](int axis) {
    if (axis == model.g) {
      double rk2 = 0;
      for (int i = 0; i < model.k; ++i) rk2 += x[i] * x[i];
      if (rk2 < cut * cut) {
        std::vector<int> probe = idx;
        int base = idx[0] + steps;
        if (base + 2 >= res.u.m) base = idx[0] - steps - 2;
        // values at offsets 0, 1, 2 from base; extrapolate back to idx[0]
        probe[0] = base;
        double f0 = res.u.at(probe);
        probe[0] = base + 1;
        double f1 = res.u.at(probe);
        probe[0] = base + 2;
        double f2 = res.u.at(probe);
        double a = static_cast<double>(idx[0] - base);
        // quadratic through (0,f0),(1,f1),(2,f2) evaluated at a
        double val = f0 + a * (f1 - f0) + 0.5 * a * (a - 1.0) * (f2 - 2.0 * f1 + f0);
        res.u.at(idx) = val;
        ++res.filled_points;
      }
      return;
    }
    for (int i = 0; i < res.u.m; ++i) {
      idx[axis] = i;
      x[axis] = model.axis_coord(i);
      fill(axis + 1);
    }
  };
  fill(0);
  // residual check outside the tube
  double worst = 0;
  std::function<void(int)> check = [&](int axis) {
    if (axis == model.g) {
      double rk2 = 0;
      for (int i = 0; i < model.k; ++i) rk2 += x[i] * x[i];
      if (rk2 >= cut * cut) {
        double s = 4.0 * std::numbers::pi * std::numbers::pi * rk2;
        worst = std::max(worst, std::abs(s * res.u.at(idx) - v.at(idx)) / vmax);
      }
      return;
    }
    for (int i = 0; i < res.u.m; ++i) {
      idx[axis] = i;
      x[axis] = model.axis_coord(i);
      check(axis + 1);
    }
  };
  check(0);
  res.residual = worst;
  return res;
}

// ---------------------------------------------------------------------------
// Necessary conditions for GH translation actions on Heisenberg nilmanifolds
// ---------------------------------------------------------------------------

/// k generators of an abelian subalgebra of h^g, rows in the basis
/// X_1..X_g, Y_1..Y_g, Z. Double entries; exact rationals optional for
/// file-loaded data.
struct HeisenbergAction {
  int g = 1;
  std::vector<std::vector<double>> generators;  // k rows of length 2g+1

  HeisenbergAction(int g_, std::vector<std::vector<double>> gens)
      : g(g_), generators(std::move(gens)) {
    if (g < 1) throw std::invalid_argument("HeisenbergAction: g >= 1 required");
    if (generators.empty()) throw std::invalid_argument("HeisenbergAction: need k >= 1 generators");
    for (const auto& row : generators)
      if (static_cast<int>(row.size()) != 2 * g + 1)
        throw std::invalid_argument("HeisenbergAction: generator length must be 2g+1");
  }

  int k() const { return static_cast<int>(generators.size()); }

  /// [u, v] = (sum_i u_{X_i} v_{Y_i} - u_{Y_i} v_{X_i}) Z in h^g.
  double bracket_z(const std::vector<double>& u, const std::vector<double>& v) const {
    double s = 0;
    for (int i = 0; i < g; ++i) s += u[i] * v[g + i] - u[g + i] * v[i];
    return s;
  }
};

struct GhCheckReport {
  bool abelian_ok = true;
  bool independent_ok = true;
  bool center_ok = false;     // Z-direction inside span(rho)?
  int base_span_dim = 0;      // dim of the projection to h^g/[h^g,h^g]
  std::vector<std::vector<double>> base_basis;  // normalized spanning set of the base projection
  torus::DiophantineReport base_scan;
  std::string verdict;
};

namespace detail {

/// Rank and row basis of a double matrix by Gaussian elimination with a
/// relative pivot tolerance.
inline std::vector<std::vector<double>> double_row_basis(std::vector<std::vector<double>> m,
                                                         double tol = 1e-9) {
  std::vector<std::vector<double>> basis;
  for (auto& row : m) {
    for (const auto& b : basis) {
      int piv = 0;
      while (std::abs(b[piv]) < tol) ++piv;
      double f = row[piv] / b[piv];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * b[j];
    }
    double mx = 0;
    for (double v : row) mx = std::max(mx, std::abs(v));
    if (mx > tol) {
      for (auto& v : row) v /= mx;
      basis.push_back(row);
    }
  }
  return basis;
}

inline bool double_in_span(const std::vector<std::vector<double>>& basis, std::vector<double> v,
                           double tol = 1e-9) {
  auto b2 = basis;
  b2.push_back(std::move(v));
  return double_row_basis(std::move(b2), tol).size() == basis.size();
}

}  // namespace detail

/// The Lemma's necessary conditions: (a) Im(rho) must contain the center
/// direction Z; (b) the projected action on the base torus T^{2g} must look
/// diophantine at (tau, N). Explicitly not a sufficiency claim.
inline GhCheckReport heisenberg_gh_check(const HeisenbergAction& act, double tau, long long N) {
  GhCheckReport rep;
  int g = act.g, k = act.k();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::abs(act.bracket_z(act.generators[i], act.generators[j])) > 1e-9)
        rep.abelian_ok = false;
  auto span_basis = detail::double_row_basis(act.generators);
  rep.independent_ok = static_cast<int>(span_basis.size()) == k;
  std::vector<double> z_dir(2 * g + 1, 0.0);
  z_dir[2 * g] = 1.0;
  rep.center_ok = detail::double_in_span(span_basis, z_dir);
  // base projection: drop the Z coordinate
  std::vector<std::vector<double>> base;
  for (const auto& row : act.generators)
    base.emplace_back(row.begin(), row.begin() + 2 * g);
  rep.base_basis = detail::double_row_basis(base);
  rep.base_span_dim = static_cast<int>(rep.base_basis.size());
  // the WLOG normalization: the span basis plays the role of X_1..X_m
  // spanning Im(D rho) on the base
  std::vector<std::vector<double>> gen_matrix(2 * g, std::vector<double>(k, 0.0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < 2 * g; ++i) gen_matrix[i][j] = base[j][i];
  rep.base_scan = torus::diophantine_scan(torus::TranslationAction(2 * g, k, gen_matrix), tau, N);
  bool base_ok = !rep.base_scan.resonant && rep.base_scan.verdict == "diophantine-consistent";
  if (!rep.abelian_ok || !rep.independent_ok || !rep.center_ok || !base_ok)
    rep.verdict = "fails GH necessary conditions";
  else
    rep.verdict = "passes necessary conditions at (tau, N)";
  return rep;
}

}  // namespace hypolab::heis
