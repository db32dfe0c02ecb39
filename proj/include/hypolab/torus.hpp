#pragma once

// Translation actions on T^d: laplacian symbol, diophantine scanning,
// small-divisor solvers and tame-constant estimation. Frequencies are exact
// integers; resonance detection is exact whenever the generators are given
// as rationals, and near-zeros for irrational generators are only ever
// warnings.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypolab/errors.hpp"
#include "hypolab/fourier.hpp"
#include "hypolab/ratlinalg.hpp"
#include "hypolab/rng.hpp"

namespace hypolab::torus {

using fourier::Cplx;
using fourier::FourierSeries;
using fourier::Freq;

class TranslationAction {
 public:
  /// generators: d x k matrix, column j is X_j = rho(e_j).
  TranslationAction(int d, int k, std::vector<std::vector<double>> generators,
                    std::optional<RatMat> exact = std::nullopt)
      : d_(d), k_(k), gens_(std::move(generators)), exact_(std::move(exact)) {
    if (d < 1 || k < 1) throw std::invalid_argument("TranslationAction: need d, k >= 1");
    if (static_cast<int>(gens_.size()) != d)
      throw std::invalid_argument("TranslationAction: generator matrix must have d rows");
    for (const auto& row : gens_) {
      if (static_cast<int>(row.size()) != k)
        throw std::invalid_argument("TranslationAction: generator matrix must have k columns");
      for (double v : row)
        if (!std::isfinite(v)) throw std::invalid_argument("TranslationAction: non-finite entry");
    }
    if (exact_ && (exact_->size() != static_cast<std::size_t>(d) ||
                   (*exact_)[0].size() != static_cast<std::size_t>(k)))
      throw std::invalid_argument("TranslationAction: exact matrix shape mismatch");
  }

  int d() const { return d_; }
  int k() const { return k_; }
  const std::vector<std::vector<double>>& generators() const { return gens_; }
  bool has_exact() const { return exact_.has_value(); }
  const RatMat& exact() const { return *exact_; }

  /// X_j . n
  double dot(int j, const Freq& n) const {
    double s = 0;
    for (int i = 0; i < d_; ++i) s += gens_[i][j] * static_cast<double>(n[i]);
    return s;
  }

  /// rho(t) in R^d.
  std::vector<double> rho(const std::vector<double>& t) const {
    if (static_cast<int>(t.size()) != k_)
      throw std::invalid_argument("TranslationAction::rho: t dimension mismatch");
    std::vector<double> x(d_, 0.0);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < k_; ++j) x[i] += gens_[i][j] * t[j];
    return x;
  }

  /// sum_j |X_j . n|^2, exactly zero iff the exact test says so.
  double symbol_base(const Freq& n) const {
    double s = 0;
    for (int j = 0; j < k_; ++j) {
      double a = dot(j, n);
      s += a * a;
    }
    return s;
  }

  /// Exact vanishing of all X_j . n. Only decidable with rational data;
  /// otherwise falls back to exact-zero in double (no rounding involved
  /// for e.g. integer generators stored exactly).
  bool is_resonant(const Freq& n) const {
    if (exact_) {
      for (int j = 0; j < k_; ++j) {
        Rational a = 0;
        for (int i = 0; i < d_; ++i) a += (*exact_)[i][j] * Rational(BigInt(n[i]));
        if (a != 0) return false;
      }
      return true;
    }
    return symbol_base(n) == 0.0;
  }

 private:
  int d_, k_;
  std::vector<std::vector<double>> gens_;  // d rows, k columns
  std::optional<RatMat> exact_;
};

/// Delta_T e^{2 pi i n.x} = 4 pi^2 sum_j |X_j.n|^2 e^{2 pi i n.x}.
inline double laplacian_symbol(const TranslationAction& act, const Freq& n) {
  if (static_cast<int>(n.size()) != act.d())
    throw std::invalid_argument("laplacian_symbol: frequency dimension mismatch");
  return 4.0 * std::numbers::pi * std::numbers::pi * act.symbol_base(n);
}

// ---------------------------------------------------------------------------
// Diophantine scanning
// ---------------------------------------------------------------------------

struct DiophantineReport {
  double tau = 0;
  long long radius = 0;
  double k_hat = 0;                       // min over 0 < ||n||_inf <= N
  Freq argmin;
  std::vector<double> decay_table;        // decay_table[R-1] = K_hat(R), cumulative
  bool resonant = false;
  Freq resonance;
  std::vector<Freq> near_resonances;      // |X.n| below warning threshold, not exact zeros
  std::string verdict;
};

namespace detail {

/// Visits one representative of each pair {n, -n}, 0 < ||n||_inf <= N
/// (first nonzero coordinate positive). f(n, shell) with shell = ||n||_inf.
template <class F>
void scan_lattice(int d, long long N, F&& f) {
  Freq n(d, 0);
  auto rec = [&](auto&& self, int pos, bool still_zero, long long inf) -> void {
    if (pos == d) {
      if (!still_zero) f(n, inf);
      return;
    }
    long long lo = still_zero ? 0 : -N;
    for (long long v = lo; v <= N; ++v) {
      n[pos] = v;
      self(self, pos + 1, still_zero && v == 0, std::max(inf, std::llabs(v)));
    }
    n[pos] = 0;
  };
  rec(rec, 0, true, 0);
}

}  // namespace detail

/// Exhaustive finite diagnostic for sum_j |X_j.n|^2 >= K^2 / ||n||^{2 tau}:
/// K_hat(R) = min over 0 < ||n||_inf <= R of (sum_j |X_j.n|^2)^{1/2} ||n||_2^tau.
/// This is evidence at scale (tau, N), not a proof of the GH property.
inline DiophantineReport diophantine_scan(const TranslationAction& act, double tau, long long N) {
  if (N < 1) throw std::invalid_argument("diophantine_scan: radius must be >= 1");
  DiophantineReport rep;
  rep.tau = tau;
  rep.radius = N;
  std::vector<double> shell_min(static_cast<std::size_t>(N), std::numeric_limits<double>::infinity());
  double best = std::numeric_limits<double>::infinity();
  Freq best_n;
  std::vector<std::pair<double, Freq>> suspicious;  // near-zero base symbol
  detail::scan_lattice(act.d(), N, [&](const Freq& n, long long shell) {
    double base = std::sqrt(act.symbol_base(n));
    double norm2 = std::sqrt(fourier::freq_norm2_sq(n));
    double w = base * std::pow(norm2, tau);
    auto& cell = shell_min[static_cast<std::size_t>(shell - 1)];
    if (w < cell) cell = w;
    if (w < best) {
      best = w;
      best_n = n;
    }
    if (base <= 1e-14 * norm2) suspicious.emplace_back(base, n);
  });
  rep.k_hat = best;
  rep.argmin = best_n;
  rep.decay_table.resize(static_cast<std::size_t>(N));
  double run = std::numeric_limits<double>::infinity();
  for (long long R = 1; R <= N; ++R) {
    run = std::min(run, shell_min[static_cast<std::size_t>(R - 1)]);
    rep.decay_table[static_cast<std::size_t>(R - 1)] = run;
  }
  for (auto& [base, n] : suspicious) {
    if (act.is_resonant(n)) {
      if (!rep.resonant) {
        rep.resonant = true;
        rep.resonance = n;
      }
    } else {
      rep.near_resonances.push_back(n);
    }
  }
  if (rep.resonant) {
    rep.k_hat = 0;
    rep.verdict = "resonant";
  } else {
    long long R0 = std::min<long long>(10, N);
    double early = rep.decay_table[static_cast<std::size_t>(R0 - 1)];
    double late = rep.decay_table.back();
    if (late <= 0.1 * early)
      rep.verdict = "failing at tau";
    else
      rep.verdict = "diophantine-consistent";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Small-divisor solvers
// ---------------------------------------------------------------------------

struct SolveResult {
  FourierSeries u;
  Cplx obstruction{0, 0};  // v̂(0), the cokernel component dropped by the solver
};

/// û(n) = v̂(n) / (4 pi^2 sum |X_j.n|^2), û(0) = 0; Delta_T u = v - v̂(0).
inline SolveResult solve_laplacian(const TranslationAction& act, const FourierSeries& v) {
  if (v.d() != act.d()) throw std::invalid_argument("solve_laplacian: dimension mismatch");
  SolveResult res{FourierSeries(act.d()), Cplx(0, 0)};
  for (const auto& [n, c] : v.coeffs()) {
    if (fourier::freq_norm_inf(n) == 0) {
      res.obstruction = c;
      continue;
    }
    if (act.is_resonant(n))
      throw ResonanceError("resonant frequency in solve_laplacian", n);
    res.u.set_coeff(n, c / laplacian_symbol(act, n));
  }
  return res;
}

/// Forward operator: multiplication by the laplacian symbol.
inline FourierSeries apply_laplacian(const TranslationAction& act, const FourierSeries& u) {
  FourierSeries out(u.d());
  for (const auto& [n, c] : u.coeffs()) out.set_coeff(n, laplacian_symbol(act, n) * c);
  return out;
}

/// û(n) = v̂(n) / (2 pi i X_j.n); X_j u = v - v̂(0).
inline SolveResult solve_vectorfield(const TranslationAction& act, int j, const FourierSeries& v) {
  if (v.d() != act.d()) throw std::invalid_argument("solve_vectorfield: dimension mismatch");
  if (j < 0 || j >= act.k()) throw std::invalid_argument("solve_vectorfield: generator index");
  SolveResult res{FourierSeries(act.d()), Cplx(0, 0)};
  for (const auto& [n, c] : v.coeffs()) {
    if (fourier::freq_norm_inf(n) == 0) {
      res.obstruction = c;
      continue;
    }
    double a = act.dot(j, n);
    bool zero = a == 0.0;
    if (act.has_exact()) {
      Rational ex = 0;
      for (int i = 0; i < act.d(); ++i) ex += act.exact()[i][j] * Rational(BigInt(n[i]));
      zero = (ex == 0);
    }
    if (zero) throw ResonanceError("resonant frequency in solve_vectorfield", n);
    res.u.set_coeff(n, c / (Cplx(0, 2.0 * std::numbers::pi) * a));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Tame constant estimation
// ---------------------------------------------------------------------------

struct TameEstimate {
  double r0 = 0;            // derivative loss, = 2 tau
  double empirical_C = 0;   // max ||u||_r / ||v - v̂(0)||_{r + 2 tau}
  double analytic_bound = 0;  // 1 / (4 pi^2 K_hat^2)
  double k_hat = 0;
};

/// Empirical tame constant of the laplacian inverse over single-mode sweeps
/// plus random trigonometric polynomials supported in ||n||_inf <= N.
inline TameEstimate tame_constant_estimate(const TranslationAction& act, double tau, double r,
                                           int trials, long long N, std::uint64_t seed = 0) {
  DiophantineReport scan = diophantine_scan(act, tau, N);
  if (scan.resonant) throw ResonanceError("resonant action in tame_constant_estimate", scan.resonance);
  TameEstimate est;
  est.r0 = 2.0 * tau;
  est.k_hat = scan.k_hat;
  est.analytic_bound = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi * scan.k_hat * scan.k_hat);
  double worst = 0;
  auto ratio = [&](const FourierSeries& v) {
    SolveResult sol = solve_laplacian(act, v);
    FourierSeries rhs = v;
    rhs.add_coeff(Freq(act.d(), 0), -sol.obstruction);
    double denom = fourier::sobolev_norm(rhs, r + 2.0 * tau);
    if (denom == 0) return 0.0;  // v constant: convention ratio = 0
    return fourier::sobolev_norm(sol.u, r) / denom;
  };
  detail::scan_lattice(act.d(), N, [&](const Freq& n, long long) {
    worst = std::max(worst, ratio(FourierSeries::mode(n)));
  });
  CounterRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    FourierSeries v(act.d());
    for (int m = 0; m < 20; ++m) {
      Freq n(act.d());
      for (auto& e : n) e = rng.next_int(-N, N);
      if (fourier::freq_norm_inf(n) == 0) continue;
      v.add_coeff(n, Cplx(rng.next_sym(), rng.next_sym()));
    }
    worst = std::max(worst, ratio(v));
  }
  est.empirical_C = worst;
  return est;
}

// ---------------------------------------------------------------------------
// Named constructors (canonical diophantine / non-diophantine witnesses)
// ---------------------------------------------------------------------------

inline double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

/// X = (1, phi): badly approximable linear flow direction on T^2.
inline TranslationAction golden_action() {
  return TranslationAction(2, 1, {{1.0}, {golden_ratio()}});
}

/// k = 2 action on T^2 with X_1 = (1, 0), X_2 = (0, phi).
inline TranslationAction golden_2d_action() {
  return TranslationAction(2, 2, {{1.0, 0.0}, {0.0, golden_ratio()}});
}

/// k = 3 action on T^3: X_1 = (1,0,0), X_2 = (0,phi,0), X_3 = (0,0,sqrt 2).
inline TranslationAction golden_3d_action() {
  return TranslationAction(
      3, 3, {{1.0, 0.0, 0.0}, {0.0, golden_ratio(), 0.0}, {0.0, 0.0, std::sqrt(2.0)}});
}

/// X = (1, 1/2): exact resonance at n = (1, -2).
inline TranslationAction rational_half_action() {
  RatMat exact{{Rational(1)}, {Rational(1, 2)}};
  return TranslationAction(2, 1, {{1.0}, {0.5}}, exact);
}

/// X = (1, lambda), lambda = sum_{j<=4} 10^{-j!}: truncated Liouville number.
inline TranslationAction liouville4_action() {
  double lambda = 1e-1 + 1e-2 + 1e-6 + 1e-24;
  return TranslationAction(2, 1, {{1.0}, {lambda}});
}

}  // namespace hypolab::torus
