#pragma once

// The dynamical cochain complex C^l(alpha) over a torus translation action,
// realized on truncated Fourier series: differential, codifferential (with
// the minus sign that adjointness forces), diagonal laplacian, Hodge
// decomposition, tame inverse and the cocycle-integration maps S and T.
// All operators are frequency-diagonal, so truncation is exact.

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hypolab/errors.hpp"
#include "hypolab/exterior.hpp"
#include "hypolab/fourier.hpp"
#include "hypolab/rng.hpp"
#include "hypolab/torus.hpp"

namespace hypolab::dyncoh {

using exterior::ExtVector;
using exterior::MultiIndex;
using fourier::Cplx;
using fourier::FourierSeries;
using fourier::Freq;
using torus::TranslationAction;

class Cochain {
 public:
  Cochain(TranslationAction action, int degree)
      : action_(std::move(action)), degree_(degree) {
    if (degree < 0 || degree > action_.k()) throw std::invalid_argument("Cochain: bad degree");
  }

  const TranslationAction& action() const { return action_; }
  int k() const { return action_.k(); }
  int degree() const { return degree_; }
  const std::map<MultiIndex, FourierSeries>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  FourierSeries component(const MultiIndex& I) const {
    auto it = comps_.find(I);
    return it == comps_.end() ? FourierSeries(action_.d()) : it->second;
  }

  void set_component(const MultiIndex& I, FourierSeries u) {
    if (I.k != k() || I.degree() != degree_)
      throw std::invalid_argument("Cochain::set_component: index shape mismatch");
    if (u.d() != action_.d())
      throw std::invalid_argument("Cochain::set_component: series dimension mismatch");
    if (u.is_zero())
      comps_.erase(I);
    else
      comps_[I] = std::move(u);
  }

  void add_component(const MultiIndex& I, const FourierSeries& u) {
    set_component(I, component(I) + u);
  }

  Cochain& operator+=(const Cochain& o) {
    check(o);
    for (const auto& [I, u] : o.comps_) add_component(I, u);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check(o);
    for (const auto& [I, u] : o.comps_) add_component(I, Cplx(-1, 0) * u);
    return *this;
  }
  Cochain& operator*=(Cplx s) {
    std::map<MultiIndex, FourierSeries> out;
    if (s != Cplx(0, 0))
      for (auto& [I, u] : comps_) out.emplace(I, s * u);
    comps_ = std::move(out);
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(Cplx s, Cochain c) { return c *= s; }

  long long support_radius_inf() const {
    long long r = 0;
    for (const auto& [I, u] : comps_) r = std::max(r, u.support_radius_inf());
    return r;
  }

 private:
  void check(const Cochain& o) const {
    if (o.k() != k() || o.degree_ != degree_ || o.action_.d() != action_.d())
      throw std::invalid_argument("Cochain: shape mismatch");
  }

  TranslationAction action_;
  int degree_;
  std::map<MultiIndex, FourierSeries> comps_;
};

/// <omega, eta>_l = sum_I <u_I, v_I> (Plancherel / Haar pairing).
inline Cplx inner_product(const Cochain& a, const Cochain& b) {
  if (a.k() != b.k() || a.degree() != b.degree())
    throw std::invalid_argument("inner_product: cochain shape mismatch");
  Cplx acc(0, 0);
  for (const auto& [I, u] : a.components()) acc += fourier::inner_product(u, b.component(I));
  return acc;
}

inline double sobolev_norm(const Cochain& c, double s) {
  double acc = 0;
  for (const auto& [I, u] : c.components()) {
    double n = fourier::sobolev_norm(u, s);
    acc += n * n;
  }
  return std::sqrt(acc);
}

/// Derivative along X_j: the Fourier multiplier 2 pi i (X_j . n).
inline FourierSeries generator_derivative(const TranslationAction& act, int j,
                                          const FourierSeries& u) {
  FourierSeries out(u.d());
  for (const auto& [n, c] : u.coeffs())
    out.set_coeff(n, Cplx(0, 2.0 * std::numbers::pi * act.dot(j, n)) * c);
  return out;
}

/// d(u e^I) = sum_j e_j u . e^j ^ e^I.
inline Cochain differential(const Cochain& omega) {
  if (omega.degree() >= omega.k()) throw std::invalid_argument("differential: degree overflow");
  Cochain out(omega.action(), omega.degree() + 1);
  for (const auto& [I, u] : omega.components())
    for (int j = 1; j <= omega.k(); ++j) {
      exterior::SignedIndex s = exterior::wedge_basis(j, I);
      if (s.zero) continue;
      out.add_component(s.index, Cplx(s.sign, 0) * generator_derivative(omega.action(), j - 1, u));
    }
  return out;
}

/// d*(v e^J) = -sum_j e_j v . iota_j(e^J): the proof's sign, which
/// adjointness <d omega, eta> = <omega, d* eta> pins down.
inline Cochain codifferential(const Cochain& omega) {
  if (omega.degree() < 1) throw std::invalid_argument("codifferential: degree underflow");
  Cochain out(omega.action(), omega.degree() - 1);
  for (const auto& [J, v] : omega.components())
    for (int j = 1; j <= omega.k(); ++j) {
      exterior::SignedIndex s = exterior::contract_basis(j, J);
      if (s.zero) continue;
      out.add_component(s.index, Cplx(-s.sign, 0) * generator_derivative(omega.action(), j - 1, v));
    }
  return out;
}

/// d* d + d d* via the compositions (no diagonal shortcut).
inline Cochain cochain_laplacian(const Cochain& omega) {
  Cochain acc(omega.action(), omega.degree());
  if (omega.degree() < omega.k()) acc += codifferential(differential(omega));
  if (omega.degree() > 0) acc += differential(codifferential(omega));
  return acc;
}

/// The diagonal formula Delta_{alpha,l}(u e^I) = Delta_alpha u . e^I.
inline Cochain diagonal_laplacian(const Cochain& omega) {
  Cochain out(omega.action(), omega.degree());
  for (const auto& [I, u] : omega.components()) {
    FourierSeries w(u.d());
    for (const auto& [n, c] : u.coeffs())
      w.set_coeff(n, torus::laplacian_symbol(omega.action(), n) * c);
    out.set_component(I, std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hodge theory
// ---------------------------------------------------------------------------

struct HodgeParts {
  Cochain exact;              // in Im d^{l-1}
  Cochain coexact;            // in Im d^{l,*}
  ExtVector<Cplx> harmonic;   // the constant (n = 0) part, in Lambda^l(R^k)

  Cochain harmonic_cochain(const TranslationAction& act) const {
    Cochain h(act, harmonic.degree());
    for (const auto& [I, c] : harmonic.coeffs())
      h.set_component(I, FourierSeries::constant(act.d(), c));
    return h;
  }
};

/// Inverts the laplacian mode-by-mode away from n = 0.
inline Cochain diagonal_inverse(const Cochain& omega) {
  Cochain out(omega.action(), omega.degree());
  for (const auto& [I, u] : omega.components()) {
    FourierSeries w(u.d());
    for (const auto& [n, c] : u.coeffs()) {
      if (fourier::freq_norm_inf(n) == 0)
        throw ResonanceError("diagonal_inverse: zero frequency present", n);
      if (omega.action().is_resonant(n))
        throw ResonanceError("diagonal_inverse: resonant frequency", n);
      w.set_coeff(n, c / torus::laplacian_symbol(omega.action(), n));
    }
    out.set_component(I, std::move(w));
  }
  return out;
}

/// C^l(alpha) = Im d^{l-1} (+) Im d^{l,*} (+) Lambda^l(R^k).
inline HodgeParts hodge_decompose(const Cochain& omega) {
  const TranslationAction& act = omega.action();
  ExtVector<Cplx> harm(omega.k(), omega.degree());
  Cochain rest(act, omega.degree());
  Freq zero(act.d(), 0);
  for (const auto& [I, u] : omega.components()) {
    Cplx c0 = u.coeff(zero);
    if (c0 != Cplx(0, 0)) harm.add(I, c0);
    FourierSeries v = u;
    v.set_coeff(zero, Cplx(0, 0));
    rest.set_component(I, std::move(v));
  }
  Cochain eta = diagonal_inverse(rest);
  HodgeParts parts{Cochain(act, omega.degree()), Cochain(act, omega.degree()), harm};
  if (omega.degree() > 0) parts.exact = differential(codifferential(eta));
  if (omega.degree() < omega.k()) parts.coexact = codifferential(differential(eta));
  return parts;
}

struct TameInverseResult {
  Cochain delta_omega;
  double tame_ratio = 0;  // ||delta omega||_r / ||omega||_{r + 2 tau}
};

/// delta omega = d* Delta^{-1} omega for omega in Im d; d(delta omega) = omega.
inline TameInverseResult tame_inverse_delta(const Cochain& omega, double tau = 1.0, double r = 0.0,
                                            double tol = 1e-10) {
  HodgeParts parts = hodge_decompose(omega);
  double scale = 1.0 + sobolev_norm(omega, 0);
  double harm_norm = 0;
  for (const auto& [I, c] : parts.harmonic.coeffs()) harm_norm += std::norm(c);
  if (std::sqrt(harm_norm) > tol * scale)
    throw NotExactError("tame_inverse_delta: nonzero harmonic part obstructs exactness");
  if (sobolev_norm(parts.coexact, 0) > tol * scale)
    throw NotExactError("tame_inverse_delta: nonzero coexact part, input is not exact");
  Cochain delta = codifferential(diagonal_inverse(omega));
  TameInverseResult res{delta, 0};
  double denom = sobolev_norm(omega, r + 2.0 * tau);
  if (denom > 0) res.tame_ratio = sobolev_norm(delta, r) / denom;
  return res;
}

// ---------------------------------------------------------------------------
// Cocycle integration (the maps S and T)
// ---------------------------------------------------------------------------

namespace detail {

/// phi(z) = (e^{iz} - 1)/(iz), phi(0) = 1; Taylor fallback near the
/// removable singularity.
inline Cplx segment_factor(double z) {
  if (std::abs(z) < 1e-8) {
    Cplx iz(0, z);
    return Cplx(1, 0) + iz / 2.0 + iz * iz / 6.0;
  }
  Cplx iz(0, z);
  return (std::exp(iz) - Cplx(1, 0)) / iz;
}

}  // namespace detail

/// Residual of closedness, ||d omega||_0.
inline double closedness_residual(const Cochain& omega) {
  if (omega.degree() >= omega.k()) return 0.0;
  return sobolev_norm(differential(omega), 0);
}

/// S(omega)(t, .) as a trigonometric polynomial in x:
/// beta(t, x) = int_0^1 omega(t)(x + s rho(t)) ds, evaluated per mode.
inline FourierSeries cocycle_series(const Cochain& omega, const std::vector<double>& t) {
  if (omega.degree() != 1) throw std::invalid_argument("cocycle_series: degree-1 cochain required");
  if (static_cast<int>(t.size()) != omega.k())
    throw std::invalid_argument("cocycle_series: t dimension mismatch");
  if (closedness_residual(omega) > 1e-10 * (1.0 + sobolev_norm(omega, 0)))
    throw NotClosedError("cocycle_series: input cochain is not closed");
  const TranslationAction& act = omega.action();
  std::vector<double> rho_t = act.rho(t);
  FourierSeries beta(act.d());
  for (const auto& [I, u] : omega.components()) {
    double tj = t[I.indices[0] - 1];
    if (tj == 0) continue;
    for (const auto& [n, c] : u.coeffs()) {
      double z = 0;
      for (int i = 0; i < act.d(); ++i) z += rho_t[i] * static_cast<double>(n[i]);
      beta.add_coeff(n, tj * c * detail::segment_factor(2.0 * std::numbers::pi * z));
    }
  }
  return beta;
}

/// S(omega)(t, x) — the C-valued cocycle over the action.
inline Cplx cocycle_from_form(const Cochain& omega, const std::vector<double>& t,
                              const std::vector<double>& x) {
  return cocycle_series(omega, t).evaluate(x);
}

/// T: differentiates a cocycle sampler t -> beta(tX, .) at t = 0 by
/// central differences with one Richardson level, recovering omega(X).
/// The sampler returns the series in x for a given group element.
inline FourierSeries form_from_cocycle(
    const std::function<FourierSeries(const std::vector<double>&)>& sampler,
    const std::vector<double>& X, double h = 5e-4, double disagree_tol = 1e-4) {
  auto diff_at = [&](double step) {
    std::vector<double> tp(X.size()), tm(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
      tp[i] = step * X[i];
      tm[i] = -step * X[i];
    }
    FourierSeries num = sampler(tp) - sampler(tm);
    return Cplx(1.0 / (2.0 * step), 0) * num;
  };
  FourierSeries d1 = diff_at(h);
  FourierSeries d2 = diff_at(h / 2.0);
  // Richardson: (4 D(h/2) - D(h)) / 3 kills the O(h^2) term
  FourierSeries extrap = Cplx(4.0 / 3.0, 0) * d2 - Cplx(1.0 / 3.0, 0) * d1;
  double disagreement = fourier::sobolev_norm(d2 - d1, 0);
  double scale = 1.0 + fourier::sobolev_norm(extrap, 0);
  if (disagreement > disagree_tol * scale)
    throw MathObstruction("form_from_cocycle: sampler not differentiable at 0");
  return extrap;
}

/// omega(X) = sum_j X_j omega_j evaluated directly (the exact answer T
/// should reproduce).
inline FourierSeries evaluate_on_vector(const Cochain& omega, const std::vector<double>& X) {
  if (omega.degree() != 1) throw std::invalid_argument("evaluate_on_vector: degree-1 required");
  FourierSeries acc(omega.action().d());
  for (const auto& [I, u] : omega.components()) acc += Cplx(X[I.indices[0] - 1], 0) * u;
  return acc;
}

// ---------------------------------------------------------------------------
// Random data for property tests
// ---------------------------------------------------------------------------

inline FourierSeries random_series(int d, long long radius, int modes, CounterRng& rng) {
  FourierSeries u(d);
  for (int m = 0; m < modes; ++m) {
    Freq n(d);
    for (auto& e : n) e = rng.next_int(-radius, radius);
    u.add_coeff(n, Cplx(rng.next_sym(), rng.next_sym()));
  }
  return u;
}

inline Cochain random_cochain(const TranslationAction& act, int degree, long long radius,
                              int modes, CounterRng& rng) {
  Cochain c(act, degree);
  for (const MultiIndex& I : exterior::all_indices(act.k(), degree))
    c.add_component(I, random_series(act.d(), radius, modes, rng));
  return c;
}

/// d psi + constant covector: a closed degree-(l) cochain with prescribed
/// harmonic part.
inline Cochain random_closed_cochain(const TranslationAction& act, int degree, long long radius,
                                     int modes, CounterRng& rng) {
  if (degree < 1) throw std::invalid_argument("random_closed_cochain: degree >= 1 required");
  Cochain psi = random_cochain(act, degree - 1, radius, modes, rng);
  Cochain omega = differential(psi);
  for (const MultiIndex& I : exterior::all_indices(act.k(), degree))
    omega.add_component(I, FourierSeries::constant(act.d(), Cplx(rng.next_sym(), rng.next_sym())));
  return omega;
}

}  // namespace hypolab::dyncoh
