#pragma once

// Finitely supported Fourier series on T^d: exact integer frequencies,
// complex double coefficients, Plancherel pairing and Sobolev norms.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hypolab::fourier {

using Freq = std::vector<long long>;
using Cplx = std::complex<double>;

inline double freq_norm2_sq(const Freq& n) {
  double s = 0;
  for (long long v : n) s += static_cast<double>(v) * static_cast<double>(v);
  return s;
}

inline long long freq_norm_inf(const Freq& n) {
  long long m = 0;
  for (long long v : n) m = std::max(m, std::llabs(v));
  return m;
}

class FourierSeries {
 public:
  FourierSeries() = default;
  explicit FourierSeries(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("FourierSeries: d must be >= 1");
  }

  static FourierSeries constant(int d, Cplx c) {
    FourierSeries f(d);
    f.set_coeff(Freq(d, 0), c);
    return f;
  }

  static FourierSeries mode(Freq n, Cplx c = Cplx(1, 0)) {
    FourierSeries f(static_cast<int>(n.size()));
    f.set_coeff(std::move(n), c);
    return f;
  }

  int d() const { return d_; }
  const std::map<Freq, Cplx>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Cplx coeff(const Freq& n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Cplx(0, 0) : it->second;
  }

  void set_coeff(Freq n, Cplx c) {
    if (static_cast<int>(n.size()) != d_)
      throw std::invalid_argument("FourierSeries: frequency dimension mismatch");
    if (c == Cplx(0, 0))
      coeffs_.erase(n);
    else
      coeffs_[std::move(n)] = c;
  }

  void add_coeff(const Freq& n, Cplx c) { set_coeff(n, coeff(n) + c); }

  FourierSeries& operator+=(const FourierSeries& o) {
    check(o);
    for (const auto& [n, c] : o.coeffs_) add_coeff(n, c);
    return *this;
  }
  FourierSeries& operator-=(const FourierSeries& o) {
    check(o);
    for (const auto& [n, c] : o.coeffs_) add_coeff(n, -c);
    return *this;
  }
  FourierSeries& operator*=(Cplx s) {
    if (s == Cplx(0, 0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [n, c] : coeffs_) c *= s;
    return *this;
  }
  friend FourierSeries operator+(FourierSeries a, const FourierSeries& b) { return a += b; }
  friend FourierSeries operator-(FourierSeries a, const FourierSeries& b) { return a -= b; }
  friend FourierSeries operator*(Cplx s, FourierSeries f) { return f *= s; }

  /// u(x) = sum û(n) e^{2 pi i n.x}
  Cplx evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != d_)
      throw std::invalid_argument("FourierSeries::evaluate: point dimension mismatch");
    Cplx acc(0, 0);
    for (const auto& [n, c] : coeffs_) {
      double phase = 0;
      for (int i = 0; i < d_; ++i) phase += static_cast<double>(n[i]) * x[i];
      acc += c * std::polar(1.0, 2.0 * std::numbers::pi * phase);
    }
    return acc;
  }

  long long support_radius_inf() const {
    long long r = 0;
    for (const auto& [n, c] : coeffs_) r = std::max(r, freq_norm_inf(n));
    return r;
  }

  /// û(-n) = conj(û(n)) up to tol on all stored frequencies.
  bool is_real_valued(double tol = 1e-12) const {
    for (const auto& [n, c] : coeffs_) {
      Freq neg(n.size());
      for (std::size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
      if (std::abs(c - std::conj(coeff(neg))) > tol) return false;
    }
    return true;
  }

 private:
  void check(const FourierSeries& o) const {
    if (o.d_ != d_) throw std::invalid_argument("FourierSeries: dimension mismatch");
  }

  int d_ = 1;
  std::map<Freq, Cplx> coeffs_;
};

/// <u, v> = sum û(n) conj(v̂(n)) — Plancherel for the Haar pairing.
inline Cplx inner_product(const FourierSeries& u, const FourierSeries& v) {
  if (u.d() != v.d()) throw std::invalid_argument("inner_product: dimension mismatch");
  Cplx acc(0, 0);
  for (const auto& [n, c] : u.coeffs()) acc += c * std::conj(v.coeff(n));
  return acc;
}

/// ||u||_s^2 = sum (1+||n||^2)^s |û(n)|^2 (Euclidean frequency norm).
inline double sobolev_norm(const FourierSeries& u, double s) {
  double acc = 0;
  for (const auto& [n, c] : u.coeffs())
    acc += std::pow(1.0 + freq_norm2_sq(n), s) * std::norm(c);
  return std::sqrt(acc);
}

}  // namespace hypolab::fourier
