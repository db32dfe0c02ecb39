#pragma once

// Exterior algebra Lambda^l(R^k) in the orthonormal dual basis (e^I)_I:
// canonical multi-index combinatorics, wedge with a basis covector E_j,
// contraction iota_j, and the inner product. Signs are computed on demand,
// never stored, so the canonical (sorted) form cannot drift.

#include <algorithm>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace hypolab::exterior {

/// Strictly increasing tuple (i_1 < ... < i_l) with entries in 1..k.
/// Degree 0 is the empty tuple.
struct MultiIndex {
  int k = 0;
  std::vector<int> indices;

  MultiIndex() = default;
  MultiIndex(int ambient, std::vector<int> idx) : k(ambient), indices(std::move(idx)) {
    if (k < 0) throw std::invalid_argument("MultiIndex: negative ambient dimension");
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (indices[i] < 1 || indices[i] > k)
        throw std::invalid_argument("MultiIndex: entry out of range [1,k]");
      if (i > 0 && indices[i - 1] >= indices[i])
        throw std::invalid_argument("MultiIndex: entries must be strictly increasing");
    }
  }

  int degree() const { return static_cast<int>(indices.size()); }
  bool contains(int j) const {
    return std::binary_search(indices.begin(), indices.end(), j);
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.k == b.k && a.indices == b.indices;
  }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.indices < b.indices;
  }
};

/// All degree-l multi-indices over 1..k in lexicographic order.
inline std::vector<MultiIndex> all_indices(int k, int degree) {
  std::vector<MultiIndex> out;
  if (degree < 0 || degree > k) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == degree) {
      out.emplace_back(k, cur);
      return;
    }
    for (int j = next; j <= k; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// A basis multi-index with an attached sign; zero == annihilated.
struct SignedIndex {
  bool zero = true;
  int sign = 0;
  MultiIndex index;

  static SignedIndex make_zero() { return SignedIndex{}; }
  static SignedIndex make(int s, MultiIndex idx) { return SignedIndex{false, s, std::move(idx)}; }
};

/// E_j(e^I) = e^j wedge e^I = sign * e^{I u {j}}, sign = (-1)^{#{i in I : i < j}}.
inline SignedIndex wedge_basis(int j, const MultiIndex& I) {
  if (j < 1 || j > I.k) throw std::invalid_argument("wedge_basis: index out of range");
  if (I.contains(j)) return SignedIndex::make_zero();
  std::vector<int> merged = I.indices;
  auto pos = std::lower_bound(merged.begin(), merged.end(), j);
  int transpositions = static_cast<int>(pos - merged.begin());
  merged.insert(pos, j);
  return SignedIndex::make(transpositions % 2 == 0 ? 1 : -1, MultiIndex(I.k, std::move(merged)));
}

/// iota_j(e^J) = sign * e^{J \ {j}}, sign = (-1)^(0-based position of j in J).
inline SignedIndex contract_basis(int j, const MultiIndex& J) {
  if (j < 1 || j > J.k) throw std::invalid_argument("contract_basis: index out of range");
  if (J.degree() == 0) throw std::invalid_argument("contract_basis: degree-0 input");
  auto pos = std::lower_bound(J.indices.begin(), J.indices.end(), j);
  if (pos == J.indices.end() || *pos != j) return SignedIndex::make_zero();
  int position = static_cast<int>(pos - J.indices.begin());
  std::vector<int> rest = J.indices;
  rest.erase(rest.begin() + position);
  return SignedIndex::make(position % 2 == 0 ? 1 : -1, MultiIndex(J.k, std::move(rest)));
}

namespace detail {
template <class S>
inline S conj_coeff(const S& s) { return s; }
template <class T>
inline std::complex<T> conj_coeff(const std::complex<T>& s) { return std::conj(s); }
}  // namespace detail

/// Element of Lambda^l(R^k): finite map MultiIndex -> Scalar, zero entries absent.
template <class Scalar>
class ExtVector {
 public:
  ExtVector() = default;
  ExtVector(int k, int degree) : k_(k), degree_(degree) {
    if (degree < 0 || degree > k) throw std::invalid_argument("ExtVector: bad degree");
  }

  static ExtVector basis(const MultiIndex& I) {
    ExtVector v(I.k, I.degree());
    v.coeffs_[I] = Scalar(1);
    return v;
  }

  int k() const { return k_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(const MultiIndex& I) const {
    auto it = coeffs_.find(I);
    return it == coeffs_.end() ? Scalar(0) : it->second;
  }

  void add(const MultiIndex& I, const Scalar& c) {
    if (I.k != k_ || I.degree() != degree_)
      throw std::invalid_argument("ExtVector::add: index shape mismatch");
    auto it = coeffs_.find(I);
    if (it == coeffs_.end()) {
      if (c != Scalar(0)) coeffs_[I] = c;
    } else {
      it->second += c;
      if (it->second == Scalar(0)) coeffs_.erase(it);
    }
  }

  ExtVector& operator+=(const ExtVector& o) {
    check_shape(o);
    for (const auto& [I, c] : o.coeffs_) add(I, c);
    return *this;
  }
  ExtVector& operator-=(const ExtVector& o) {
    check_shape(o);
    for (const auto& [I, c] : o.coeffs_) add(I, -c);
    return *this;
  }
  ExtVector& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [I, c] : coeffs_) c *= s;
    return *this;
  }
  friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
  friend ExtVector operator-(ExtVector a, const ExtVector& b) { return a -= b; }
  friend ExtVector operator*(const Scalar& s, ExtVector v) { return v *= s; }

  friend bool operator==(const ExtVector& a, const ExtVector& b) {
    return a.k_ == b.k_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_shape(const ExtVector& o) const {
    if (o.k_ != k_ || o.degree_ != degree_)
      throw std::invalid_argument("ExtVector: degree/dimension mismatch");
  }

  int k_ = 0;
  int degree_ = 0;
  std::map<MultiIndex, Scalar> coeffs_;
};

/// <omega, eta> = sum_I omega_I conj(eta_I); the (e^I)_I are orthonormal.
template <class Scalar>
Scalar inner_product(const ExtVector<Scalar>& a, const ExtVector<Scalar>& b) {
  if (a.k() != b.k() || a.degree() != b.degree())
    throw std::invalid_argument("inner_product: degree/dimension mismatch");
  Scalar acc(0);
  for (const auto& [I, c] : a.coeffs()) acc += c * detail::conj_coeff(b.coeff(I));
  return acc;
}

/// Linear extension of wedge_basis to ExtVector.
template <class Scalar>
ExtVector<Scalar> wedge(int j, const ExtVector<Scalar>& v) {
  ExtVector<Scalar> out(v.k(), v.degree() + 1);
  for (const auto& [I, c] : v.coeffs()) {
    SignedIndex s = wedge_basis(j, I);
    if (!s.zero) out.add(s.index, Scalar(s.sign) * c);
  }
  return out;
}

/// Linear extension of contract_basis to ExtVector.
template <class Scalar>
ExtVector<Scalar> contract(int j, const ExtVector<Scalar>& v) {
  ExtVector<Scalar> out(v.k(), v.degree() - 1);
  for (const auto& [I, c] : v.coeffs()) {
    SignedIndex s = contract_basis(j, I);
    if (!s.zero) out.add(s.index, Scalar(s.sign) * c);
  }
  return out;
}

}  // namespace hypolab::exterior
