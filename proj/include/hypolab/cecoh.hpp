#pragma once

// Chevalley-Eilenberg complex of a finite-dimensional representation
// pi: g -> End(V) with exact rational coefficients. The differential is
// materialized as a matrix per degree and cohomology dimensions come from
// exact row reduction.

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "hypolab/exterior.hpp"
#include "hypolab/liealg.hpp"
#include "hypolab/ratlinalg.hpp"
#include "hypolab/rng.hpp"

namespace hypolab::cecoh {

using exterior::MultiIndex;

struct Representation {
  liealg::LieAlgebra algebra;
  int dimV = 0;
  std::vector<RatMat> action;  // action[i] = pi(b_i), a dimV x dimV matrix

  Representation(liealg::LieAlgebra alg, int dim_v, std::vector<RatMat> act)
      : algebra(std::move(alg)), dimV(dim_v), action(std::move(act)) {
    if (dimV <= 0) throw std::invalid_argument("Representation: dimV must be positive");
    if (static_cast<int>(action.size()) != algebra.dim())
      throw std::invalid_argument("Representation: one matrix per basis element required");
    for (const auto& m : action)
      if (static_cast<int>(m.size()) != dimV || static_cast<int>(m[0].size()) != dimV)
        throw std::invalid_argument("Representation: matrix shape mismatch");
  }

  /// pi(x) for x in coordinates.
  RatMat act_matrix(const RatVec& x) const {
    RatMat m = rat_zeros(dimV, dimV);
    for (int i = 0; i < algebra.dim(); ++i) {
      if (x[i] == 0) continue;
      for (int r = 0; r < dimV; ++r)
        for (int c = 0; c < dimV; ++c) m[r][c] += x[i] * action[i][r][c];
    }
    return m;
  }
};

/// pi([b_i, b_j]) = pi(b_i)pi(b_j) - pi(b_j)pi(b_i) on all pairs.
inline bool homomorphism_check(const Representation& rep) {
  int n = rep.algebra.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatMat lhs = rep.act_matrix(rep.algebra.bracket_basis(i, j));
      RatMat ab = rat_mul(rep.action[i], rep.action[j]);
      RatMat ba = rat_mul(rep.action[j], rep.action[i]);
      for (int r = 0; r < rep.dimV; ++r)
        for (int c = 0; c < rep.dimV; ++c)
          if (lhs[r][c] != ab[r][c] - ba[r][c]) return false;
    }
  return true;
}

inline Representation trivial_rep(liealg::LieAlgebra g, int dim_v = 1) {
  std::vector<RatMat> act(g.dim(), rat_zeros(dim_v, dim_v));
  return Representation(std::move(g), dim_v, std::move(act));
}

inline Representation adjoint_rep(liealg::LieAlgebra g) {
  std::vector<RatMat> act;
  for (int i = 0; i < g.dim(); ++i) act.push_back(g.ad(g.basis_vector(i)));
  int n = g.dim();
  return Representation(std::move(g), n, std::move(act));
}

/// Alternating map Lambda_l(g) -> V on canonical multi-indices
/// (1-based entries over 1..dim g).
struct AlgCochain {
  int dim_g = 0;
  int dimV = 0;
  int degree = 0;
  std::map<MultiIndex, RatVec> values;

  AlgCochain(int n, int dv, int deg) : dim_g(n), dimV(dv), degree(deg) {
    if (deg < 0 || deg > n) throw std::invalid_argument("AlgCochain: bad degree");
  }

  RatVec value(const MultiIndex& I) const {
    auto it = values.find(I);
    return it == values.end() ? RatVec(dimV, Rational(0)) : it->second;
  }

  void add(const MultiIndex& I, const RatVec& v, const Rational& scale = 1) {
    if (I.k != dim_g || I.degree() != degree)
      throw std::invalid_argument("AlgCochain::add: index shape mismatch");
    auto it = values.find(I);
    if (it == values.end()) it = values.emplace(I, RatVec(dimV, Rational(0))).first;
    bool nonzero = false;
    for (int r = 0; r < dimV; ++r) {
      it->second[r] += scale * v[r];
      if (it->second[r] != 0) nonzero = true;
    }
    if (!nonzero) values.erase(it);
  }

  bool is_zero() const { return values.empty(); }

  /// Evaluation on an arbitrary tuple of basis indices (0-based), with the
  /// sign normalization of the alternating structure.
  RatVec eval_tuple(std::vector<int> tuple) const {
    int sign = 1;
    // insertion sort, counting transpositions; repeated index -> 0
    for (std::size_t i = 1; i < tuple.size(); ++i)
      for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
        if (tuple[j - 1] == tuple[j]) return RatVec(dimV, Rational(0));
        std::swap(tuple[j - 1], tuple[j]);
        sign = -sign;
      }
    for (int& t : tuple) ++t;  // to 1-based
    RatVec v = value(MultiIndex(dim_g, std::move(tuple)));
    if (sign < 0)
      for (auto& c : v) c = -c;
    return v;
  }
};

/// (d omega)(Y_0..Y_l) = sum_i (-1)^i pi(Y_i) omega(..^Y_i..)
///                     + sum_{i<j} (-1)^{i+j} omega([Y_i,Y_j], ..^Y_i..^Y_j..).
inline AlgCochain ce_differential(const Representation& rep, const AlgCochain& omega) {
  int n = rep.algebra.dim();
  if (omega.dim_g != n || omega.dimV != rep.dimV)
    throw std::invalid_argument("ce_differential: representation/cochain mismatch");
  if (omega.degree >= n) throw std::invalid_argument("ce_differential: degree overflow");
  AlgCochain out(n, rep.dimV, omega.degree + 1);
  for (const MultiIndex& I : exterior::all_indices(n, omega.degree + 1)) {
    std::vector<int> ys;  // 0-based
    for (int e : I.indices) ys.push_back(e - 1);
    RatVec total(rep.dimV, Rational(0));
    int l1 = static_cast<int>(ys.size());
    for (int i = 0; i < l1; ++i) {
      std::vector<int> rest;
      for (int t = 0; t < l1; ++t)
        if (t != i) rest.push_back(ys[t]);
      RatVec w = rat_mul_vec(rep.action[ys[i]], omega.eval_tuple(rest));
      Rational s = (i % 2 == 0) ? 1 : -1;
      for (int r = 0; r < rep.dimV; ++r) total[r] += s * w[r];
    }
    for (int i = 0; i < l1; ++i)
      for (int j = i + 1; j < l1; ++j) {
        RatVec br = rep.algebra.bracket_basis(ys[i], ys[j]);
        Rational s = ((i + j) % 2 == 0) ? 1 : -1;
        for (int m = 0; m < n; ++m) {
          if (br[m] == 0) continue;
          std::vector<int> tuple{m};
          for (int t = 0; t < l1; ++t)
            if (t != i && t != j) tuple.push_back(ys[t]);
          RatVec w = omega.eval_tuple(std::move(tuple));
          for (int r = 0; r < rep.dimV; ++r) total[r] += s * br[m] * w[r];
        }
      }
    out.add(I, total);
  }
  return out;
}

/// Matrix of d^l : C^l -> C^{l+1} in the canonical bases, column order
/// (multi-index, V-coordinate) lexicographic.
inline RatMat differential_matrix(const Representation& rep, int degree) {
  int n = rep.algebra.dim();
  auto dom = exterior::all_indices(n, degree);
  auto cod = exterior::all_indices(n, degree + 1);
  RatMat m = rat_zeros(cod.size() * rep.dimV, dom.size() * rep.dimV);
  for (std::size_t di = 0; di < dom.size(); ++di)
    for (int v = 0; v < rep.dimV; ++v) {
      AlgCochain basis(n, rep.dimV, degree);
      RatVec ev(rep.dimV, Rational(0));
      ev[v] = 1;
      basis.add(dom[di], ev);
      AlgCochain img = ce_differential(rep, basis);
      for (std::size_t ci = 0; ci < cod.size(); ++ci) {
        RatVec w = img.value(cod[ci]);
        for (int r = 0; r < rep.dimV; ++r)
          m[ci * rep.dimV + r][di * rep.dimV + v] = w[r];
      }
    }
  return m;
}

struct CohomologyDims {
  int dim_C = 0;
  int dim_Z = 0;
  int dim_B = 0;
  int dim_H = 0;
};

inline CohomologyDims cohomology_dim(const Representation& rep, int degree) {
  int n = rep.algebra.dim();
  if (degree < 0 || degree > n) throw std::invalid_argument("cohomology_dim: degree out of range");
  CohomologyDims res;
  res.dim_C = static_cast<int>(exterior::all_indices(n, degree).size()) * rep.dimV;
  if (degree < n) {
    int rank = rat_rank(differential_matrix(rep, degree));
    res.dim_Z = res.dim_C - rank;
  } else {
    res.dim_Z = res.dim_C;
  }
  res.dim_B = (degree == 0) ? 0 : rat_rank(differential_matrix(rep, degree - 1));
  res.dim_H = res.dim_Z - res.dim_B;
  return res;
}

inline AlgCochain random_cochain(const Representation& rep, int degree, CounterRng& rng) {
  AlgCochain c(rep.algebra.dim(), rep.dimV, degree);
  for (const MultiIndex& I : exterior::all_indices(rep.algebra.dim(), degree)) {
    RatVec v(rep.dimV);
    for (auto& e : v) e = rng.next_rational();
    c.add(I, v);
  }
  return c;
}

}  // namespace hypolab::cecoh
