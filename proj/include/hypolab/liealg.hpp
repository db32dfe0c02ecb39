#pragma once

// Finite-dimensional Lie algebras over Q given by structure constants.
// Sparse antisymmetric storage: only i < j pairs are kept, the rest follows
// by antisymmetry. All subspace computations (lower central series, center,
// derived subalgebra, classification) use exact elimination over Q.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hypolab/ratlinalg.hpp"

namespace hypolab::liealg {

class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::string> basis_names)
      : dim_(dim), names_(std::move(basis_names)) {
    if (dim <= 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
    if (names_.empty()) {
      for (int i = 0; i < dim; ++i) names_.push_back("b" + std::to_string(i + 1));
    }
    if (static_cast<int>(names_.size()) != dim)
      throw std::invalid_argument("LieAlgebra: basis name count != dim");
  }

  explicit LieAlgebra(int dim) : LieAlgebra(dim, {}) {}

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Sets [b_i, b_j] = sum_m coeffs[m] b_m for i < j (0-based).
  void set_bracket(int i, int j, std::map<int, Rational> coeffs) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("set_bracket: i == j");
    Rational sgn = 1;
    if (i > j) {
      std::swap(i, j);
      sgn = -1;
    }
    std::map<int, Rational> clean;
    for (auto& [m, c] : coeffs) {
      check_index(m);
      if (c != 0) clean[m] = sgn * c;
    }
    if (clean.empty())
      brackets_.erase({i, j});
    else
      brackets_[{i, j}] = std::move(clean);
  }

  /// [b_i, b_j] as a coordinate vector (any i, j).
  RatVec bracket_basis(int i, int j) const {
    check_index(i);
    check_index(j);
    RatVec v(dim_, Rational(0));
    if (i == j) return v;
    Rational sgn = 1;
    if (i > j) {
      std::swap(i, j);
      sgn = -1;
    }
    auto it = brackets_.find({i, j});
    if (it != brackets_.end())
      for (const auto& [m, c] : it->second) v[m] = sgn * c;
    return v;
  }

  RatVec bracket(const RatVec& x, const RatVec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
      throw std::invalid_argument("bracket: vector size mismatch");
    RatVec v(dim_, Rational(0));
    for (const auto& [ij, coeffs] : brackets_) {
      Rational f = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
      if (f == 0) continue;
      for (const auto& [m, c] : coeffs) v[m] += f * c;
    }
    return v;
  }

  /// Matrix of ad_x : y -> [x, y] in the defining basis.
  RatMat ad(const RatVec& x) const {
    RatMat m = rat_zeros(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      RatVec ej(dim_, Rational(0));
      ej[j] = 1;
      RatVec col = bracket(x, ej);
      for (int i = 0; i < dim_; ++i) m[i][j] = col[i];
    }
    return m;
  }

  RatVec basis_vector(int i) const {
    check_index(i);
    RatVec v(dim_, Rational(0));
    v[i] = 1;
    return v;
  }

  const std::map<std::pair<int, int>, std::map<int, Rational>>& brackets() const {
    return brackets_;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= dim_) throw std::invalid_argument("LieAlgebra: basis index out of range");
  }

  int dim_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, std::map<int, Rational>> brackets_;
};

/// Subspace of Q^n given by a canonical (RREF) row basis.
struct Subspace {
  int ambient = 0;
  RatMat basis;  // RREF rows, linearly independent

  static Subspace span(int ambient, RatMat vectors) {
    Subspace s;
    s.ambient = ambient;
    s.basis = row_space_basis(std::move(vectors));
    return s;
  }

  static Subspace zero(int ambient) { return Subspace{ambient, {}}; }

  static Subspace full(int ambient) { return Subspace{ambient, rat_identity(ambient)}; }

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const RatVec& v) const { return in_row_span(basis, v); }
  bool contains(const Subspace& other) const {
    for (const auto& row : other.basis)
      if (!contains(row)) return false;
    return true;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

// ---------------------------------------------------------------------------
// Structural computations
// ---------------------------------------------------------------------------

struct JacobiReport {
  bool pass = true;
  std::vector<std::tuple<int, int, int>> violations;  // basis triples (i, j, m)
};

inline JacobiReport jacobi_check(const LieAlgebra& g) {
  JacobiReport rep;
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int m = j + 1; m < n; ++m) {
        RatVec s = g.bracket(g.basis_vector(i), g.bracket_basis(j, m));
        RatVec t = g.bracket(g.basis_vector(j), g.bracket_basis(m, i));
        RatVec u = g.bracket(g.basis_vector(m), g.bracket_basis(i, j));
        bool ok = true;
        for (int r = 0; r < n; ++r)
          if (s[r] + t[r] + u[r] != 0) ok = false;
        if (!ok) {
          rep.pass = false;
          rep.violations.emplace_back(i, j, m);
        }
      }
  return rep;
}

/// [g, h] as a subspace, for a subspace h.
inline Subspace bracket_subspace(const LieAlgebra& g, const Subspace& h) {
  RatMat gens;
  for (int i = 0; i < g.dim(); ++i)
    for (const auto& row : h.basis) gens.push_back(g.bracket(g.basis_vector(i), row));
  return Subspace::span(g.dim(), std::move(gens));
}

/// g^(0) = g, g^(j+1) = [g, g^(j)], listed until stabilization.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (true) {
    Subspace next = bracket_subspace(g, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

inline bool is_nilpotent(const LieAlgebra& g) {
  return lower_central_series(g).back().dim() == 0;
}

/// Minimal l with g^(l) = 0; nullopt when not nilpotent.
inline std::optional<int> step(const LieAlgebra& g) {
  auto series = lower_central_series(g);
  if (series.back().dim() != 0) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

/// {x : [x, g] = 0}, as the kernel of the stacked adjoint maps.
inline Subspace center(const LieAlgebra& g) {
  RatMat stacked;
  for (int j = 0; j < g.dim(); ++j) {
    // row block: x -> [x, b_j] = -ad_{b_j}(x)
    RatMat adj = g.ad(g.basis_vector(j));
    for (auto& row : adj) stacked.push_back(row);
  }
  return Subspace::span(g.dim(), kernel_basis(std::move(stacked)));
}

inline Subspace derived_subalgebra(const LieAlgebra& g) {
  return bracket_subspace(g, Subspace::full(g.dim()));
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

inline LieAlgebra abelian(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("A" + std::to_string(i + 1));
  return LieAlgebra(n, names);
}

/// h^g: basis X_1..X_g, Y_1..Y_g, Z with [X_i, Y_i] = Z.
inline LieAlgebra heisenberg(int g) {
  if (g < 1) throw std::invalid_argument("heisenberg: g >= 1 required");
  std::vector<std::string> names;
  for (int i = 0; i < g; ++i) names.push_back("X" + std::to_string(i + 1));
  for (int i = 0; i < g; ++i) names.push_back("Y" + std::to_string(i + 1));
  names.push_back("Z");
  LieAlgebra h(2 * g + 1, names);
  for (int i = 0; i < g; ++i) h.set_bracket(i, g + i, {{2 * g, Rational(1)}});
  return h;
}

/// f^g: basis Y, X_1..X_g with [Y, X_i] = X_{i+1} (i < g).
inline LieAlgebra filiform(int g) {
  if (g < 1) throw std::invalid_argument("filiform: g >= 1 required");
  std::vector<std::string> names{"Y"};
  for (int i = 0; i < g; ++i) names.push_back("X" + std::to_string(i + 1));
  LieAlgebra f(g + 1, names);
  for (int i = 1; i < g; ++i) f.set_bracket(0, i, {{i + 1, Rational(1)}});
  return f;
}

/// g_{2,3}: free 3-step nilpotent on two generators. Basis X1, X2, Z, Y1, Y2
/// with [X1, X2] = Z, [Z, X1] = Y1, [Z, X2] = Y2.
inline LieAlgebra free_nilpotent_2_3() {
  LieAlgebra g(5, {"X1", "X2", "Z", "Y1", "Y2"});
  g.set_bracket(0, 1, {{2, Rational(1)}});
  g.set_bracket(2, 0, {{3, Rational(1)}});
  g.set_bracket(2, 1, {{4, Rational(1)}});
  return g;
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names = a.names();
  for (const auto& n : b.names()) names.push_back(n + "'");
  LieAlgebra g(a.dim() + b.dim(), names);
  for (const auto& [ij, coeffs] : a.brackets()) {
    std::map<int, Rational> c(coeffs.begin(), coeffs.end());
    g.set_bracket(ij.first, ij.second, c);
  }
  for (const auto& [ij, coeffs] : b.brackets()) {
    std::map<int, Rational> c;
    for (const auto& [m, v] : coeffs) c[a.dim() + m] = v;
    g.set_bracket(a.dim() + ij.first, a.dim() + ij.second, c);
  }
  return g;
}

/// Structure constants in the basis f_a = sum_i P[i][a] b_i (P invertible).
inline LieAlgebra change_basis(const LieAlgebra& g, const RatMat& p) {
  int n = g.dim();
  RatMat pinv = rat_inverse(p);
  LieAlgebra out(n);
  for (int a = 0; a < n; ++a) {
    RatVec fa(n);
    for (int i = 0; i < n; ++i) fa[i] = p[i][a];
    for (int b = a + 1; b < n; ++b) {
      RatVec fb(n);
      for (int i = 0; i < n; ++i) fb[i] = p[i][b];
      RatVec br = rat_mul_vec(pinv, g.bracket(fa, fb));
      std::map<int, Rational> coeffs;
      for (int m = 0; m < n; ++m)
        if (br[m] != 0) coeffs[m] = br[m];
      out.set_bracket(a, b, coeffs);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification routines
// ---------------------------------------------------------------------------

struct TwoStepClassification {
  bool applicable = false;
  std::string reason;   // set when not applicable
  int g_heis = 0;       // h^g factor
  int n_euclid = 0;     // R^n factor
};

/// Recognizes 2-step nilpotent algebras with 1-dimensional derived
/// subalgebra as h^g x R^n: 2g is the rank of the induced skew form on
/// g/[g,g] valued in [g,g].
inline TwoStepClassification classify_2step_dim1(const LieAlgebra& g) {
  TwoStepClassification res;
  auto st = step(g);
  if (!st || *st != 2) {
    res.reason = st ? "step " + std::to_string(*st) + ", not 2-step" : "not nilpotent";
    return res;
  }
  Subspace derived = derived_subalgebra(g);
  if (derived.dim() != 1) {
    res.reason = "dim[g,g] = " + std::to_string(derived.dim()) + ", not 1";
    return res;
  }
  const RatVec& z = derived.basis[0];
  int n = g.dim();
  // [b_i, b_j] = lambda_ij z defines a skew form; its radical contains the
  // (central) derived line, so the rank is intrinsic to g/[g,g].
  RatMat skew = rat_zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec br = g.bracket_basis(i, j);
      // solve br = lambda * z (z has a pivot 1 entry since RREF)
      int piv = 0;
      while (z[piv] == 0) ++piv;
      Rational lambda = br[piv] / z[piv];
      skew[i][j] = lambda;
      skew[j][i] = -lambda;
    }
  int rank = rat_rank(skew);
  if (rank % 2 != 0 || rank == 0) {
    res.reason = "degenerate skew form";
    return res;
  }
  res.applicable = true;
  res.g_heis = rank / 2;
  res.n_euclid = n - rank - 1;
  return res;
}

struct JordanBlockProfile {
  bool nilpotent = false;
  std::vector<int> block_sizes;            // all blocks, descending (nilpotent case)
  RatVec char_poly;                        // coefficients of det(xI - A)
  std::vector<std::pair<Rational, int>> rational_eigenvalues;  // (root, multiplicity)
};

enum class Codim1Verdict {
  kAbelian,            // ad_Z = 0: the whole algebra is abelian
  kSingleBlockFiliform,  // f^g x R^n
  kMultiBlockNilpotent,
  kSolvableNonNilpotent,
};

struct Codim1Classification {
  Codim1Verdict verdict;
  JordanBlockProfile profile;
  int g_filiform = 0;  // size of the unique nontrivial block (single-block case)
  int n_euclid = 0;
  std::string describe() const {
    switch (verdict) {
      case Codim1Verdict::kAbelian:
        return "all blocks trivial: abelian algebra (degenerate f^0 case)";
      case Codim1Verdict::kSingleBlockFiliform:
        return "nilpotent, single nontrivial block of size " + std::to_string(g_filiform) +
               " => f^" + std::to_string(g_filiform) + " x R^" + std::to_string(n_euclid);
      case Codim1Verdict::kMultiBlockNilpotent:
        return "nilpotent, multi-block almost-abelian";
      case Codim1Verdict::kSolvableNonNilpotent:
        return "solvable non-nilpotent";
    }
    return "";
  }
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt v, std::size_t cap = 4096) {
  if (v < 0) v = -v;
  std::vector<BigInt> divs;
  for (BigInt d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      divs.push_back(d);
      if (d * d != v) divs.push_back(v / d);
    }
    if (divs.size() > cap) break;  // give up on exotic constants
  }
  return divs;
}

/// Rational roots with multiplicities, by the rational root theorem on the
/// denominator-cleared polynomial.
inline std::vector<std::pair<Rational, int>> rational_roots(RatVec poly) {
  std::vector<std::pair<Rational, int>> roots;
  auto eval = [](const RatVec& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  auto deflate = [](const RatVec& p, const Rational& r) {
    // synthetic division by (x - r)
    RatVec q(p.size() - 1);
    Rational carry = p.back();
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
      q[i] = carry;
      carry = p[i] + r * carry;
    }
    return q;
  };
  // strip roots at zero
  while (poly.size() > 1 && poly[0] == 0) {
    auto it = roots.begin();
    for (; it != roots.end(); ++it)
      if (it->first == 0) break;
    if (it == roots.end())
      roots.emplace_back(Rational(0), 1);
    else
      ++it->second;
    poly.erase(poly.begin());
  }
  while (poly.size() > 1) {
    BigInt lcm = 1;
    for (const auto& c : poly) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    BigInt a0 = numerator(Rational(poly.front() * lcm));
    BigInt an = numerator(Rational(poly.back() * lcm));
    bool found = false;
    for (const auto& p : positive_divisors(a0)) {
      for (const auto& q : positive_divisors(an)) {
        for (int s : {1, -1}) {
          Rational cand(s * p, q);
          if (eval(poly, cand) == 0) {
            auto it = roots.begin();
            for (; it != roots.end(); ++it)
              if (it->first == cand) break;
            if (it == roots.end())
              roots.emplace_back(cand, 1);
            else
              ++it->second;
            poly = deflate(poly, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

}  // namespace detail

/// Classifies g from the Jordan data of A = ad_Z restricted to a codimension-1
/// abelian ideal a. Nilpotent block sizes come from the rank sequence of A^m.
inline Codim1Classification classify_codim1_abelian(const LieAlgebra& g, const Subspace& a,
                                                    const RatVec& z) {
  int n = g.dim();
  if (a.ambient != n || a.dim() != n - 1)
    throw std::invalid_argument("classify_codim1_abelian: a must have codimension 1");
  if (a.contains(z)) throw std::invalid_argument("classify_codim1_abelian: Z lies in a");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      RatVec br = g.bracket(a.basis[i], a.basis[j]);
      for (const auto& c : br)
        if (c != 0) throw std::invalid_argument("classify_codim1_abelian: a is not abelian");
    }
  for (int i = 0; i < n; ++i)
    for (const auto& row : a.basis)
      if (!a.contains(g.bracket(g.basis_vector(i), row)))
        throw std::invalid_argument("classify_codim1_abelian: a is not an ideal");

  // A = ad_Z|_a in the coordinates of a's basis rows.
  int m = a.dim();
  RatMat basis_t = rat_transpose(a.basis);
  RatMat amat = rat_zeros(m, m);
  for (int c = 0; c < m; ++c) {
    RatVec img = g.bracket(z, a.basis[c]);
    RatVec coords;
    if (!rat_solve(basis_t, img, coords))
      throw std::invalid_argument("classify_codim1_abelian: a not ad_Z invariant");
    for (int r = 0; r < m; ++r) amat[r][c] = coords[r];
  }

  Codim1Classification res;
  res.profile.char_poly = charpoly(amat);

  // rank sequence r_j = rank(A^j); nilpotent iff it reaches 0
  std::vector<int> ranks{m};
  RatMat pw = amat;
  for (int j = 1; j <= m; ++j) {
    ranks.push_back(rat_rank(pw));
    if (ranks.back() == 0) break;
    pw = rat_mul(pw, amat);
  }
  res.profile.nilpotent = (ranks.back() == 0);
  if (!res.profile.nilpotent) {
    res.verdict = Codim1Verdict::kSolvableNonNilpotent;
    res.profile.rational_eigenvalues = detail::rational_roots(res.profile.char_poly);
    return res;
  }
  // #blocks of size >= s equals r_{s-1} - r_s
  std::vector<int> sizes;
  for (std::size_t s = 1; s < ranks.size(); ++s) {
    int ge_s = ranks[s - 1] - ranks[s];
    int ge_s1 = (s < ranks.size() - 1) ? ranks[s] - ranks[s + 1] : 0;
    for (int c = 0; c < ge_s - ge_s1; ++c) sizes.push_back(static_cast<int>(s));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  res.profile.block_sizes = sizes;
  int nontrivial = 0;
  for (int s : sizes)
    if (s >= 2) ++nontrivial;
  if (nontrivial == 0) {
    res.verdict = Codim1Verdict::kAbelian;
  } else if (nontrivial == 1) {
    res.verdict = Codim1Verdict::kSingleBlockFiliform;
    res.g_filiform = sizes.front();
    res.n_euclid = m - sizes.front();
  } else {
    res.verdict = Codim1Verdict::kMultiBlockNilpotent;
  }
  return res;
}

// ---------------------------------------------------------------------------
// The g_{2,3} counterexample
// ---------------------------------------------------------------------------

struct G23Witness {
  RatVec bracket;     // [S', R'] in the basis X1, X2, Z, Y1, Y2
  Rational beta;
  bool nonzero = false;
};

/// [S', R'] with R' = X1 + beta X2 + Y and S' = Z + Y', for arbitrary central
/// corrections Y = y1 Y1 + y2 Y2 and Y' = y1p Y1 + y2p Y2. The result is
/// Y1 + beta Y2 regardless of the corrections, so a lifted abelian subalgebra
/// through R and S cannot exist.
inline G23Witness counterexample_g23(const Rational& beta, const Rational& y1 = 0,
                                     const Rational& y2 = 0, const Rational& y1p = 0,
                                     const Rational& y2p = 0) {
  LieAlgebra g = free_nilpotent_2_3();
  RatVec r_lift{Rational(1), beta, Rational(0), y1, y2};
  RatVec s_lift{Rational(0), Rational(0), Rational(1), y1p, y2p};
  G23Witness w;
  w.beta = beta;
  w.bracket = g.bracket(s_lift, r_lift);
  for (const auto& c : w.bracket)
    if (c != 0) w.nonzero = true;
  return w;
}

}  // namespace hypolab::liealg
