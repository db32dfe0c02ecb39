#include <catch2/catch_amalgamated.hpp>

#include "hypolab/cecoh.hpp"

using namespace hypolab;
using namespace hypolab::cecoh;
using exterior::MultiIndex;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("homomorphism check") {
  for (auto make : {liealg::heisenberg(1), liealg::heisenberg(2), liealg::filiform(3),
                    liealg::free_nilpotent_2_3(), liealg::abelian(4)}) {
    CHECK(homomorphism_check(trivial_rep(make)));
    CHECK(homomorphism_check(adjoint_rep(make)));
  }
  // non-representation: pi(X) pi(Y) - pi(Y) pi(X) != pi([X,Y]) = pi(Z) = 0
  liealg::LieAlgebra h = liealg::heisenberg(1);
  std::vector<RatMat> act(3, rat_zeros(2, 2));
  act[0] = {{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
  act[1] = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
  CHECK_FALSE(homomorphism_check(Representation(h, 2, act)));
}

TEST_CASE("ce_differential on h^1 trivial rep: d Z* = -(X ^ Y)*") {
  liealg::LieAlgebra h = liealg::heisenberg(1);  // basis X, Y, Z
  Representation rep = trivial_rep(h);
  AlgCochain zstar(3, 1, 1);
  zstar.add(MultiIndex(3, {3}), {Rational(1)});
  AlgCochain d = ce_differential(rep, zstar);
  CHECK(d.value(MultiIndex(3, {1, 2}))[0] == -1);
  CHECK(d.value(MultiIndex(3, {1, 3}))[0] == 0);
  CHECK(d.value(MultiIndex(3, {2, 3}))[0] == 0);
}

TEST_CASE("trivial rep over abelian algebra has zero differential") {
  Representation rep = trivial_rep(liealg::abelian(4));
  CounterRng rng(5);
  for (int l = 0; l < 4; ++l) {
    AlgCochain w = random_cochain(rep, l, rng);
    CHECK(ce_differential(rep, w).is_zero());
  }
}

TEST_CASE("d^2 = 0 on random cochains, all builtins, trivial and adjoint") {
  CounterRng rng(17);
  for (const auto& g : {liealg::heisenberg(1), liealg::heisenberg(2), liealg::filiform(3),
                        liealg::free_nilpotent_2_3(), liealg::abelian(4)}) {
    for (bool adj : {false, true}) {
      Representation rep = adj ? adjoint_rep(g) : trivial_rep(g);
      for (int l = 0; l + 2 <= g.dim(); ++l)
        for (int t = 0; t < 5; ++t) {
          AlgCochain w = random_cochain(rep, l, rng);
          REQUIRE(ce_differential(rep, ce_differential(rep, w)).is_zero());
        }
    }
  }
}

TEST_CASE("cohomology dims of h^1") {
  liealg::LieAlgebra h = liealg::heisenberg(1);
  auto triv = cohomology_dim(trivial_rep(h), 1);
  CHECK(triv.dim_H == 2);  // = dim g/[g,g]

  auto adj1 = cohomology_dim(adjoint_rep(h), 1);
  CHECK(adj1.dim_H == 4);

  auto adj0 = cohomology_dim(adjoint_rep(h), 0);
  CHECK(adj0.dim_H == 1);  // = dim of the center
}

TEST_CASE("cohomology of abelian(k) with trivial rep is C(k, l)") {
  for (int k = 2; k <= 4; ++k) {
    Representation rep = trivial_rep(liealg::abelian(k));
    for (int l = 0; l <= k; ++l) {
      auto dims = cohomology_dim(rep, l);
      CHECK(dims.dim_H == binom(k, l));
    }
  }
}

TEST_CASE("euler characteristic from cochain dims equals alternating H sum") {
  for (const auto& g : {liealg::heisenberg(1), liealg::filiform(3)}) {
    for (bool adj : {false, true}) {
      Representation rep = adj ? adjoint_rep(g) : trivial_rep(g);
      long long chi_c = 0, chi_h = 0;
      for (int l = 0; l <= g.dim(); ++l) {
        auto dims = cohomology_dim(rep, l);
        long long s = (l % 2 == 0) ? 1 : -1;
        chi_c += s * dims.dim_C;
        chi_h += s * dims.dim_H;
      }
      CHECK(chi_c == chi_h);
    }
  }
}
