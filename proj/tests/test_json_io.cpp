#include <catch2/catch_amalgamated.hpp>

#include "hypolab/json_io.hpp"

using namespace hypolab;
using namespace hypolab::json_io;
using nlohmann::json;

TEST_CASE("algebra round trip through JSON") {
  liealg::LieAlgebra g = liealg::free_nilpotent_2_3();
  liealg::LieAlgebra back = algebra_from_json(algebra_to_json(g));
  CHECK(back.dim() == g.dim());
  CHECK(back.brackets() == g.brackets());
  CHECK(back.names() == g.names());
}

TEST_CASE("algebra parsing applies antisymmetric completion and validation") {
  json j{{"dim", 3},
         {"basis", {"X", "Y", "Z"}},
         {"brackets", json::array({{{"i", 1}, {"j", 0}, {"coeffs", {{"2", "1/1"}}}}})}};
  liealg::LieAlgebra g = algebra_from_json(j);
  // [Y, X] = Z stored as [X, Y] = -Z
  CHECK(g.bracket_basis(0, 1)[2] == -1);
  CHECK(g.bracket_basis(1, 0)[2] == 1);

  CHECK_THROWS_AS(algebra_from_json(json{{"basis", {"X"}}}), ParseError);
  json bad{{"dim", 2}, {"brackets", json::array({{{"i", 0}, {"j", 1}, {"coeffs", {{"5", "1"}}}}})}};
  CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
  json badrat{{"dim", 2},
              {"brackets", json::array({{{"i", 0}, {"j", 1}, {"coeffs", {{"0", "1/abc"}}}}})}};
  CHECK_THROWS_AS(algebra_from_json(badrat), ParseError);
}

TEST_CASE("fourier series round trip") {
  fourier::FourierSeries u(2);
  u.set_coeff({1, -2}, {0.5, -0.25});
  u.set_coeff({0, 3}, {1.0, 0.0});
  fourier::FourierSeries back = series_from_json(series_to_json(u), 2);
  CHECK(back.coeffs() == u.coeffs());
  CHECK_THROWS_AS(series_from_json(json::object(), 2), ParseError);
  CHECK_THROWS_AS(series_from_json(json::array({{{"n", {1}}, {"re", 1.0}}}), 2), ParseError);
}

TEST_CASE("action round trip and validation") {
  torus::TranslationAction act = torus::golden_2d_action();
  torus::TranslationAction back = action_from_json(action_to_json(act));
  CHECK(back.d() == act.d());
  CHECK(back.k() == act.k());
  CHECK(back.generators() == act.generators());
  CHECK_THROWS_AS(action_from_json(json{{"d", 2}}), ParseError);
  CHECK_THROWS_AS(action_from_json(json{{"d", 2}, {"k", 1}, {"generators", {{1.0}}}}),
                  ParseError);
}

TEST_CASE("cochain round trip") {
  torus::TranslationAction act = torus::golden_2d_action();
  dyncoh::Cochain c(act, 1);
  fourier::FourierSeries u(2);
  u.set_coeff({2, 1}, {1.0, 2.0});
  c.set_component(exterior::MultiIndex(2, {1}), u);
  dyncoh::Cochain back = cochain_from_json(cochain_to_json(c), act);
  CHECK(back.degree() == 1);
  CHECK(back.component(exterior::MultiIndex(2, {1})).coeffs() == u.coeffs());
  CHECK_THROWS_AS(cochain_from_json(json{{"k", 3}, {"degree", 1}}, act), ParseError);
}

TEST_CASE("heisenberg action parsing") {
  json j{{"g", 1}, {"generators", {{"1", "1/2", 0}, {0, 0, "1"}}}};
  heis::HeisenbergAction act = heisenberg_action_from_json(j);
  CHECK(act.k() == 2);
  CHECK(act.generators[0][1] == Catch::Approx(0.5));
  CHECK_THROWS_AS(heisenberg_action_from_json(json{{"g", 1}, {"generators", {{1, 0}}}}),
                  ParseError);
}

TEST_CASE("builtins") {
  CHECK(builtin_algebra("builtin:heisenberg:2").dim() == 5);
  CHECK(builtin_algebra("builtin:filiform:3").dim() == 4);
  CHECK(builtin_algebra("builtin:g23").dim() == 5);
  CHECK(builtin_algebra("builtin:abelian:4").dim() == 4);
  CHECK_THROWS_AS(builtin_algebra("builtin:unknown"), ParseError);
  CHECK_THROWS_AS(builtin_algebra("builtin:heisenberg:x"), ParseError);

  CHECK(builtin_action("builtin:golden").k() == 1);
  CHECK(builtin_action("builtin:golden-2d").k() == 2);
  CHECK(builtin_action("builtin:golden-3d").d() == 3);
  CHECK(builtin_action("builtin:rational-half").has_exact());
  CHECK(builtin_action("builtin:liouville:4").d() == 2);
  CHECK_THROWS_AS(builtin_action("builtin:nope"), ParseError);
}
