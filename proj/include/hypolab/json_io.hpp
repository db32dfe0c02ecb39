#pragma once

// File formats: Lie algebras, Fourier series, translation actions, cochains
// and Heisenberg actions, plus the builtin:<name> shortcuts used by the CLI.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypolab/dyncoh.hpp"
#include "hypolab/fourier.hpp"
#include "hypolab/heis.hpp"
#include "hypolab/liealg.hpp"
#include "hypolab/torus.hpp"

namespace hypolab::json_io {

using nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Rational rational_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected rational string \"p/q\" or integer");
}

// ---------------------------------------------------------------------------
// Lie algebras: { "dim": int, "basis": [names],
//                 "brackets": [ {"i": int, "j": int,
//                                "coeffs": {"m": "p/q", ...}} ] }, 0-based.
// ---------------------------------------------------------------------------

inline liealg::LieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra: object with \"dim\" required");
  int dim = j["dim"].get<int>();
  std::vector<std::string> names;
  if (j.contains("basis")) names = j["basis"].get<std::vector<std::string>>();
  liealg::LieAlgebra g(dim, names);
  if (j.contains("brackets")) {
    for (const auto& b : j["brackets"]) {
      if (!b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
        throw ParseError("algebra.brackets: fields i, j, coeffs required");
      std::map<int, Rational> coeffs;
      for (const auto& [key, val] : b["coeffs"].items()) {
        int m = 0;
        try {
          m = std::stoi(key);
        } catch (...) {
          throw ParseError("algebra.brackets.coeffs: non-integer key \"" + key + "\"");
        }
        coeffs[m] = rational_from_json(val, "algebra.brackets.coeffs[" + key + "]");
      }
      try {
        g.set_bracket(b["i"].get<int>(), b["j"].get<int>(), coeffs);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("algebra.brackets: ") + e.what());
      }
    }
  }
  return g;
}

inline json algebra_to_json(const liealg::LieAlgebra& g) {
  json out{{"dim", g.dim()}, {"basis", g.names()}, {"brackets", json::array()}};
  for (const auto& [ij, coeffs] : g.brackets()) {
    json c = json::object();
    for (const auto& [m, v] : coeffs) c[std::to_string(m)] = format_rational(v);
    out["brackets"].push_back({{"i", ij.first}, {"j", ij.second}, {"coeffs", c}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fourier series: [ {"n": [ints], "re": float, "im": float}, ... ]
// ---------------------------------------------------------------------------

inline fourier::FourierSeries series_from_json(const json& j, int d) {
  if (!j.is_array()) throw ParseError("fourier series: array of records required");
  fourier::FourierSeries u(d);
  for (const auto& rec : j) {
    if (!rec.contains("n")) throw ParseError("fourier series: field \"n\" required");
    auto n = rec["n"].get<std::vector<long long>>();
    if (static_cast<int>(n.size()) != d)
      throw ParseError("fourier series: frequency length != d");
    double re = rec.value("re", 0.0), im = rec.value("im", 0.0);
    u.add_coeff(n, {re, im});
  }
  return u;
}

inline json series_to_json(const fourier::FourierSeries& u) {
  json out = json::array();
  for (const auto& [n, c] : u.coeffs())
    out.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

// ---------------------------------------------------------------------------
// Translation actions: { "d": int, "k": int, "generators": [[floats]] },
// a d x k matrix given by rows; columns are the generators X_j.
// ---------------------------------------------------------------------------

inline torus::TranslationAction action_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("k") || !j.contains("generators"))
    throw ParseError("action: fields d, k, generators required");
  int d = j["d"].get<int>(), k = j["k"].get<int>();
  auto rows = j["generators"].get<std::vector<std::vector<double>>>();
  try {
    return torus::TranslationAction(d, k, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("action: ") + e.what());
  }
}

inline json action_to_json(const torus::TranslationAction& act) {
  return json{{"d", act.d()}, {"k", act.k()}, {"generators", act.generators()}};
}

// ---------------------------------------------------------------------------
// Cochains: { "k": int, "degree": int,
//             "components": [ {"index": [ints], "series": <fourier>} ] }
// ---------------------------------------------------------------------------

inline dyncoh::Cochain cochain_from_json(const json& j, const torus::TranslationAction& act) {
  if (!j.is_object() || !j.contains("k") || !j.contains("degree"))
    throw ParseError("cochain: fields k, degree required");
  if (j["k"].get<int>() != act.k()) throw ParseError("cochain: k does not match the action");
  dyncoh::Cochain c(act, j["degree"].get<int>());
  if (j.contains("components")) {
    for (const auto& comp : j["components"]) {
      if (!comp.contains("index") || !comp.contains("series"))
        throw ParseError("cochain.components: fields index, series required");
      auto idx = comp["index"].get<std::vector<int>>();
      try {
        c.add_component(exterior::MultiIndex(act.k(), idx),
                        series_from_json(comp["series"], act.d()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("cochain.components: ") + e.what());
      }
    }
  }
  return c;
}

inline json cochain_to_json(const dyncoh::Cochain& c) {
  json comps = json::array();
  for (const auto& [I, u] : c.components())
    comps.push_back({{"index", I.indices}, {"series", series_to_json(u)}});
  return json{{"k", c.k()}, {"degree", c.degree()}, {"components", comps}};
}

// ---------------------------------------------------------------------------
// Heisenberg actions: { "g": int,
//   "generators": [[rationals in basis X_1..X_g, Y_1..Y_g, Z]] }
// ---------------------------------------------------------------------------

inline heis::HeisenbergAction heisenberg_action_from_json(const json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("generators"))
    throw ParseError("heisenberg action: fields g, generators required");
  int g = j["g"].get<int>();
  std::vector<std::vector<double>> gens;
  for (const auto& row : j["generators"]) {
    std::vector<double> r;
    for (const auto& v : row) {
      if (v.is_number())
        r.push_back(v.get<double>());
      else
        r.push_back(to_double(rational_from_json(v, "heisenberg action generators")));
    }
    gens.push_back(std::move(r));
  }
  try {
    return heis::HeisenbergAction(g, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("heisenberg action: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// builtin:<name> shortcuts
// ---------------------------------------------------------------------------

inline bool is_builtin(const std::string& spec) { return spec.rfind("builtin:", 0) == 0; }

inline std::vector<std::string> split_builtin(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  return parts;
}

/// builtin:heisenberg:g | builtin:filiform:g | builtin:abelian:n | builtin:g23
inline liealg::LieAlgebra builtin_algebra(const std::string& spec) {
  auto p = split_builtin(spec);
  if (p.size() >= 2 && p[1] == "g23") return liealg::free_nilpotent_2_3();
  if (p.size() == 3) {
    int arg = 0;
    try {
      arg = std::stoi(p[2]);
    } catch (...) {
      throw ParseError("builtin algebra: bad parameter in " + spec);
    }
    if (p[1] == "heisenberg") return liealg::heisenberg(arg);
    if (p[1] == "filiform") return liealg::filiform(arg);
    if (p[1] == "abelian") return liealg::abelian(arg);
  }
  throw ParseError("unknown builtin algebra: " + spec);
}

/// builtin:golden | builtin:golden-2d | builtin:golden-3d |
/// builtin:rational-half | builtin:liouville:4
inline torus::TranslationAction builtin_action(const std::string& spec) {
  auto p = split_builtin(spec);
  if (p.size() >= 2) {
    if (p[1] == "golden") return torus::golden_action();
    if (p[1] == "golden-2d") return torus::golden_2d_action();
    if (p[1] == "golden-3d") return torus::golden_3d_action();
    if (p[1] == "rational-half") return torus::rational_half_action();
    if (p[1] == "liouville" && p.size() == 3 && p[2] == "4") return torus::liouville4_action();
  }
  throw ParseError("unknown builtin action: " + spec);
}

inline liealg::LieAlgebra load_algebra(const std::string& spec) {
  if (is_builtin(spec)) return builtin_algebra(spec);
  return algebra_from_json(load_json_file(spec));
}

inline torus::TranslationAction load_action(const std::string& spec) {
  if (is_builtin(spec)) return builtin_action(spec);
  return action_from_json(load_json_file(spec));
}

}  // namespace hypolab::json_io
