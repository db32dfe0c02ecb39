// hypolab — CLI over the library: Lie algebra info/classification,
// Chevalley-Eilenberg cohomology, torus diophantine scans and small-divisor
// solvers, dynamical Hodge decomposition and cocycle round-trips, Heisenberg
// necessary-condition checks, and the g_{2,3} counterexample.
//
// Exit codes: 0 success, 2 input error, 3 mathematical obstruction.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypolab/cecoh.hpp"
#include "hypolab/dyncoh.hpp"
#include "hypolab/errors.hpp"
#include "hypolab/heis.hpp"
#include "hypolab/json_io.hpp"
#include "hypolab/liealg.hpp"
#include "hypolab/torus.hpp"

using nlohmann::json;
using namespace hypolab;

namespace {

struct Options {
  double tau = 1.0;
  long long radius = 100;
  int degree = 1;
  std::uint64_t seed = 0;
  std::string out;
  int order = 0;
  int trials = 20;
  double beta_num = 1.0;  // unused; beta parsed as string
};

void attach_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--tau", opt.tau, "diophantine exponent");
  cmd->add_option("--radius", opt.radius, "frequency scan radius (inf norm)");
  cmd->add_option("--degree", opt.degree, "cochain/cohomology degree");
  cmd->add_option("--seed", opt.seed, "seed for the counter-based RNG");
  cmd->add_option("--out", opt.out, "write the JSON report to this path");
}

void emit(const json& report, const Options& opt) {
  if (opt.out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream f(opt.out);
    if (!f) throw json_io::ParseError("cannot write: " + opt.out);
    f << report.dump(2) << "\n";
  }
}

json subspace_json(const liealg::Subspace& s) {
  json rows = json::array();
  for (const auto& row : s.basis) {
    json r = json::array();
    for (const auto& v : row) r.push_back(format_rational(v));
    rows.push_back(r);
  }
  return json{{"dim", s.dim()}, {"basis", rows}};
}

json dioph_json(const torus::DiophantineReport& rep) {
  json decay = json::array();
  long long step = 1;
  for (long long R = 1; R <= rep.radius;) {
    decay.push_back({{"R", R}, {"k_hat", rep.decay_table[static_cast<std::size_t>(R - 1)]}});
    if (R >= 10 * step) step *= 10;
    R += step;
  }
  if (decay.back()["R"] != rep.radius)
    decay.push_back({{"R", rep.radius}, {"k_hat", rep.decay_table.back()}});
  json out{{"tau", rep.tau},       {"radius", rep.radius}, {"k_hat", rep.k_hat},
           {"argmin", rep.argmin}, {"decay", decay},       {"verdict", rep.verdict},
           {"resonant", rep.resonant}};
  if (rep.resonant) out["resonance"] = rep.resonance;
  if (!rep.near_resonances.empty()) out["near_resonances"] = rep.near_resonances;
  return out;
}

json run_algebra(const std::string& subcmd, const std::string& spec) {
  liealg::LieAlgebra g = json_io::load_algebra(spec);
  auto jac = liealg::jacobi_check(g);
  if (!jac.pass) {
    json viols = json::array();
    for (auto [i, j, m] : jac.violations) viols.push_back({i, j, m});
    throw json_io::ParseError("Jacobi identity fails on triples " + viols.dump());
  }
  json out{{"input", spec}, {"dim", g.dim()}, {"basis", g.names()}};
  auto series = liealg::lower_central_series(g);
  json dims = json::array();
  for (const auto& s : series) dims.push_back(s.dim());
  out["lower_central_series_dims"] = dims;
  auto st = liealg::step(g);
  out["nilpotent"] = st.has_value();
  if (st) out["step"] = *st;
  out["center"] = subspace_json(liealg::center(g));
  out["derived"] = subspace_json(liealg::derived_subalgebra(g));
  if (subcmd == "classify") {
    auto two = liealg::classify_2step_dim1(g);
    if (two.applicable)
      out["two_step"] = {{"g_heis", two.g_heis}, {"n_euclid", two.n_euclid},
                         {"verdict", "h^g x R^n"}};
    else
      out["two_step"] = {{"applicable", false}, {"reason", two.reason}};
    // look for a codimension-1 abelian ideal spanned by all-but-one basis vector
    json codim1 = {{"applicable", false}};
    for (int i = 0; i < g.dim(); ++i) {
      RatMat rows;
      for (int j = 0; j < g.dim(); ++j)
        if (j != i) rows.push_back(g.basis_vector(j));
      liealg::Subspace a = liealg::Subspace::span(g.dim(), rows);
      try {
        auto cls = liealg::classify_codim1_abelian(g, a, g.basis_vector(i));
        json blocks = json::array();
        for (int b : cls.profile.block_sizes) blocks.push_back(b);
        codim1 = {{"applicable", true},
                  {"Z", g.names()[i]},
                  {"nilpotent", cls.profile.nilpotent},
                  {"block_sizes", blocks},
                  {"verdict", cls.describe()}};
        if (cls.verdict == liealg::Codim1Verdict::kSingleBlockFiliform) {
          codim1["g_filiform"] = cls.g_filiform;
          codim1["n_euclid"] = cls.n_euclid;
        }
        break;
      } catch (const std::invalid_argument&) {
        // this basis split is not an abelian-ideal decomposition; keep trying
      }
    }
    out["codim1_abelian"] = codim1;
  }
  return out;
}

json run_cohomology(const std::string& rep_name, const std::string& spec, int degree) {
  liealg::LieAlgebra g = json_io::load_algebra(spec);
  cecoh::Representation rep =
      rep_name == "adjoint" ? cecoh::adjoint_rep(g) : cecoh::trivial_rep(g);
  if (!cecoh::homomorphism_check(rep))
    throw json_io::ParseError("representation fails the homomorphism check");
  auto dims = cecoh::cohomology_dim(rep, degree);
  return json{{"input", spec},     {"representation", rep_name}, {"degree", degree},
              {"dim_C", dims.dim_C}, {"dim_Z", dims.dim_Z},        {"dim_B", dims.dim_B},
              {"dim_H", dims.dim_H}};
}

json run_torus(const std::string& subcmd, const std::vector<std::string>& files,
               const Options& opt, int generator) {
  if (files.empty()) throw json_io::ParseError("torus: action file required");
  torus::TranslationAction act = json_io::load_action(files[0]);
  if (subcmd == "scan") {
    json out = dioph_json(torus::diophantine_scan(act, opt.tau, opt.radius));
    out["input"] = files[0];
    return out;
  }
  if (subcmd == "solve") {
    if (files.size() < 2) throw json_io::ParseError("torus solve: series file required");
    fourier::FourierSeries v =
        json_io::series_from_json(json_io::load_json_file(files[1]), act.d());
    torus::SolveResult sol;
    if (generator >= 0)
      sol = torus::solve_vectorfield(act, generator, v);
    else
      sol = torus::solve_laplacian(act, v);
    double residual = 0;
    if (generator < 0) {
      fourier::FourierSeries back = torus::apply_laplacian(act, sol.u);
      fourier::FourierSeries want = v;
      want.add_coeff(fourier::Freq(act.d(), 0), -sol.obstruction);
      double scale = std::max(1e-300, fourier::sobolev_norm(want, 0));
      residual = fourier::sobolev_norm(back - want, 0) / scale;
    }
    return json{{"input", files[0]},
                {"series", files[1]},
                {"operator", generator >= 0 ? "vectorfield" : "laplacian"},
                {"u", json_io::series_to_json(sol.u)},
                {"obstruction", {{"re", sol.obstruction.real()}, {"im", sol.obstruction.imag()}}},
                {"residual", residual}};
  }
  if (subcmd == "tame") {
    auto est = torus::tame_constant_estimate(act, opt.tau, opt.order, opt.trials, opt.radius,
                                             opt.seed);
    return json{{"input", files[0]},         {"tau", opt.tau},
                {"r", opt.order},            {"r0", est.r0},
                {"k_hat", est.k_hat},        {"empirical_C", est.empirical_C},
                {"analytic_bound", est.analytic_bound},
                {"within_bound", est.empirical_C <= est.analytic_bound}};
  }
  throw json_io::ParseError("unknown torus subcommand: " + subcmd);
}

json run_cochain(const std::string& subcmd, const std::vector<std::string>& files,
                 const Options& opt) {
  if (files.empty()) throw json_io::ParseError("cochain: action file required");
  torus::TranslationAction act = json_io::load_action(files[0]);
  if (subcmd == "hodge") {
    if (files.size() < 2) throw json_io::ParseError("cochain hodge: cochain file required");
    dyncoh::Cochain omega =
        json_io::cochain_from_json(json_io::load_json_file(files[1]), act);
    dyncoh::HodgeParts parts = dyncoh::hodge_decompose(omega);
    dyncoh::Cochain harm = parts.harmonic_cochain(act);
    dyncoh::Cochain recon = parts.exact + parts.coexact + harm;
    double ortho = std::max(
        {std::abs(dyncoh::inner_product(parts.exact, parts.coexact)),
         std::abs(dyncoh::inner_product(parts.exact, harm)),
         std::abs(dyncoh::inner_product(parts.coexact, harm))});
    json harmonic_dims = json::array();
    for (int l = 0; l <= act.k(); ++l)
      harmonic_dims.push_back(exterior::all_indices(act.k(), l).size());
    int harm_dim = static_cast<int>(parts.harmonic.coeffs().size());
    return json{{"input", files[0]},
                {"cochain", files[1]},
                {"degree", omega.degree()},
                {"norms",
                 {{"exact", dyncoh::sobolev_norm(parts.exact, 0)},
                  {"coexact", dyncoh::sobolev_norm(parts.coexact, 0)},
                  {"harmonic", dyncoh::sobolev_norm(harm, 0)}}},
                {"orthogonality_residual", ortho},
                {"reconstruction_residual", dyncoh::sobolev_norm(recon - omega, 0)},
                {"harmonic_nonzero_coeffs", harm_dim},
                {"harmonic_space_dims", harmonic_dims}};
  }
  if (subcmd == "roundtrip") {
    dyncoh::Cochain omega(act, 1);
    if (files.size() >= 2) {
      omega = json_io::cochain_from_json(json_io::load_json_file(files[1]), act);
      if (omega.degree() != 1) throw json_io::ParseError("roundtrip: degree-1 cochain required");
    } else {
      CounterRng rng(opt.seed);
      omega = dyncoh::random_closed_cochain(act, 1, 3, 4, rng);
    }
    auto sampler = [&](const std::vector<double>& t) { return dyncoh::cocycle_series(omega, t); };
    double err = 0;
    for (int j = 0; j < act.k(); ++j) {
      std::vector<double> X(act.k(), 0.0);
      X[j] = 1.0;
      fourier::FourierSeries rec = dyncoh::form_from_cocycle(sampler, X);
      err = std::max(err, fourier::sobolev_norm(rec - dyncoh::evaluate_on_vector(omega, X), 0));
    }
    // cocycle identity spot check
    CounterRng rng(opt.seed + 1);
    double ident = 0;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> t(act.k()), s(act.k()), x(act.d());
      for (auto& v : t) v = rng.next_sym();
      for (auto& v : s) v = rng.next_sym();
      for (auto& v : x) v = rng.next_unit();
      std::vector<double> ts(act.k());
      for (int i = 0; i < act.k(); ++i) ts[i] = t[i] + s[i];
      std::vector<double> xs = x;
      auto shift = act.rho(s);
      for (int i = 0; i < act.d(); ++i) xs[i] += shift[i];
      auto lhs = dyncoh::cocycle_from_form(omega, ts, x);
      auto rhs = dyncoh::cocycle_from_form(omega, t, xs) + dyncoh::cocycle_from_form(omega, s, x);
      ident = std::max(ident, std::abs(lhs - rhs));
    }
    return json{{"input", files[0]},
                {"roundtrip_error", err},
                {"cocycle_identity_residual", ident},
                {"seed", opt.seed}};
  }
  throw json_io::ParseError("unknown cochain subcommand: " + subcmd);
}

json run_heisenberg(const std::string& subcmd, const std::vector<std::string>& files,
                    const Options& opt) {
  if (subcmd == "witness") {
    heis::SchrodingerModel model(1, 1);
    heis::GridFunction v = heis::sample(model, [](const std::vector<double>& x) {
      double r2 = 0;
      for (double c : x) r2 += c * c;
      return std::exp(-r2);
    });
    auto res = heis::attempt_solve_multiplication(model, v);
    return json{{"model", {{"g", model.g}, {"k", model.k}, {"R", model.R}, {"h", model.h}}},
                {"obstructed", res.obstructed},
                {"witness_v0", res.witness_v0},
                {"verdict", res.obstructed ? "obstruction: v(0)=" + std::to_string(res.witness_v0)
                                           : "no obstruction"}};
  }
  if (subcmd == "check") {
    if (files.empty()) throw json_io::ParseError("heisenberg check: action file required");
    heis::HeisenbergAction act = [&]() {
      const std::string& spec = files[0];
      if (spec == "builtin:heis:xy")
        return heis::HeisenbergAction(1, {{1, 0, 0}, {0, 1, 0}});
      if (spec == "builtin:heis:golden")
        return heis::HeisenbergAction(1, {{1, torus::golden_ratio(), 0}, {0, 0, 1}});
      if (json_io::is_builtin(spec)) throw json_io::ParseError("unknown builtin: " + spec);
      return json_io::heisenberg_action_from_json(json_io::load_json_file(spec));
    }();
    auto rep = heis::heisenberg_gh_check(act, opt.tau, opt.radius);
    json out{{"input", files[0]},
             {"abelian_ok", rep.abelian_ok},
             {"independent_ok", rep.independent_ok},
             {"center_test", rep.center_ok ? "PASS" : "FAIL"},
             {"base_span_dim", rep.base_span_dim},
             {"base_scan", dioph_json(rep.base_scan)},
             {"verdict", rep.verdict}};
    if (rep.verdict != "passes necessary conditions at (tau, N)")
      throw MathObstruction(out.dump(2));
    return out;
  }
  throw json_io::ParseError("unknown heisenberg subcommand: " + subcmd);
}

json run_counterexample(const std::string& beta_str, const Options& opt) {
  Rational beta = parse_rational(beta_str);
  CounterRng rng(opt.seed);
  auto w = liealg::counterexample_g23(beta, rng.next_rational(), rng.next_rational(),
                                      rng.next_rational(), rng.next_rational());
  liealg::LieAlgebra g23 = liealg::free_nilpotent_2_3();
  json bracket = json::array();
  for (const auto& c : w.bracket) bracket.push_back(format_rational(c));
  json dims = json::array();
  for (const auto& s : liealg::lower_central_series(g23)) dims.push_back(s.dim());
  return json{{"beta", format_rational(beta)},
              {"bracket", bracket},
              {"basis", g23.names()},
              {"nonzero", w.nonzero},
              {"lower_central_series_dims", dims},
              {"center", subspace_json(liealg::center(g23))},
              {"verdict", w.nonzero ? "abelian lift impossible" : "degenerate"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations around globally hypoelliptic R^k-actions"};
  app.require_subcommand(1);
  Options opt;
  std::vector<std::string> files;
  std::string beta_str = "1";
  int generator = -1;

  auto* algebra = app.add_subcommand("algebra", "Lie algebra info and classification");
  algebra->require_subcommand(1);
  for (const char* sc : {"info", "classify"}) {
    auto* c = algebra->add_subcommand(sc);
    c->add_option("files", files, "algebra file or builtin:<name>")->expected(1);
    attach_common(c, opt);
  }

  auto* cohomology = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology dims");
  cohomology->require_subcommand(1);
  for (const char* sc : {"trivial", "adjoint"}) {
    auto* c = cohomology->add_subcommand(sc);
    c->add_option("files", files, "algebra file or builtin:<name>")->expected(1);
    attach_common(c, opt);
  }

  auto* torus_cmd = app.add_subcommand("torus", "diophantine scans and small-divisor solvers");
  torus_cmd->require_subcommand(1);
  for (const char* sc : {"scan", "solve", "tame"}) {
    auto* c = torus_cmd->add_subcommand(sc);
    c->add_option("files", files, "action [series] files")->expected(-1);
    attach_common(c, opt);
    c->add_option("--order", opt.order, "Sobolev order r");
    c->add_option("--trials", opt.trials, "random polynomial trials");
    c->add_option("--generator", generator, "solve the single-generator equation X_j u = v");
  }

  auto* cochain = app.add_subcommand("cochain", "Hodge decomposition and cocycle round-trip");
  cochain->require_subcommand(1);
  for (const char* sc : {"hodge", "roundtrip"}) {
    auto* c = cochain->add_subcommand(sc);
    c->add_option("files", files, "action [cochain] files")->expected(-1);
    attach_common(c, opt);
  }

  auto* heis_cmd = app.add_subcommand("heisenberg", "GH necessary conditions and obstruction");
  heis_cmd->require_subcommand(1);
  for (const char* sc : {"check", "witness"}) {
    auto* c = heis_cmd->add_subcommand(sc);
    c->add_option("files", files, "Heisenberg action file or builtin")->expected(-1);
    attach_common(c, opt);
  }

  auto* counter = app.add_subcommand("counterexample", "the g_{2,3} bracket obstruction");
  counter->add_option("--beta", beta_str, "rational parameter beta");
  attach_common(counter, opt);

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  json report;
  try {
    if (algebra->parsed())
      report = run_algebra(algebra->get_subcommands().front()->get_name(), files.at(0));
    else if (cohomology->parsed())
      report = run_cohomology(cohomology->get_subcommands().front()->get_name(), files.at(0),
                              opt.degree);
    else if (torus_cmd->parsed())
      report = run_torus(torus_cmd->get_subcommands().front()->get_name(), files, opt, generator);
    else if (cochain->parsed())
      report = run_cochain(cochain->get_subcommands().front()->get_name(), files, opt);
    else if (heis_cmd->parsed())
      report = run_heisenberg(heis_cmd->get_subcommands().front()->get_name(), files, opt);
    else if (counter->parsed())
      report = run_counterexample(beta_str, opt);
  } catch (const ResonanceError& e) {
    json err{{"error", "resonance"}, {"detail", e.what()}, {"frequency", e.frequency}};
    std::cerr << err.dump(2) << "\n";
    return 3;
  } catch (const MathObstruction& e) {
    std::cerr << json{{"error", "obstruction"}, {"detail", e.what()}}.dump(2) << "\n";
    return 3;
  } catch (const json_io::ParseError& e) {
    std::cerr << json{{"error", "input"}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "input"}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::out_of_range&) {
    std::cerr << json{{"error", "input"}, {"detail", "missing positional file"}}.dump(2) << "\n";
    return 2;
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  json cmdline = json::array();
  for (int i = 0; i < argc; ++i) cmdline.push_back(argv[i]);
  report["command"] = cmdline;
  // timing goes to stderr so the report stays byte-stable for fixed inputs
  std::cerr << "wall_ms " << elapsed.count() << "\n";
  try {
    emit(report, opt);
  } catch (const json_io::ParseError& e) {
    std::cerr << json{{"error", "input"}, {"detail", e.what()}}.dump(2) << "\n";
    return 2;
  }
  return 0;
}
