#pragma once

// Command-line front end. run() parses argv, dispatches one subcommand and
// emits JSON or CSV. Exit codes: 0 ok, 1 usage, 2 domain, 3 numerical.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rmspec/jost.hpp"
#include "rmspec/kink.hpp"
#include "rmspec/nu_reduction.hpp"
#include "rmspec/oracle.hpp"
#include "rmspec/spectrum.hpp"
#include "rmspec/validation.hpp"

namespace rmspec::cli {

using nlohmann::json;

inline constexpr double kDefaultQuadTol = 1e-10;

enum class Format { json, csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  double lo = -10.0;
  double hi = 10.0;
  int n = 401;

  std::vector<double> points() const {
    std::vector<double> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      z[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return z;
  }
};

/// "a:b:n" with a < b and n >= 2.
inline GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.n, &tail) != 3) {
    throw UsageError("grid must have the form a:b:n, got '" + text + "'");
  }
  if (!(g.lo < g.hi) || g.n < 2) {
    throw GridError("grid needs a < b and n >= 2");
  }
  return g;
}

struct RunConfig {
  std::string command;
  std::optional<double> v0;
  std::optional<double> mu;
  bool mu_ln2_half = false;
  std::optional<int> p;
  std::optional<int> n;
  std::optional<double> eps;
  std::optional<double> k;
  double phi1 = 1.0;
  int which = 1;
  std::string grid;
  std::string kgrid;
  std::string function = "gaussian";
  double k_max = 8.0;
  double dk = 0.05;
  Format format = Format::json;
  std::string output;
  double quad_tol = kDefaultQuadTol;
};

struct Emitted {
  json doc;
  std::string csv;
};

namespace detail {

inline json cjson(cplx c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline json skeleton() {
  return json{{"params", json::object()},
              {"derived", json::object()},
              {"discrete", json::array()},
              {"continuum_info", json::object()},
              {"diagnostics", json::object()}};
}

inline PotentialParams potential(const RunConfig& c) {
  if (!c.v0) throw UsageError("--v0 is required for " + c.command);
  double mu = 0.0;
  if (c.mu_ln2_half) {
    mu = 0.5 * std::numbers::ln2;
  } else if (c.mu) {
    mu = *c.mu;
  } else {
    throw UsageError("--mu or --mu-ln2-half is required for " + c.command);
  }
  return PotentialParams(*c.v0, mu);
}

inline json params_json(const PotentialParams& p) {
  return json{{"v0", p.v0()}, {"mu", p.mu()}};
}

inline json derived_json(const PotentialParams& p) {
  return json{{"v_minus", p.v_minus()},
              {"v_plus", p.v_plus()},
              {"v_c", p.v_c()},
              {"n_cap", p.n_cap()},
              {"kappa_transition", p.kappa_transition()},
              {"n_b", bound_states(p).size()}};
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Emitted cmd_spectrum(const RunConfig& c) {
  const PotentialParams p = detail::potential(c);
  const auto bs = bound_states(p);
  Emitted e{detail::skeleton(), ""};
  e.doc["params"] = detail::params_json(p);
  e.doc["derived"] = detail::derived_json(p);
  json eps_list = json::array();
  json norm_dev = json::array();
  std::string csv = "n,eps,a,b,norm\n";
  for (const auto& st : bs) {
    e.doc["discrete"].push_back({{"n", st.n},
                                 {"eps", st.eps},
                                 {"a", st.a},
                                 {"b", st.b},
                                 {"norm", st.norm},
                                 {"decay_left", st.b - st.a},
                                 {"decay_right", st.b + st.a}});
    eps_list.push_back(st.eps);
    const double zmax = 40.0 / std::min(st.b - st.a, 1.0);
    const double v = quad::integrate(
        [&](double z) {
          const double f = eval_bound(p, st, z);
          return f * f;
        },
        -zmax, zmax, c.quad_tol, 20000);
    norm_dev.push_back(std::abs(v - 1.0));
    csv += std::to_string(st.n) + "," + detail::num(st.eps) + "," +
           detail::num(st.a) + "," + detail::num(st.b) + "," +
           detail::num(st.norm) + "\n";
  }
  e.doc["derived"]["eps"] = eps_list;
  const auto vm = special_state_vminus(p);
  e.doc["continuum_info"] = {
      {"reflecting", {{"from", p.v_minus()}, {"to", p.v_plus()}}},
      {"free_from", p.v_plus()},
      {"v_minus_in_spectrum", vm.has_value()},
      {"v_minus_state_l", vm ? json(vm->l) : json(nullptr)},
      {"v_plus_in_spectrum", true}};
  const oracle::FdGrid box;
  const auto sys = oracle::discretize(p, box);
  e.doc["diagnostics"] = {
      {"quad_tol", c.quad_tol},
      {"norm_deviation", norm_dev},
      {"fd_box", {box.z_min, box.z_max, box.n_points}},
      {"fd_eigenvalues", oracle::eigenvalues_below(sys, p.v_minus())},
      {"fd_count_below_v_minus", oracle::sturm_count(sys, p.v_minus())}};
  e.csv = csv;
  return e;
}

inline Emitted cmd_eigenfunction(const RunConfig& c) {
  const PotentialParams p = detail::potential(c);
  if (c.n.has_value() == c.eps.has_value()) {
    throw UsageError("eigenfunction needs exactly one of --n or --eps");
  }
  const GridSpec g = c.grid.empty() ? GridSpec{} : parse_grid(c.grid);
  const std::vector<double> z = g.points();
  std::vector<cplx> psi(z.size());
  Emitted e{detail::skeleton(), ""};
  e.doc["params"] = detail::params_json(p);
  e.doc["derived"] = detail::derived_json(p);
  double eps = 0.0;
  json info;
  if (c.n) {
    const auto bs = bound_states(p);
    if (*c.n < 0 || static_cast<std::size_t>(*c.n) >= bs.size()) {
      throw DomainError("--n must satisfy 0 <= n < n_b = " +
                        std::to_string(bs.size()));
    }
    const BoundState& st = bs[static_cast<std::size_t>(*c.n)];
    eps = st.eps;
    for (std::size_t i = 0; i < z.size(); ++i) psi[i] = eval_bound(p, st, z[i]);
    info = {{"kind", "bound"}, {"n", st.n}, {"eps", st.eps}, {"norm", st.norm}};
  } else {
    eps = *c.eps;
    const RegionTag region = classify(p, eps);
    info = {{"kind", std::string(to_string(region))}, {"eps", eps}};
    switch (region) {
      case RegionTag::ZeroState:
      case RegionTag::BoundRegion:
        throw DomainError(
            "eps lies below v_minus: only the bound energies are eigenvalues; "
            "use --n");
      case RegionTag::SpecialVminus: {
        const auto st = special_state_vminus(p);
        if (!st) {
          throw DomainError(
              "eps = v_minus is not in the spectrum for these parameters");
        }
        eps = p.v_minus();
        for (std::size_t i = 0; i < z.size(); ++i) psi[i] = (*st)(z[i]);
        info["l"] = st->l;
        break;
      }
      default: {
        const ContinuumParams cp = continuum_params(p, eps);
        eps = cp.eps;
        for (std::size_t i = 0; i < z.size(); ++i) {
          psi[i] = eval_unbound(p, eps, c.which, z[i]);
        }
        info["which"] = c.which;
        info["alpha"] = detail::cjson(cp.alpha);
        info["beta"] = detail::cjson(cp.beta);
        info["gamma"] = detail::cjson(cp.gamma);
        break;
      }
    }
  }
  json samples = json::array();
  std::string csv = "z,psi_re,psi_im\n";
  for (std::size_t i = 0; i < z.size(); ++i) {
    samples.push_back({{"z", z[i]}, {"psi", detail::cjson(psi[i])}});
    csv += detail::num(z[i]) + "," + detail::num(psi[i].real()) + "," +
           detail::num(psi[i].imag()) + "\n";
  }
  info["samples"] = samples;
  if (c.n) {
    e.doc["discrete"].push_back(info);
  } else {
    e.doc["continuum_info"] = info;
  }
  if (z.size() >= 3) {
    const oracle::FdGrid fg(g.lo, g.hi, g.n);
    e.doc["diagnostics"]["fd_residual"] =
        oracle::residual(p, eps, std::span<const cplx>(psi), fg);
  }
  e.csv = csv;
  return e;
}

inline Emitted cmd_continuum(const RunConfig& c) {
  const PotentialParams p = detail::potential(c);
  if (!c.k) throw UsageError("--k is required for continuum");
  const GridSpec g = c.grid.empty() ? GridSpec{} : parse_grid(c.grid);
  const ContinuumBasis basis(p, *c.k);
  const JostAssembly& j = basis.jost_data();
  const std::size_t m = basis.multiplicity();
  Emitted e{detail::skeleton(), ""};
  e.doc["params"] = detail::params_json(p);
  e.doc["derived"] = detail::derived_json(p);
  std::string csv = m == 1 ? "z,u0_re,u0_im\n" : "z,u1_re,u1_im,u2_re,u2_im\n";
  json samples = json::array();
  for (double z : g.points()) {
    const auto u = basis(z);
    json row = {{"z", z}, {"u", json::array()}};
    csv += detail::num(z);
    for (const cplx& v : u) {
      row["u"].push_back(detail::cjson(v));
      csv += "," + detail::num(v.real()) + "," + detail::num(v.imag());
    }
    csv += "\n";
    samples.push_back(row);
  }
  e.doc["continuum_info"] = {{"k", j.k},
                             {"k1", detail::cjson(j.k1)},
                             {"eps", j.params.eps},
                             {"region", std::string(to_string(j.params.region))},
                             {"multiplicity", m},
                             {"labels", m == 1 ? json{"u0"} : json{"u1", "u2"}},
                             {"c_k", detail::cjson(j.c_k)},
                             {"samples", samples}};
  e.csv = csv;
  return e;
}

inline Emitted cmd_jost(const RunConfig& c) {
  const PotentialParams p = detail::potential(c);
  std::vector<double> ks;
  if (c.k && !c.kgrid.empty()) {
    throw UsageError("jost takes --k or --kgrid, not both");
  }
  if (c.k) {
    ks.push_back(*c.k);
  } else if (!c.kgrid.empty()) {
    ks = parse_grid(c.kgrid).points();
  } else {
    throw UsageError("jost needs --k or --kgrid");
  }
  Emitted e{detail::skeleton(), ""};
  e.doc["params"] = detail::params_json(p);
  e.doc["derived"] = detail::derived_json(p);
  json rows = json::array();
  std::string csv = "k,c_re,c_im\n";
  for (double k : ks) {
    const JostAssembly j = jost(p, k);
    const cplx w0 = j.wronskian_at(0.0);
    const double wvar = std::max(std::abs(j.wronskian_at(-2.0) - w0),
                                 std::abs(j.wronskian_at(2.0) - w0));
    rows.push_back(
        {{"k", k},
         {"k1", detail::cjson(j.k1)},
         {"eps", j.params.eps},
         {"region", std::string(to_string(j.params.region))},
         {"c_k", detail::cjson(j.c_k)},
         {"gamma1", detail::cjson(j.gamma1)},
         {"gamma2", detail::cjson(j.gamma2)},
         {"gamma1_primed",
          j.gamma1_primed ? detail::cjson(*j.gamma1_primed) : json(nullptr)},
         {"gamma2_primed",
          j.gamma2_primed ? detail::cjson(*j.gamma2_primed) : json(nullptr)},
         {"wronskian_variation", wvar}});
    csv += detail::num(k) + "," + detail::num(j.c_k.real()) + "," +
           detail::num(j.c_k.imag()) + "\n";
  }
  e.doc["continuum_info"]["jost"] = rows;
  e.csv = csv;
  return e;
}

inline Emitted cmd_expand(const RunConfig& c) {
  const PotentialParams p = detail::potential(c);
  const GridSpec g = c.grid.empty() ? GridSpec{-20.0, 20.0, 4001}
                                    : parse_grid(c.grid);
  if (g.n < 3) throw GridError("expand needs at least 3 grid points");
  if (!(c.dk > 0.0) || !(c.k_max > c.dk)) {
    throw GridError("expand needs 0 < dk < k_max");
  }
  const std::vector<double> z = g.points();
  std::vector<double> phi(z.size());
  if (c.function == "gaussian") {
    for (std::size_t i = 0; i < z.size(); ++i) phi[i] = std::exp(-z[i] * z[i]);
  } else if (c.function == "bound") {
    const auto bs = bound_states(p);
    const int n = c.n.value_or(0);
    if (n < 0 || static_cast<std::size_t>(n) >= bs.size()) {
      throw DomainError("--n must satisfy 0 <= n < n_b for --function bound");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
      phi[i] = eval_bound(p, bs[static_cast<std::size_t>(n)], z[i]);
    }
  } else {
    throw UsageError("--function must be gaussian or bound");
  }
  std::vector<double> kg;
  for (double k = 0.5 * c.dk; k < c.k_max; k += c.dk) kg.push_back(k);
  const ExpansionResult r = expand(p, z, phi, kg);

  Emitted e{detail::skeleton(), ""};
  e.doc["params"] = detail::params_json(p);
  e.doc["params"]["function"] = c.function;
  e.doc["derived"] = detail::derived_json(p);
  for (std::size_t i = 0; i < r.bound_coefficients.size(); ++i) {
    e.doc["discrete"].push_back({{"n", i}, {"coefficient", r.bound_coefficients[i]}});
  }
  json coeffs = json::array();
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    json cs = json::array();
    for (const cplx& v : r.continuum_coefficients[i]) cs.push_back(detail::cjson(v));
    coeffs.push_back({{"k", r.k[i]}, {"c", cs}});
  }
  e.doc["continuum_info"] = {{"k_max", c.k_max},
                             {"dk", c.dk},
                             {"n_k", r.k.size()},
                             {"continuum_weight", r.continuum_weight},
                             {"max_coefficient", r.max_continuum_coefficient},
                             {"coefficients", coeffs}};
  e.doc["diagnostics"] = {{"relative_l2_error", r.relative_l2_error}};
  std::string csv = "z,phi,recon_re,recon_im\n";
  for (std::size_t i = 0; i < z.size(); ++i) {
    csv += detail::num(z[i]) + "," + detail::num(phi[i]) + "," +
           detail::num(r.reconstruction[i].real()) + "," +
           detail::num(r.reconstruction[i].imag()) + "\n";
  }
  e.csv = csv;
  return e;
}

inline Emitted cmd_nu_reduce(const RunConfig& c) {
  const PotentialParams p = detail::potential(c);
  if (!c.eps) throw UsageError("--eps is required for nu-reduce");
  const double eps = *c.eps;
  const nu::GhePolys g = nu::build_ghe(p, eps);
  Emitted e{detail::skeleton(), ""};
  e.doc["params"] = detail::params_json(p);
  e.doc["params"]["eps"] = eps;
  json br = json::array();
  json res = json::array();
  std::string csv =
      "j,a_re,a_im,b_re,b_im,k_re,k_im,lambda_re,lambda_im,tau_criterion\n";
  for (const auto& b : nu::solve_pi_branches(p, eps)) {
    double worst = 0.0;
    for (const cplx& x : nu::branch_residual(g, b)) worst = std::max(worst, std::abs(x));
    const bool ok = nu::satisfies_tau_criterion(b);
    br.push_back({{"j", b.j},
                  {"a", detail::cjson(b.a)},
                  {"b", detail::cjson(b.b)},
                  {"k", detail::cjson(b.k)},
                  {"lambda", detail::cjson(b.lambda)},
                  {"tau_slope", detail::cjson(b.tau_slope())},
                  {"tau_criterion", ok}});
    res.push_back(worst);
    csv += std::to_string(b.j);
    for (const cplx& x : {b.a, b.b, b.k, b.lambda}) {
      csv += "," + detail::num(x.real()) + "," + detail::num(x.imag());
    }
    csv += std::string(",") + (ok ? "1" : "0") + "\n";
  }
  e.doc["derived"] = {
      {"kappa_plus", detail::cjson(nu::kappa_plus(p, eps))},
      {"kappa_minus", detail::cjson(nu::kappa_minus(p, eps))},
      {"region", std::string(to_string(classify(p, eps)))},
      {"ghe",
       {{"tau_tilde", g.tau_tilde}, {"sigma", g.sigma}, {"sigma_tilde", g.sigma_tilde}}},
      {"branches", br}};
  e.doc["diagnostics"] = {{"branch_residual_max", res}};
  e.csv = csv;
  return e;
}

inline Emitted cmd_kink(const RunConfig& c) {
  if (!c.p) throw UsageError("--p is required for kink");
  const kink::KinkModel m(*c.p, c.phi1);
  const kink::StabilityReport r = kink::analyze(m);
  const PotentialParams pp = m.mapped_params();
  Emitted e{detail::skeleton(), ""};
  e.doc["params"] = {{"p", m.p()}, {"phi1", m.phi1()}};
  e.doc["derived"] = {{"mapped_v0", m.mapped_v0()},
                      {"mapped_mu", m.mapped_mu()},
                      {"eps_shift", m.eps_shift()},
                      {"omega_ph_sq", m.omega_ph_sq()},
                      {"v_minus", pp.v_minus()},
                      {"v_plus", pp.v_plus()},
                      {"n_cap", pp.n_cap()},
                      {"n_bound", r.n_bound},
                      {"eps0", r.goldstone_eps},
                      {"a0", r.a0},
                      {"b0", r.b0},
                      {"goldstone_omega_sq", r.goldstone_omega_sq},
                      {"stable", r.stable}};
  std::string csv = "n,eps,lambda_sq,omega_sq\n";
  for (const auto& mode : r.modes) {
    e.doc["discrete"].push_back({{"n", mode.n},
                                 {"eps", mode.eps},
                                 {"lambda_sq", mode.lambda_sq},
                                 {"omega_sq", mode.omega_sq}});
    csv += std::to_string(mode.n) + "," + detail::num(mode.eps) + "," +
           detail::num(mode.lambda_sq) + "," + detail::num(mode.omega_sq) + "\n";
  }
  e.doc["continuum_info"] = {{"omega_sq_floor", r.continuum_floor_omega_sq},
                             {"floor_is_open", true}};
  e.doc["diagnostics"] = {{"warning", r.warning ? json(*r.warning) : json(nullptr)}};
  e.csv = csv;
  return e;
}

inline Emitted cmd_validate(const RunConfig& c, bool& all_pass) {
  validation::Options opt;
  opt.quad_tol = std::min(c.quad_tol, opt.quad_tol);
  const auto results = validation::run_all(opt);
  Emitted e{detail::skeleton(), ""};
  json checks = json::array();
  std::string csv = "id,name,pass,seconds\n";
  all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"pass", r.pass},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
    csv += std::to_string(r.id) + "," + r.name + "," + (r.pass ? "1" : "0") +
           "," + detail::num(r.seconds) + "\n";
  }
  e.doc["diagnostics"] = {{"checks", checks}, {"all_pass", all_pass}};
  e.csv = csv;
  return e;
}

// ---------------------------------------------------------------------------

inline void add_common(CLI::App* sub, RunConfig& cfg, bool potential) {
  if (potential) {
    auto* mu = sub->add_option("--mu", cfg.mu, "asymmetry parameter mu >= 0");
    sub->add_option("--v0", cfg.v0, "well depth v0 > 0");
    sub->add_flag("--mu-ln2-half", cfg.mu_ln2_half, "set mu = ln(2)/2")
        ->excludes(mu);
  }
  sub->add_option("--output-format", cfg.format, "json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::json}, {"csv", Format::csv}}));
  sub->add_option("--output", cfg.output, "write to this path instead of stdout");
}

/// Parses and runs one command. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  RunConfig cfg;
  if (const char* t = std::getenv("RMSPEC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(t, &end);
    if (end == t || *end != '\0' || !(v > 0.0)) {
      err << "rmspec: RMSPEC_TOL must be a positive number\n";
      return 1;
    }
    cfg.quad_tol = v;
  }

  CLI::App app{"Rosen-Morse spectral toolkit"};
  app.require_subcommand(1, 1);
  auto* spectrum = app.add_subcommand("spectrum", "bound states and thresholds");
  add_common(spectrum, cfg, true);

  auto* eig = app.add_subcommand("eigenfunction", "tabulate an eigenfunction");
  add_common(eig, cfg, true);
  eig->add_option("--n", cfg.n, "bound-state index");
  eig->add_option("--eps", cfg.eps, "continuum energy");
  eig->add_option("--which", cfg.which, "unbound solution 1 or 2")
      ->check(CLI::IsMember({1, 2}));
  eig->add_option("--grid", cfg.grid, "z grid a:b:n");

  auto* cont = app.add_subcommand("continuum", "normalized continuum eigenfunctions");
  add_common(cont, cfg, true);
  cont->add_option("--k", cfg.k, "momentum k > 0");
  cont->add_option("--grid", cfg.grid, "z grid a:b:n");

  auto* jst = app.add_subcommand("jost", "Jost data and transmission coefficient");
  add_common(jst, cfg, true);
  jst->add_option("--k", cfg.k, "momentum k > 0");
  jst->add_option("--kgrid", cfg.kgrid, "momentum grid a:b:n");

  auto* exp = app.add_subcommand("expand", "eigenfunction expansion of a test function");
  add_common(exp, cfg, true);
  exp->add_option("--function", cfg.function, "gaussian or bound");
  exp->add_option("--n", cfg.n, "bound-state index for --function bound");
  exp->add_option("--grid", cfg.grid, "z grid a:b:n");
  exp->add_option("--kmax", cfg.k_max, "largest momentum");
  exp->add_option("--dk", cfg.dk, "momentum step");

  auto* nur = app.add_subcommand("nu-reduce", "Nikiforov-Uvarov branches");
  add_common(nur, cfg, true);
  nur->add_option("--eps", cfg.eps, "energy");

  auto* knk = app.add_subcommand("kink", "phi^{2p+2} kink stability");
  add_common(knk, cfg, false);
  knk->add_option("--p", cfg.p, "integer p >= 1");
  knk->add_option("--phi1", cfg.phi1, "phi1 > 0");

  auto* val = app.add_subcommand("validate", "run the acceptance checks");
  add_common(val, cfg, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Emitted em;
    bool ok = true;
    if (cfg.command == "spectrum") em = cmd_spectrum(cfg);
    else if (cfg.command == "eigenfunction") em = cmd_eigenfunction(cfg);
    else if (cfg.command == "continuum") em = cmd_continuum(cfg);
    else if (cfg.command == "jost") em = cmd_jost(cfg);
    else if (cfg.command == "expand") em = cmd_expand(cfg);
    else if (cfg.command == "nu-reduce") em = cmd_nu_reduce(cfg);
    else if (cfg.command == "kink") em = cmd_kink(cfg);
    else em = cmd_validate(cfg, ok);

    const std::string text =
        cfg.format == Format::json ? em.doc.dump(2) + "\n" : em.csv;
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream f(cfg.output);
      if (!f || !(f << text)) {
        err << "rmspec: cannot write " << cfg.output << "\n";
        return 2;
      }
    }
    if (!ok) {
      err << "rmspec: validation failed\n";
      return 3;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "rmspec: usage: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "rmspec: domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "rmspec: numerical error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace rmspec::cli
