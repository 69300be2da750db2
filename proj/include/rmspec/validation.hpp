#pragma once

// Acceptance checks shared by the acceptance test binary and `rmspec validate`.
// Each check is self-contained (fixed fixtures, fixed RNG seeds) and reports
// a pass flag plus a one-line measured summary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rmspec/jost.hpp"
#include "rmspec/kink.hpp"
#include "rmspec/nu_reduction.hpp"
#include "rmspec/oracle.hpp"
#include "rmspec/spectrum.hpp"

namespace rmspec::validation {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  double quad_tol = 1e-12;
};

inline const double kMuLn2Half = 0.5 * std::numbers::ln2;

inline PotentialParams example1() { return {1.0, kMuLn2Half}; }
inline PotentialParams example2() { return {2.0 / 3.0, kMuLn2Half}; }

namespace detail {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

inline double dist_to_integer(double x) { return std::abs(x - std::round(x)); }

/// Box [-30/d, 30/d] for the slowest-decaying bound state, at the default
/// spacing h = 60/3999 or finer.
inline oracle::FdGrid scaled_box(const PotentialParams& p) {
  const auto bs = bound_states(p);
  double d = 1.0;
  for (const auto& st : bs) d = std::min(d, st.b - st.a);
  const double z = 30.0 / d;
  const int n = std::max(4000, static_cast<int>(2.0 * z * 3999.0 / 60.0) + 1);
  return {-z, z, n};
}

inline std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    z[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  return z;
}

inline std::vector<double> kgrid(double k_max, double dk) {
  std::vector<double> k;
  for (double x = 0.5 * dk; x < k_max; x += dk) k.push_back(x);
  return k;
}

}  // namespace detail

// 1 ------------------------------------------------------------------------
inline CheckResult check_example1(const Options& = {}) {
  CheckResult r{1, "example-1 reproduction", false, "", 0.0};
  const PotentialParams p = example1();
  const auto bs = bound_states(p);
  const double eps_exact = (2.0 * std::sqrt(22.0) - 5.0) / 9.0;
  const double b0 = (std::sqrt(5.5) - 1.0) / 2.0;
  const double a0 = 3.0 / (8.0 * b0);
  const ContinuumParams cvm = continuum_params(p, p.v_minus());
  const double alpha_vm = cvm.alpha.real();
  const double printed = (std::sqrt(11.0) - std::sqrt(3.0)) / std::sqrt(2.0);
  const bool have = bs.size() == 1;
  const double de = have ? std::abs(bs[0].eps - eps_exact) : 1.0;
  const double db = have ? std::abs(bs[0].b - b0) : 1.0;
  const double da = have ? std::abs(bs[0].a - a0) : 1.0;
  const bool thresholds = std::abs(p.v_minus() - 0.5) < 1e-14 &&
                          std::abs(p.v_plus() - 2.0) < 1e-14;
  const bool alpha_ok = std::abs(alpha_vm + p.n_cap()) < 1e-12 &&
                        std::abs(1.0 - 2.0 * alpha_vm - printed) < 1e-12 &&
                        detail::dist_to_integer(alpha_vm) > 1e-6 &&
                        detail::dist_to_integer(printed) > 1e-6 &&
                        !special_state_vminus(p).has_value();
  r.pass = thresholds && have && de < 1e-14 && db < 1e-14 && da < 1e-14 &&
           alpha_ok;
  r.detail = detail::fmt(
      "v-=%.17g v+=%.17g n_b=%zu |de0|=%.1e |db0|=%.1e |da0|=%.1e "
      "alpha(v-)=%.12f (1-2alpha=%.12f) v- in Sigma: %s",
      p.v_minus(), p.v_plus(), bs.size(), de, db, da, alpha_vm,
      1.0 - 2.0 * alpha_vm, special_state_vminus(p) ? "yes" : "no");
  return r;
}

// 2 ------------------------------------------------------------------------
inline CheckResult check_example2(const Options& = {}) {
  CheckResult r{2, "example-2 reproduction", false, "", 0.0};
  const PotentialParams p = example2();
  const auto bs = bound_states(p);
  const auto st = special_state_vminus(p);
  const ContinuumParams cvm = continuum_params(p, p.v_minus());
  const bool tagged = classify(p, 1.0 / 3.0) == RegionTag::SpecialVminus;
  double worst_tab = 0.0;
  double worst_hyp = 0.0;
  if (st) {
    const double c_tab = (*st)(0.0);
    const double c_hyp = psi1(cvm, 0.0).real();
    for (int i = 0; i < 100; ++i) {
      const double z = -10.0 + 20.0 * i / 99.0;
      const double ref = std::exp(-0.5 * z - 0.5 * rmspec::detail::log_cosh(z));
      worst_tab = std::max(worst_tab, std::abs((*st)(z) / (c_tab * ref) - 1.0));
      worst_hyp = std::max(worst_hyp,
                           std::abs(psi1(cvm, z) / (c_hyp * ref) - 1.0));
    }
  }
  r.pass = bs.empty() && std::abs(p.n_cap()) < 1e-12 && tagged && st &&
           st->l == 0 && worst_tab < 1e-10 && worst_hyp < 1e-10;
  r.detail = detail::fmt(
      "n_b=%zu N=%.1e v- state=%s l=%d shape dev (tabulated %.1e, "
      "hypergeometric %.1e)",
      bs.size(), p.n_cap(), st ? "present" : "absent", st ? st->l : -1,
      worst_tab, worst_hyp);
  return r;
}

// 3 ------------------------------------------------------------------------
inline CheckResult check_oracle(const Options& = {}) {
  CheckResult r{3, "finite-difference oracle agreement", false, "", 0.0};
  const PotentialParams p1 = example1();
  const PotentialParams p2 = example2();
  const oracle::FdGrid box;  // [-30, 30], 4000 points
  const auto sys1 = oracle::discretize(p1, box);
  const auto ev = oracle::eigenvalues_below(sys1, p1.v_minus());
  const double eps0 = bound_states(p1).at(0).eps;
  const double d0 = ev.empty() ? 1.0 : std::abs(ev[0] - eps0);
  const std::size_t c1 = oracle::sturm_count(sys1, p1.v_minus());
  const std::size_t c2 =
      oracle::sturm_count(oracle::discretize(p2, box), p2.v_minus());
  bool ok = d0 < 1e-4 && c1 == 1 && c2 == 0;

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> uv0(0.5, 30.0);
  std::uniform_real_distribution<double> umu(0.0, 1.5);
  int tested = 0;
  int matched = 0;
  double worst_eps = 0.0;
  while (tested < 50) {
    const PotentialParams p(uv0(rng), umu(rng));
    const auto bs = bound_states(p);
    if (bs.empty() || bs.size() > 3) continue;
    if (bs.back().b - bs.back().a < 0.05) continue;
    ++tested;
    const auto sys = oracle::discretize(p, detail::scaled_box(p));
    const auto evs = oracle::eigenvalues_below(sys, p.v_minus());
    if (evs.size() == bs.size()) {
      ++matched;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        worst_eps = std::max(worst_eps, std::abs(evs[i] - bs[i].eps));
      }
    }
  }
  r.pass = ok && matched == tested;
  r.detail = detail::fmt(
      "ex1 |eps_fd-eps0|=%.2e count(ex1)=%zu count(ex2)=%zu random sets "
      "%d/%d counts match (info: max |eps_fd-eps_n|=%.1e at h=0.015)",
      d0, c1, c2, matched, tested, worst_eps);
  return r;
}

// 4 ------------------------------------------------------------------------
inline CheckResult check_kink(const Options& = {}) {
  CheckResult r{4, "kink stability suite p=2..10", false, "", 0.0};
  bool ok = true;
  double worst_rational = 0.0;
  double worst_omega = 0.0;
  double worst_shape = 0.0;
  for (int p = 2; p <= 10; ++p) {
    const kink::KinkModel m(p, 1.0);
    const auto rep = kink::analyze(m);
    const double dp = p;
    // Lambda^2 = eps0 - v- = [(p+5)p^2 - (p+2)^2(p+1)] / (p^2(2p+1)) in
    // integers, numerator must be -4(2p+1).
    const long num = (p + 5L) * p * p - (p + 2L) * (p + 2L) * (p + 1L);
    ok = ok && num == -4L * (2L * p + 1L);
    ok = ok && rep.n_bound == 1 && rep.stable && !rep.warning;
    if (rep.n_bound != 1) continue;
    const PotentialParams pp = m.mapped_params();
    const double lam2 = rep.modes[0].lambda_sq;
    worst_rational = std::max(
        {worst_rational, std::abs(rep.goldstone_eps - (dp + 5.0) / (2.0 * dp + 1.0)),
         std::abs(rep.a0 - (dp - 1.0) / dp), std::abs(rep.b0 - (dp + 1.0) / dp),
         std::abs(lam2 + 4.0 / (dp * dp))});
    worst_omega = std::max(worst_omega, std::abs(rep.goldstone_omega_sq));
    const BoundState st = bound_states(pp).front();
    const double c = eval_bound(pp, st, 0.0) / kink::kink_slope(m, 0.0);
    for (int i = 0; i <= 200; ++i) {
      const double z = -10.0 + 0.1 * i;
      worst_shape = std::max(
          worst_shape,
          std::abs(eval_bound(pp, st, z) / (c * kink::kink_slope(m, z)) - 1.0));
    }
  }
  r.pass = ok && worst_rational < 1e-12 && worst_omega < 1e-12 &&
           worst_shape < 1e-10;
  r.detail = detail::fmt(
      "max dev eps0/a0/b0/Lambda^2=%.1e |omega_G^2|<=%.1e psi0 vs dphi/dz "
      "rel dev=%.1e verdicts %s",
      worst_rational, worst_omega, worst_shape, ok ? "stable" : "FAILED");
  return r;
}

// 5 ------------------------------------------------------------------------
inline CheckResult check_normalization(const Options& opt = {}) {
  CheckResult r{5, "normalization and orthogonality", false, "", 0.0};
  const PotentialParams p(20.0, 0.1);
  const auto bs = bound_states(p);
  double d = 1.0;
  for (const auto& st : bs) d = std::min(d, st.b - st.a);
  const double zmax = 40.0 / d;
  double worst_norm = 0.0;
  double worst_overlap = 0.0;
  double worst_closed = 0.0;
  for (std::size_t m = 0; m < bs.size(); ++m) {
    for (std::size_t n = m; n < bs.size(); ++n) {
      const double v = quad::integrate(
          [&](double z) { return eval_bound(p, bs[m], z) * eval_bound(p, bs[n], z); },
          -zmax, zmax, opt.quad_tol, 20000);
      if (m == n) {
        worst_norm = std::max(worst_norm, std::abs(v - 1.0));
        if (bs[m].n <= 3) {
          // Normalizer from quadrature of the unnormalized shape.
          const double n_quad = bs[m].norm / std::sqrt(v);
          worst_closed = std::max(worst_closed,
                                  std::abs(n_quad / bs[m].norm - 1.0));
        }
      } else {
        worst_overlap = std::max(worst_overlap, std::abs(v));
      }
    }
  }
  r.pass = bs.size() >= 2 && worst_norm < 1e-10 && worst_overlap < 1e-8 &&
           worst_closed < 1e-9;
  r.detail = detail::fmt(
      "n_b=%zu max|<psi_n,psi_n>-1|=%.1e max|<psi_m,psi_n>|=%.1e closed-form "
      "N_n vs quadrature rel=%.1e",
      bs.size(), worst_norm, worst_overlap, worst_closed);
  return r;
}

// 6 ------------------------------------------------------------------------
inline CheckResult check_residuals(const Options& = {}) {
  CheckResult r{6, "ODE residuals of emitted eigenfunctions", false, "", 0.0};
  const oracle::FdGrid grid(-8.0, 8.0, 16001);  // h = 1e-3
  double worst = 0.0;
  int count = 0;
  auto record = [&](double v) {
    worst = std::max(worst, v);
    ++count;
  };
  auto cres = [&](const PotentialParams& p, double eps, auto&& f) {
    const auto s = oracle::sample(f, grid);
    using T = typename decltype(s)::value_type;
    return oracle::residual(p, eps, std::span<const T>(s), grid);
  };

  for (const PotentialParams& p :
       {example1(), PotentialParams(6.0, 0.0), PotentialParams(12.0, 0.4)}) {
    for (const auto& st : bound_states(p)) {
      record(cres(p, st.eps, [&](double z) { return eval_bound(p, st, z); }));
    }
  }
  // Deep well (v0 = 20): the 3-point stencil's h^2 (v - eps)^2 / 12 error
  // exceeds 1e-5 at h = 1e-3 for the upper states. Reported, not gated; the
  // h -> h/2 ratio shows it is truncation, not an eigenfunction error.
  const PotentialParams deep(20.0, 0.1);
  const BoundState top = bound_states(deep).back();
  auto top_fn = [&](double z) { return eval_bound(deep, top, z); };
  const double deep_h = cres(deep, top.eps, top_fn);
  const oracle::FdGrid half(-8.0, 8.0, 32001);
  const auto sh = oracle::sample(top_fn, half);
  const double deep_h2 =
      oracle::residual(deep, top.eps, std::span<const double>(sh), half);
  const PotentialParams p = example1();
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u2(p.v_minus(), p.v_plus());
  std::uniform_real_distribution<double> u3(p.v_plus(), p.v_plus() + 4.0);
  double worst_r2 = 0.0;
  double worst_r3 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double e2 = u2(rng);
    const ContinuumParams c2 = continuum_params(p, e2);
    const double v2 = cres(p, c2.eps, [&](double z) { return psi1(c2, z); });
    worst_r2 = std::max(worst_r2, v2);
    record(v2);
    const double e3 = u3(rng);
    const ContinuumParams c3 = continuum_params(p, e3);
    const double v3a = cres(p, c3.eps, [&](double z) { return psi1(c3, z); });
    const double v3b = cres(p, c3.eps, [&](double z) { return psi2(c3, z); });
    worst_r3 = std::max({worst_r3, v3a, v3b});
    record(v3a);
    record(v3b);
  }
  const VPlusState vp = special_state_vplus(p);
  const double r_vp = cres(p, p.v_plus(), [&](double z) { return vp(z); });
  record(r_vp);
  const PotentialParams q = example2();
  double r_vm = 1.0;
  if (const auto vm = special_state_vminus(q)) {
    r_vm = cres(q, q.v_minus(), [&](double z) { return (*vm)(z); });
    record(r_vm);
  }
  r.pass = worst < 1e-5;
  r.detail = detail::fmt(
      "%d eigenfunctions, max residual=%.2e (R2 %.1e, R3 %.1e, v+ %.1e, "
      "v- %.1e); info: v0=20 n=%d residual %.2e at h=1e-3, ratio %.2f at h/2",
      count, worst, worst_r2, worst_r3, r_vp, r_vm, top.n, deep_h,
      deep_h / deep_h2);
  return r;
}

// 7 ------------------------------------------------------------------------
inline CheckResult check_conjugate(const Options& = {}) {
  CheckResult r{7, "conjugate pairing in the free region", false, "", 0.0};
  const PotentialParams p = example1();
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u3(p.v_plus() * (1.0 + 1e-6),
                                            p.v_plus() + 20.0);
  double worst_s = 0.0;
  double worst_phase = 0.0;
  for (int i = 0; i < 10; ++i) {
    const ContinuumParams cp = continuum_params(p, u3(rng));
    const cplx phase = std::exp((cp.a - cp.b) * std::numbers::ln2);
    for (int j = 0; j <= 200; ++j) {
      const double z = -10.0 + 0.1 * j;
      worst_s = std::max(worst_s, std::abs(psi1_s_form(cp, z) -
                                           std::conj(psi2_s_form(cp, z))));
      worst_phase = std::max(
          worst_phase,
          std::abs(std::conj(psi1(cp, z)) - phase * psi2(cp, z)));
    }
  }
  r.pass = worst_s < 1e-10 && worst_phase < 1e-10;
  r.detail = detail::fmt(
      "max|psi1 - conj(psi2)| (s-variable pair)=%.1e; z-form pair obeys "
      "conj(psi1)=2^{a-b} psi2 to %.1e",
      worst_s, worst_phase);
  return r;
}

// 8 ------------------------------------------------------------------------
inline CheckResult check_jost(const Options& = {}) {
  CheckResult r{8, "Jost asymptotics and Wronskian", false, "", 0.0};
  const PotentialParams p = example1();
  double worst_f1 = 0.0;
  double worst_f2 = 0.0;
  double worst_w = 0.0;
  for (double k : {0.3, 0.8, 1.0, 1.5, 2.0, 3.0, 5.0}) {
    const JostAssembly j = jost(p, k);
    worst_f1 = std::max(
        worst_f1, std::abs(j.f1(-15.0) * std::exp(cplx(0.0, -15.0 * k)) - 1.0));
    if (j.doubly_degenerate()) {
      worst_f2 = std::max(worst_f2,
                          std::abs(j.f2(15.0) *
                                       std::exp(-cplx(0.0, 1.0) * j.k1 * 15.0) -
                                   1.0));
    }
    const cplx w0 = j.wronskian_at(0.0);
    worst_w = std::max({worst_w, std::abs(j.wronskian_at(-2.0) - w0),
                        std::abs(j.wronskian_at(2.0) - w0)});
  }
  r.pass = worst_f1 < 1e-3 && worst_f2 < 1e-3 && worst_w < 1e-8;
  r.detail = detail::fmt(
      "max|f1 e^{ikz}-1| at z=-15: %.1e; max|f2 e^{-ik1 z}-1| at z=15: %.1e; "
      "Wronskian variation %.1e",
      worst_f1, worst_f2, worst_w);
  return r;
}

// 9 ------------------------------------------------------------------------
inline CheckResult check_completeness(const Options& = {}) {
  CheckResult r{9, "completeness reconstruction", false, "", 0.0};
  const PotentialParams p = example1();
  const double dk = 0.05;
  const std::vector<double> z = detail::uniform_grid(-20.0, 20.0, 4001);
  std::vector<double> g(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) g[i] = std::exp(-z[i] * z[i]);
  std::vector<double> err;
  for (double km : {2.0, 4.0, 8.0}) {
    const auto kg = detail::kgrid(km, dk);
    err.push_back(expand(p, z, g, kg).relative_l2_error);
  }
  const bool monotone = err[1] < err[0] && err[2] < err[1];

  // psi0 decays as e^{(b0-a0) z} ~ e^{0.115 z} to the left: wide window.
  const BoundState st = bound_states(p).front();
  const double d = st.b - st.a;
  const std::vector<double> zw =
      detail::uniform_grid(-25.0 / d, 60.0, 20001);
  std::vector<double> psi(zw.size());
  for (std::size_t i = 0; i < zw.size(); ++i) psi[i] = eval_bound(p, st, zw[i]);
  const auto res = expand(p, zw, psi, detail::kgrid(8.0, dk));
  const double c0 = res.bound_coefficients.at(0);
  r.pass = monotone && std::abs(c0 - 1.0) < 1e-6 &&
           res.max_continuum_coefficient < 1e-4;
  r.detail = detail::fmt(
      "gaussian L2 error k_max=2,4,8: %.4e %.4e %.4e (%s); psi0: |c0-1|=%.1e "
      "max continuum |c|=%.1e",
      err[0], err[1], err[2], monotone ? "decreasing" : "NOT decreasing",
      std::abs(c0 - 1.0), res.max_continuum_coefficient);
  return r;
}

// 10 -----------------------------------------------------------------------
inline CheckResult check_nu(const Options& = {}) {
  CheckResult r{10, "NU reduction branches", false, "", 0.0};
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> uv0(0.1, 20.0);
  std::uniform_real_distribution<double> umu(0.01, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  int satisfied[4] = {0, 0, 0, 0};
  const int samples = 100;
  for (int i = 0; i < samples; ++i) {
    const PotentialParams p(uv0(rng), umu(rng));
    double eps = p.v_minus() * unit(rng);
    if (eps <= 0.0) eps = 0.5 * p.v_minus();
    const nu::GhePolys g = nu::build_ghe(p, eps);
    for (const auto& br : nu::solve_pi_branches(p, eps)) {
      for (const cplx& c : nu::branch_residual(g, br)) {
        worst = std::max(worst, std::abs(c));
      }
      if (nu::satisfies_tau_criterion(br)) ++satisfied[br.j - 1];
    }
  }
  // Branch 1 must qualify on every sample; each other branch must be ruled
  // out somewhere in the range.
  const bool selective = satisfied[0] == samples && satisfied[1] < samples &&
                         satisfied[2] < samples && satisfied[3] < samples;
  r.pass = worst < 1e-12 && selective;
  r.detail = detail::fmt(
      "max residual coefficient=%.1e; tau criterion met on %d/%d/%d/%d of "
      "%d samples (branches 1-4)",
      worst, satisfied[0], satisfied[1], satisfied[2], satisfied[3], samples);
  return r;
}

// 11 -----------------------------------------------------------------------
inline CheckResult check_critical_curve(const Options& = {}) {
  CheckResult r{11, "critical curve v0 = e^{2mu} tanh mu", false, "", 0.0};
  double worst_on = 0.0;
  int above_ok = 0;
  int below_ok = 0;
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    const double mu = 0.01 + (3.0 - 0.01) * i / (n - 1);
    const double vc = std::exp(2.0 * mu) * std::tanh(mu);
    worst_on = std::max(worst_on, std::abs(PotentialParams(vc, mu).n_cap()));
    if (PotentialParams(1.01 * vc, mu).n_cap() > 0.0) ++above_ok;
    if (PotentialParams(0.99 * vc, mu).n_cap() < 0.0) ++below_ok;
  }
  r.pass = worst_on < 1e-10 && above_ok == n && below_ok == n;
  r.detail = detail::fmt(
      "max|N| on curve=%.1e; N>0 at +1%%: %d/%d; N<0 at -1%%: %d/%d", worst_on,
      above_ok, n, below_ok, n);
  return r;
}

using CheckFn = std::function<CheckResult(const Options&)>;

inline std::vector<CheckFn> all_checks() {
  return {check_example1, check_example2,   check_oracle,
          check_kink,     check_normalization, check_residuals,
          check_conjugate, check_jost,       check_completeness,
          check_nu,       check_critical_curve};
}

/// Runs one check, timing it and turning exceptions into failures.
inline CheckResult run_timed(const CheckFn& fn, const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = fn(opt);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

/// Wall-clock limits stated for individual criteria (seconds).
inline double time_limit(int id) {
  switch (id) {
    case 1: return 1.0;
    case 3: return 30.0;
    case 9: return 300.0;
    default: return 0.0;
  }
}

inline std::vector<CheckResult> run_all(const Options& opt = {}) {
  std::vector<CheckResult> out;
  int id = 1;
  for (const auto& fn : all_checks()) {
    CheckResult r = run_timed(fn, opt);
    r.id = id++;
    if (r.name.empty()) r.name = detail::fmt("criterion %d", r.id);
    const double lim = time_limit(r.id);
    if (lim > 0.0 && r.seconds > lim) {
      r.pass = false;
      r.detail += detail::fmt(" [runtime %.2fs exceeds %.0fs]", r.seconds, lim);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rmspec::validation
