#pragma once

// Jost solutions, transmission coefficient, normalized continuum
// eigenfunctions and the eigenfunction expansion of a sampled function.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "rmspec/quadrature.hpp"
#include "rmspec/spectrum.hpp"

namespace rmspec {

inline constexpr double kTransitionTol = 1e-8;

/// Gamma1(a, b, c) = G(c) G(c-a-b) / (G(c-a) G(c-b)).
inline cplx gamma1_coef(cplx a, cplx b, cplx c) {
  return specfun::detail::gamma_ratio(c, c - a - b, c - a, c - b);
}

/// Gamma2(a, b, c) = G(c) G(a+b-c) / (G(a) G(b)).
inline cplx gamma2_coef(cplx a, cplx b, cplx c) {
  return specfun::detail::gamma_ratio(c, a + b - c, a, b);
}

/// f1(z; k) = e^{-ikz} + o(1) as z -> -inf. Built from the solution of the
/// Gauss equation that is regular-exponent at s = 1:
///   f1 = 2^{-b} e^{-az} sech^b(z) (1-s)^{a-b} F(g-al, g-be; a-b+1; 1-s).
inline cplx jost_f1(const ContinuumParams& cp, double z) {
  const double s = detail::s_of_z(z);
  const double t = detail::t_of_z(z);
  const cplx expo = -cp.a * z - cp.b * detail::log_cosh(z) +
                    (cp.a - cp.b) * std::log(t) - cp.b * std::numbers::ln2;
  return std::exp(expo) * specfun::hyp2f1(cp.gamma - cp.alpha,
                                          cp.gamma - cp.beta,
                                          cp.a - cp.b + 1.0, t, s);
}

/// f2(z; k) = e^{i k1 z} + o(1) as z -> +inf: 2^{-b} psi1 below the
/// transition momentum, 2^{a} psi2 above it.
inline cplx jost_f2(const ContinuumParams& cp, double z) {
  if (cp.region == RegionTag::FreeRegion) return psi2_s_form(cp, z);
  return psi1_s_form(cp, z);
}

/// f1 assembled from psi1, psi2 and the connection coefficients
///   f1 = [G1' 2^{-b} psi1 - 2^{a} G1 psi2] / (G2 G1' - G1 G2').
/// Independent route to jost_f1; requires psi2 and the primed gammas.
inline cplx jost_f1_connection(const ContinuumParams& cp, double z) {
  const cplx ap = cp.alpha - cp.gamma + 1.0;
  const cplx bp = cp.beta - cp.gamma + 1.0;
  const cplx gp = 2.0 - cp.gamma;
  const cplx g1 = gamma1_coef(cp.alpha, cp.beta, cp.gamma);
  const cplx g2 = gamma2_coef(cp.alpha, cp.beta, cp.gamma);
  const cplx g1p = gamma1_coef(ap, bp, gp);
  const cplx g2p = gamma2_coef(ap, bp, gp);
  const cplx num = g1p * std::exp(-cp.b * std::numbers::ln2) * psi1(cp, z) -
                   std::exp(cp.a * std::numbers::ln2) * g1 * psi2(cp, z);
  return num / (g2 * g1p - g1 * g2p);
}

/// Eighth-order central difference of f at z.
template <typename F>
auto derivative8(F&& f, double z, double h) {
  static constexpr std::array<double, 4> w = {4.0 / 5.0, -1.0 / 5.0,
                                              4.0 / 105.0, -1.0 / 280.0};
  using R = decltype(f(z));
  R acc{};
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double d = (j + 1.0) * h;
    acc += w[j] * (f(z + d) - f(z - d));
  }
  return acc / h;
}

/// W[f, g](z) = f g' - f' g by finite differences.
template <typename F, typename G>
cplx wronskian(F&& f, G&& g, double z, double h) {
  return f(z) * derivative8(g, z, h) - derivative8(f, z, h) * g(z);
}

struct JostAssembly {
  double k = 0.0;
  cplx k1;
  double kappa = 0.0;
  ContinuumParams params;
  cplx gamma1;
  cplx gamma2;
  /// Undefined when 2 - gamma is a pole (reflecting region, eps = v+ - m^2).
  std::optional<cplx> gamma1_primed;
  std::optional<cplx> gamma2_primed;
  cplx c_k;

  bool doubly_degenerate() const { return k > kappa; }
  cplx f1(double z) const { return jost_f1(params, z); }
  cplx f2(double z) const { return jost_f2(params, z); }

  /// Finite-difference step scaled to the local wavelength.
  double fd_step() const {
    return 0.05 / std::max(1.0, std::sqrt(params.eps));
  }
  cplx wronskian_at(double z) const {
    return wronskian([this](double x) { return f1(x); },
                     [this](double x) { return f2(x); }, z, fd_step());
  }
};

/// Jost data at momentum k (eps = k^2 + v-). c(k) = W[f1, f2] / (2ik) is
/// evaluated numerically at z_ref.
inline JostAssembly jost(const PotentialParams& p, double k,
                         double z_ref = 0.0) {
  if (!(k > 0.0)) throw DomainError("jost: k must be positive");
  const double kappa = p.kappa_transition();
  if (std::abs(k - kappa) < kTransitionTol) {
    throw TransitionPoint("jost: k coincides with the transition momentum");
  }
  JostAssembly j;
  j.k = k;
  j.kappa = kappa;
  const double eps = k * k + p.v_minus();
  j.k1 = std::sqrt(cplx(eps - p.v_plus(), 0.0));
  j.params = continuum_params(p, eps);
  // k != kappa, so eps is never snapped onto v+; keep the exact momentum.
  const auto& cp = j.params;
  j.gamma1 = gamma1_coef(cp.alpha, cp.beta, cp.gamma);
  j.gamma2 = gamma2_coef(cp.alpha, cp.beta, cp.gamma);
  const cplx gp = 2.0 - cp.gamma;
  if (!specfun::detail::near_nonpositive_integer(gp, 1e-10)) {
    const cplx ap = cp.alpha - cp.gamma + 1.0;
    const cplx bp = cp.beta - cp.gamma + 1.0;
    j.gamma1_primed = gamma1_coef(ap, bp, gp);
    j.gamma2_primed = gamma2_coef(ap, bp, gp);
  }
  j.c_k = j.wronskian_at(z_ref) / (2.0 * cplx(0.0, k));
  return j;
}

/// Normalized continuum eigenfunctions at momentum k: {u0} below the
/// transition momentum, {u1, u2} above it.
class ContinuumBasis {
 public:
  ContinuumBasis(const PotentialParams& p, double k) : jost_(jost(p, k)) {}

  const JostAssembly& jost_data() const { return jost_; }
  std::size_t multiplicity() const { return jost_.doubly_degenerate() ? 2 : 1; }

  /// u1 = k1 f1 / (k c), u2 = f2 / c; u0 = f2 / c.
  std::vector<cplx> operator()(double z) const {
    const cplx f2 = jost_.f2(z) / jost_.c_k;
    if (!jost_.doubly_degenerate()) return {f2};
    const cplx u1 = jost_.k1 / (jost_.k * jost_.c_k) * jost_.f1(z);
    return {u1, f2};
  }

 private:
  JostAssembly jost_;
};

inline std::vector<cplx> continuum_eigenfunctions(const PotentialParams& p,
                                                  double k, double z) {
  return ContinuumBasis(p, k)(z);
}

// ---------------------------------------------------------------------------
// Expansion

struct ExpansionResult {
  std::vector<double> bound_coefficients;
  std::vector<double> k;
  std::vector<double> k_weight;
  /// Per k: {c0} below the transition momentum, {c1, c2} above.
  std::vector<std::vector<cplx>> continuum_coefficients;
  std::vector<cplx> reconstruction;
  double relative_l2_error = 0.0;
  double max_continuum_coefficient = 0.0;
  /// (1/2pi) sum_k w_k sum_l |c_l(k)|^2 / norm_l(k): the continuum share of
  /// ||phi||^2.
  double continuum_weight = 0.0;
};

/// Measure weight of u_l in the completeness sum, relative to dk / (2 pi).
/// u1 is delta-normalized in k1 = sqrt(k^2 - (v+ - v-)), so its share of the
/// k-integral carries dk1/dk = k / k1.
inline double channel_measure(const JostAssembly& j, std::size_t l) {
  if (j.doubly_degenerate() && l == 0) return j.k / j.k1.real();
  return 1.0;
}

/// Cell widths for a sorted momentum grid: each point owns the interval
/// between the midpoints to its neighbours.
inline std::vector<double> momentum_weights(std::span<const double> k) {
  std::vector<double> w(k.size(), 0.0);
  if (k.size() == 1) {
    w[0] = 2.0 * k[0];
    return w;
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double lo = i == 0 ? std::max(0.0, k[0] - 0.5 * (k[1] - k[0]))
                             : 0.5 * (k[i - 1] + k[i]);
    const double hi = i + 1 == k.size()
                          ? k[i] + 0.5 * (k[i] - k[i - 1])
                          : 0.5 * (k[i] + k[i + 1]);
    w[i] = hi - lo;
  }
  return w;
}

/// Expands phi (sampled on the uniform grid z) over the bound states and
/// the continuum eigenfunctions at the momenta kgrid, then rebuilds it from
/// the truncated sum.
inline ExpansionResult expand(const PotentialParams& p,
                              std::span<const double> z,
                              std::span<const double> phi,
                              std::span<const double> kgrid) {
  if (z.size() != phi.size() || z.size() < 3) {
    throw GridError("expand: sample grid and values must match (>= 3 points)");
  }
  const double kappa = p.kappa_transition();
  for (std::size_t i = 0; i < kgrid.size(); ++i) {
    if (!(kgrid[i] > 0.0)) throw GridError("expand: k values must be positive");
    if (std::abs(kgrid[i] - kappa) < kTransitionTol) {
      throw GridError("expand: k grid hits the transition momentum");
    }
    if (i > 0 && !(kgrid[i] > kgrid[i - 1])) {
      throw GridError("expand: k grid must be strictly increasing");
    }
  }
  const std::size_t nz = z.size();
  const double h = (z.back() - z.front()) / static_cast<double>(nz - 1);
  const std::vector<double> wz = quad::uniform_weights(nz, h);

  ExpansionResult out;
  out.reconstruction.assign(nz, cplx(0.0, 0.0));

  for (const BoundState& st : bound_states(p)) {
    std::vector<double> psi(nz);
    double c = 0.0;
    for (std::size_t i = 0; i < nz; ++i) {
      psi[i] = eval_bound(p, st, z[i]);
      c += wz[i] * psi[i] * phi[i];
    }
    out.bound_coefficients.push_back(c);
    for (std::size_t i = 0; i < nz; ++i) out.reconstruction[i] += c * psi[i];
  }

  out.k.assign(kgrid.begin(), kgrid.end());
  out.k_weight = momentum_weights(kgrid);
  const double inv_2pi = 0.5 / std::numbers::pi;
  std::vector<std::vector<cplx>> u;
  for (std::size_t ik = 0; ik < kgrid.size(); ++ik) {
    const ContinuumBasis basis(p, kgrid[ik]);
    const std::size_t m = basis.multiplicity();
    u.assign(m, std::vector<cplx>(nz));
    for (std::size_t i = 0; i < nz; ++i) {
      const auto vals = basis(z[i]);
      for (std::size_t l = 0; l < m; ++l) u[l][i] = vals[l];
    }
    std::vector<cplx> coeffs(m);
    for (std::size_t l = 0; l < m; ++l) {
      cplx c = 0.0;
      for (std::size_t i = 0; i < nz; ++i) c += wz[i] * std::conj(u[l][i]) * phi[i];
      coeffs[l] = c;
      const double weight =
          inv_2pi * out.k_weight[ik] * channel_measure(basis.jost_data(), l);
      for (std::size_t i = 0; i < nz; ++i) out.reconstruction[i] += weight * c * u[l][i];
      out.max_continuum_coefficient =
          std::max(out.max_continuum_coefficient, std::abs(c));
      out.continuum_weight += weight * std::norm(c);
    }
    out.continuum_coefficients.push_back(std::move(coeffs));
  }

  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < nz; ++i) {
    num += wz[i] * std::norm(phi[i] - out.reconstruction[i]);
    den += wz[i] * phi[i] * phi[i];
  }
  out.relative_l2_error = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
  return out;
}

}  // namespace rmspec
