#pragma once

// Nikiforov-Uvarov reduction of the Rosen-Morse equation. With u = -tanh z
// the Schrodinger equation becomes
//   psi'' + (tau~/sigma) psi' + (sigma~/sigma^2) psi = 0,
// and the ansatz psi = phi(u) y(u), phi'/phi = pi/sigma, pi(u) = a - b u,
// turns it into sigma y'' + tau y' + lambda y = 0.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "rmspec/potential.hpp"
#include "rmspec/specfun.hpp"

namespace rmspec::nu {

/// Dense coefficients, lowest degree first.
using Poly1 = std::array<double, 2>;
using Poly2 = std::array<double, 3>;
using CPoly2 = std::array<cplx, 3>;

template <typename T, std::size_t N>
T eval_poly(const std::array<T, N>& c, double u) {
  T acc{};
  for (std::size_t i = N; i-- > 0;) acc = acc * u + c[i];
  return acc;
}

struct GhePolys {
  Poly1 tau_tilde;
  Poly2 sigma;
  Poly2 sigma_tilde;
};

/// kappa_+(eps) = sqrt(v+ - eps), principal branch (i|.| above threshold).
inline cplx kappa_plus(const PotentialParams& p, double eps) {
  return std::sqrt(cplx(p.v_plus() - eps, 0.0));
}

inline cplx kappa_minus(const PotentialParams& p, double eps) {
  return std::sqrt(cplx(p.v_minus() - eps, 0.0));
}

inline GhePolys build_ghe(const PotentialParams& p, double eps) {
  const double ch = std::cosh(p.mu());
  const double sh = std::sinh(p.mu());
  const double c = p.v0() * ch * ch;
  GhePolys g;
  g.tau_tilde = {0.0, -2.0};
  g.sigma = {1.0, 0.0, -1.0};
  g.sigma_tilde = {eps - p.v0() * sh * sh, p.v0() * std::sinh(2.0 * p.mu()),
                   -c};
  return g;
}

struct PiBranch {
  int j = 1;
  cplx a;
  cplx b;
  cplx k;
  cplx lambda;

  /// pi_j(u) = a - b u
  cplx pi(double u) const { return a - b * u; }
  /// tau_j(u) = -2u + 2 pi_j(u)
  cplx tau(double u) const { return -2.0 * u + 2.0 * pi(u); }
  cplx tau_slope() const { return -2.0 - 2.0 * b; }
};

/// The four solutions of the (a, b, k) system. Branch 1 has
/// a = (k+ - k-)/2, b = (k+ + k-)/2; branch 2 negates pi; branches 3 and 4
/// swap the roles of a and b.
inline std::vector<PiBranch> solve_pi_branches(const PotentialParams& p,
                                               double eps) {
  const cplx kp = kappa_plus(p, eps);
  const cplx km = kappa_minus(p, eps);
  const double half_sum = 0.5 * (eps + p.v0());
  const cplx k13 = half_sum - 0.5 * kp * km;
  const cplx k24 = half_sum + 0.5 * kp * km;
  const cplx a1 = 0.5 * (kp - km);
  const cplx b1 = 0.5 * (kp + km);

  std::vector<PiBranch> out(4);
  out[0] = {1, a1, b1, k13, {}};
  out[1] = {2, -a1, -b1, k13, {}};
  out[2] = {3, b1, a1, k24, {}};
  out[3] = {4, -b1, -a1, k24, {}};
  for (auto& br : out) br.lambda = br.k - br.b;
  return out;
}

/// Coefficients of pi^2 + (tau~ - sigma') pi + (sigma~ - k sigma); the zero
/// polynomial for a valid branch.
inline CPoly2 branch_residual(const GhePolys& g, const PiBranch& br) {
  // sigma' = -2u, so tau~ - sigma' has coefficients (t0, t1 + 2).
  const cplx d0 = g.tau_tilde[0] - g.sigma[1];
  const cplx d1 = g.tau_tilde[1] - 2.0 * g.sigma[2];
  const CPoly2 pi2 = {br.a * br.a, -2.0 * br.a * br.b, br.b * br.b};
  const CPoly2 lin = {d0 * br.a, d1 * br.a - d0 * br.b, -d1 * br.b};
  CPoly2 r;
  for (std::size_t i = 0; i < 3; ++i) {
    r[i] = pi2[i] + lin[i] + g.sigma_tilde[i] - br.k * g.sigma[i];
  }
  return r;
}

/// True when tau_j is real, has its zero inside (-1, 1) and slopes down:
/// the necessary condition for the polynomial (bound-state) branch.
inline bool satisfies_tau_criterion(const PiBranch& br, double tol = 1e-14) {
  if (std::abs(br.a.imag()) > tol || std::abs(br.b.imag()) > tol) return false;
  const double slope = br.tau_slope().real();
  if (!(slope < 0.0)) return false;
  const double root = br.a.real() / (1.0 + br.b.real());
  return root > -1.0 && root < 1.0;
}

/// phi(u) = (1-u)^{k-/2} (1+u)^{k+/2}.
inline cplx phi_multiplier(const PotentialParams& p, double eps, double u) {
  if (!(u > -1.0 && u < 1.0)) {
    throw DomainError("phi_multiplier: u must lie strictly inside (-1, 1)");
  }
  const cplx kp = kappa_plus(p, eps);
  const cplx km = kappa_minus(p, eps);
  return std::exp(0.5 * km * std::log1p(-u) + 0.5 * kp * std::log1p(u));
}

}  // namespace rmspec::nu
