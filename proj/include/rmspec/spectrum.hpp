#pragma once

// Discrete and continuous spectrum of -psi'' + v(z) psi = eps psi for the
// Rosen-Morse potential: region classification, bound states with closed
// form normalization, hypergeometric continuum solutions, and the threshold
// states eps = v-, v+.

#include <cmath>
#include <numbers>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "rmspec/nu_reduction.hpp"
#include "rmspec/potential.hpp"
#include "rmspec/specfun.hpp"

namespace rmspec {

inline constexpr double kThresholdRelTol = 1e-12;
inline constexpr double kCapIntegerTol = 1e-10;

enum class RegionTag {
  BoundRegion,
  ReflectingRegion,
  FreeRegion,
  SpecialVminus,
  SpecialVplus,
  ZeroState,
};

inline std::string_view to_string(RegionTag r) {
  switch (r) {
    case RegionTag::BoundRegion: return "bound";
    case RegionTag::ReflectingRegion: return "reflecting";
    case RegionTag::FreeRegion: return "free";
    case RegionTag::SpecialVminus: return "special_v_minus";
    case RegionTag::SpecialVplus: return "special_v_plus";
    case RegionTag::ZeroState: return "zero";
  }
  return "unknown";
}

namespace detail {

inline bool near_threshold(double eps, double v) {
  return std::abs(eps - v) <= kThresholdRelTol * v;
}

/// log cosh z without overflow.
inline double log_cosh(double z) {
  const double a = std::abs(z);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

/// s(z) = (1 - tanh z)/2 and its complement, each to full relative precision.
inline double s_of_z(double z) { return 1.0 / (1.0 + std::exp(2.0 * z)); }
inline double t_of_z(double z) { return 1.0 / (1.0 + std::exp(-2.0 * z)); }

}  // namespace detail

/// At mu = 0 the two thresholds coincide; eps = v0 reports SpecialVminus.
inline RegionTag classify(const PotentialParams& p, double eps) {
  if (!(eps >= 0.0)) throw DomainError("classify: eps must be non-negative");
  const double vm = p.v_minus();
  const double vp = p.v_plus();
  if (eps <= kThresholdRelTol * vm) return RegionTag::ZeroState;
  if (detail::near_threshold(eps, vm)) return RegionTag::SpecialVminus;
  if (detail::near_threshold(eps, vp)) return RegionTag::SpecialVplus;
  if (eps < vm) return RegionTag::BoundRegion;
  if (eps < vp) return RegionTag::ReflectingRegion;
  return RegionTag::FreeRegion;
}

// ---------------------------------------------------------------------------
// Bound states

struct BoundState {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
  double eps = 0.0;
  double norm = 0.0;

  /// Jacobi parameters (b - a, b + a) of the polynomial factor.
  double jacobi_alpha() const { return b - a; }
  double jacobi_beta() const { return b + a; }
};

/// Normalizing constant N_n from the Beta-function sum
///   N_n^2 2^{2b-1} sum_k pi_k B(b-a, b+a+k) = 1,
/// with pi_k the coefficients of [P_n(2x-1)]^2 in powers of x.
inline double normalize_bound(const PotentialParams& /*p*/,
                              const BoundState& st) {
  const int n = st.n;
  const double a = st.a;
  const double b = st.b;
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) {
    const double num =
        specfun::pochhammer(cplx(n + 2.0 * b + 1.0), static_cast<unsigned>(l))
            .real() *
        specfun::pochhammer(cplx(-b - a - n), static_cast<unsigned>(n - l))
            .real();
    c[static_cast<std::size_t>(l)] =
        num / (std::tgamma(l + 1.0) * std::tgamma(n - l + 1.0));
  }
  double sum = 0.0;
  for (int k = 0; k <= 2 * n; ++k) {
    double pik = 0.0;
    for (int l = std::max(0, k - n); l <= std::min(k, n); ++l) {
      pik += c[static_cast<std::size_t>(l)] * c[static_cast<std::size_t>(k - l)];
    }
    sum += pik * specfun::beta(b - a, b + a + k);
  }
  return 1.0 / std::sqrt(std::pow(2.0, 2.0 * b - 1.0) * sum);
}

/// All square-integrable eigenstates, ordered by n (increasing energy).
/// An index counts only when N(mu, v0) - n exceeds kCapIntegerTol, so a cap
/// sitting on an integer (threshold state at v-) does not produce a spurious
/// zero-decay level.
inline std::vector<BoundState> bound_states(const PotentialParams& p) {
  std::vector<BoundState> out;
  const double cap = p.n_cap();
  const double rs = p.root_s();
  const double ab = 0.5 * p.v0() * std::sinh(2.0 * p.mu());
  for (int n = 0; n + kCapIntegerTol < cap; ++n) {
    BoundState st;
    st.n = n;
    st.b = rs - (n + 0.5);
    st.a = ab / st.b;
    const double gap = st.b - st.a;
    st.eps = p.v_minus() - gap * gap;
    st.norm = normalize_bound(p, st);
    out.push_back(st);
  }
  return out;
}

/// psi_n(z) = N_n e^{-a z} sech^b(z) P_n^{(b-a, b+a)}(-tanh z).
inline double eval_bound(const PotentialParams& /*p*/, const BoundState& st,
                         double z) {
  const double envelope = std::exp(-st.a * z - st.b * detail::log_cosh(z));
  return st.norm * envelope *
         specfun::jacobi_poly(st.n, st.jacobi_alpha(), st.jacobi_beta(),
                              -std::tanh(z));
}

// ---------------------------------------------------------------------------
// Continuum

struct ContinuumParams {
  double eps = 0.0;
  RegionTag region = RegionTag::ReflectingRegion;
  cplx kappa_plus;
  cplx kappa_minus;
  cplx a;
  cplx b;
  cplx k_coef;
  cplx alpha;
  cplx beta;
  cplx gamma;
};

/// Hypergeometric parameters of the first NU branch for eps >= v-. Energies
/// within the threshold tolerance snap onto v- or v+ exactly.
inline ContinuumParams continuum_params(const PotentialParams& p, double eps) {
  if (!(eps >= 0.0)) throw DomainError("continuum_params: eps must be >= 0");
  ContinuumParams cp;
  cp.region = classify(p, eps);
  switch (cp.region) {
    case RegionTag::BoundRegion:
    case RegionTag::ZeroState:
      throw DomainError("continuum_params: eps must be >= v_minus");
    case RegionTag::SpecialVminus: eps = p.v_minus(); break;
    case RegionTag::SpecialVplus: eps = p.v_plus(); break;
    default: break;
  }
  cp.eps = eps;
  cp.kappa_plus = nu::kappa_plus(p, eps);
  cp.kappa_minus = nu::kappa_minus(p, eps);
  cp.a = 0.5 * (cp.kappa_plus - cp.kappa_minus);
  cp.b = 0.5 * (cp.kappa_plus + cp.kappa_minus);
  cp.k_coef = 0.5 * (eps + p.v0()) - 0.5 * cp.kappa_plus * cp.kappa_minus;
  const double rs = p.root_s();
  cp.alpha = cp.b + 0.5 - rs;
  cp.beta = cp.b + 0.5 + rs;
  cp.gamma = cp.a + cp.b + 1.0;
  return cp;
}

/// psi_1(z) = e^{-a z} sech^b(z) F(alpha, beta; gamma; (1 - tanh z)/2).
inline cplx psi1(const ContinuumParams& cp, double z) {
  const cplx env = std::exp(-cp.a * z - cp.b * detail::log_cosh(z));
  return env * specfun::hyp2f1(cp.alpha, cp.beta, cp.gamma,
                               detail::s_of_z(z), detail::t_of_z(z));
}

/// psi_2(z) = e^{b z} sech^{-a}(z) F(alpha-gamma+1, beta-gamma+1; 2-gamma; s).
inline cplx psi2(const ContinuumParams& cp, double z) {
  const cplx env = std::exp(cp.b * z + cp.a * detail::log_cosh(z));
  return env * specfun::hyp2f1(cp.alpha - cp.gamma + 1.0,
                               cp.beta - cp.gamma + 1.0, 2.0 - cp.gamma,
                               detail::s_of_z(z), detail::t_of_z(z));
}

/// The same pair written in the variable s, as s^{k+/2} (1-s)^{k-/2} w1(s)
/// and s^{-k+/2} (1-s)^{k-/2} w2(s). They equal 2^{-b} psi1 and 2^{a} psi2;
/// in the free region the pair is exactly complex conjugate, whereas psi1 and
/// psi2 themselves differ from a conjugate pair by the phase 2^{a-b}.
inline cplx psi1_s_form(const ContinuumParams& cp, double z) {
  return std::exp(-cp.b * std::numbers::ln2) * psi1(cp, z);
}
inline cplx psi2_s_form(const ContinuumParams& cp, double z) {
  return std::exp(cp.a * std::numbers::ln2) * psi2(cp, z);
}

inline bool second_solution_defined(const ContinuumParams& cp) {
  return !specfun::detail::near_nonpositive_integer(2.0 - cp.gamma, 1e-10);
}

/// Unbound solution psi_which(z; eps) for eps above v-.
inline cplx eval_unbound(const PotentialParams& p, double eps, int which,
                         double z) {
  if (which != 1 && which != 2) {
    throw DomainError("eval_unbound: which must be 1 or 2");
  }
  const ContinuumParams cp = continuum_params(p, eps);
  if (cp.region == RegionTag::SpecialVminus) {
    throw DomainError("eval_unbound: eps must exceed v_minus");
  }
  if (which == 1) return psi1(cp, z);
  if (!second_solution_defined(cp)) {
    throw SecondSolutionUndefined(
        "eval_unbound: 2 - gamma is a non-positive integer");
  }
  return psi2(cp, z);
}

// ---------------------------------------------------------------------------
// Threshold states

/// Bounded, non-normalizable eigenfunction at eps = v-, present only when
/// N(mu, v0) is a non-negative integer l:
///   psi(z) = e^{-a z} sech^a(z) P_l^{(0, 2a)}(-tanh z),  a = sqrt(v+ - v-)/2.
struct VMinusState {
  int l = 0;
  double a = 0.0;

  double operator()(double z) const {
    return std::exp(-a * z - a * detail::log_cosh(z)) *
           specfun::jacobi_poly(l, 0.0, 2.0 * a, -std::tanh(z));
  }
};

inline std::optional<VMinusState> special_state_vminus(
    const PotentialParams& p) {
  const double cap = p.n_cap();
  const double l = std::round(cap);
  if (l < 0.0 || std::abs(cap - l) > kCapIntegerTol) return std::nullopt;
  return VMinusState{static_cast<int>(l), 0.5 * p.kappa_transition()};
}

/// psi_1 at eps = v+, where gamma = 1.
struct VPlusState {
  ContinuumParams params;
  cplx operator()(double z) const { return psi1(params, z); }
};

inline VPlusState special_state_vplus(const PotentialParams& p) {
  return VPlusState{continuum_params(p, p.v_plus())};
}

}  // namespace rmspec
