#pragma once

// Linear stability of the static kinks of the phi^{2p+2} field theory
//   U(phi) = phi^2 (phi^p - 2 phi1)^2 / (4 p^2).
// Small fluctuations eta = e^{i omega t} psi(z), z = phi1 x / sqrt(2), obey a
// Schroedinger problem whose potential is a shifted Rosen-Morse well.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmspec/spectrum.hpp"

namespace rmspec::kink {

inline constexpr double kZeroModeTol = 1e-12;

class KinkModel {
 public:
  /// p = 1 is accepted (symmetric Poeschl-Teller case); analyze() flags it.
  explicit KinkModel(int p, double phi1 = 1.0) : p_(p), phi1_(phi1) {
    if (p < 1) throw DomainError("kink: p must be a positive integer");
    if (!(phi1 > 0.0) || !std::isfinite(phi1)) {
      throw DomainError("kink: phi1 must be positive and finite");
    }
  }

  int p() const { return p_; }
  double phi1() const { return phi1_; }
  double omega_ph_sq() const { return 2.0 * phi1_ * phi1_ / (dp() * dp()); }
  double mapped_v0() const {
    return 3.0 * (dp() + 1.0) * (dp() + 2.0) / (dp() * (2.0 * dp() + 1.0));
  }
  double mapped_mu() const {
    return std::atanh((dp() - 1.0) / (2.0 * dp() + 1.0));
  }
  double eps_shift() const { return mapped_v0() * (dp() + 2.0) / (3.0 * dp()); }
  PotentialParams mapped_params() const {
    return PotentialParams(mapped_v0(), mapped_mu());
  }

  /// Frequency of a fluctuation with spectral parameter eps:
  ///   omega^2 = omega_ph^2 + phi1^2 (eps - v-) / 2.
  double omega_sq(double eps) const {
    return omega_ph_sq() + 0.5 * phi1_ * phi1_ * (eps - mapped_params().v_minus());
  }

 private:
  double dp() const { return static_cast<double>(p_); }
  int p_;
  double phi1_;
};

inline double field_potential(const KinkModel& m, double phi) {
  const double p = m.p();
  const double w = std::pow(phi, p) - 2.0 * m.phi1();
  return phi * phi * w * w / (4.0 * p * p);
}

inline double field_potential_d1(const KinkModel& m, double phi) {
  const double p = m.p();
  const double pp = std::pow(phi, p);
  const double w = pp - 2.0 * m.phi1();
  return phi * w * (w + p * pp) / (2.0 * p * p);
}

inline double field_potential_d2(const KinkModel& m, double phi) {
  const double p = m.p();
  const double f = m.phi1();
  const double pp = std::pow(phi, p);
  return ((2.0 * p + 2.0) * (2.0 * p + 1.0) * pp * pp -
          4.0 * f * (p + 2.0) * (p + 1.0) * pp + 8.0 * f * f) /
         (4.0 * p * p);
}

/// phi_st(x) = phi1^{1/p} (1 + tanh(phi1 x / sqrt 2))^{1/p}.
inline double static_kink(const KinkModel& m, double x) {
  const double ip = 1.0 / m.p();
  const double z = m.phi1() * x / std::numbers::sqrt2;
  return std::pow(m.phi1(), ip) * std::pow(1.0 + std::tanh(z), ip);
}

/// d phi_st / dz in the rescaled coordinate z. Uses 1 + tanh z = e^z sech z,
/// so the result is proportional to e^{-(1-1/p) z} sech^{1+1/p} z.
inline double kink_slope(const KinkModel& m, double z) {
  const double ip = 1.0 / m.p();
  const double lc = detail::log_cosh(z);
  return std::exp(ip * std::log(m.phi1()) - std::log(static_cast<double>(m.p())) +
                  (ip - 1.0) * (z - lc) - 2.0 * lc);
}

/// V(z) = -3(p+1)/p^2 + 2(p^2-1)/p^2 tanh z + (2p+1)(p+1)/p^2 tanh^2 z.
inline double stability_potential(const KinkModel& m, double z) {
  const double p = m.p();
  const double t = std::tanh(z);
  return (-3.0 * (p + 1.0) + 2.0 * (p * p - 1.0) * t +
          (2.0 * p + 1.0) * (p + 1.0) * t * t) /
         (p * p);
}

/// Moving kink obtained by a Lorentz boost with velocity v (|v| < 1).
inline double boosted_kink(const KinkModel& m, double x, double t, double v) {
  if (!(std::abs(v) < 1.0)) throw DomainError("kink: |v| must be below 1");
  return static_kink(m, (x - v * t) / std::sqrt(1.0 - v * v));
}

/// (x, t) -> (x', t') for a boost with velocity v.
inline std::pair<double, double> lorentz_boost(double x, double t, double v) {
  if (!(std::abs(v) < 1.0)) throw DomainError("kink: |v| must be below 1");
  const double g = 1.0 / std::sqrt(1.0 - v * v);
  return {g * (x - v * t), g * (t - v * x)};
}

struct ModeReport {
  int n = 0;
  double eps = 0.0;
  double lambda_sq = 0.0;  // eps - v-
  double omega_sq = 0.0;
};

struct StabilityReport {
  int n_bound = 0;
  double goldstone_eps = 0.0;
  double goldstone_omega_sq = 0.0;
  double a0 = 0.0;
  double b0 = 0.0;
  /// Open lower bound of the continuum frequencies (omega^2 > floor).
  double continuum_floor_omega_sq = 0.0;
  bool stable = false;
  std::vector<ModeReport> modes;
  std::optional<std::string> warning;
};

inline StabilityReport analyze(const KinkModel& m) {
  const PotentialParams pp = m.mapped_params();
  StabilityReport r;
  const double vm = pp.v_minus();
  bool nonnegative = true;
  const std::vector<BoundState> bs = bound_states(pp);
  for (const BoundState& st : bs) {
    ModeReport mode;
    mode.n = st.n;
    mode.eps = st.eps;
    mode.lambda_sq = st.eps - vm;
    mode.omega_sq = m.omega_sq(st.eps);
    // The Goldstone mode sits at omega^2 = 0 up to roundoff.
    if (mode.omega_sq < -kZeroModeTol) nonnegative = false;
    r.modes.push_back(mode);
  }
  r.n_bound = static_cast<int>(r.modes.size());
  if (!r.modes.empty()) {
    r.goldstone_eps = r.modes.front().eps;
    r.goldstone_omega_sq = r.modes.front().omega_sq;
    r.a0 = bs.front().a;
    r.b0 = bs.front().b;
  }
  r.continuum_floor_omega_sq = m.omega_ph_sq();
  r.stable = nonnegative && r.continuum_floor_omega_sq > 0.0;
  if (m.p() == 1) {
    r.warning =
        "p = 1 is the symmetric Poeschl-Teller case: besides the Goldstone "
        "mode there is an internal mode and a threshold state at v-";
  }
  return r;
}

}  // namespace rmspec::kink
