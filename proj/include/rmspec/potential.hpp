#pragma once

#include <cmath>

#include "rmspec/errors.hpp"

namespace rmspec {

/// Rosen-Morse potential v(z) = v0 cosh^2(mu) (tanh z + tanh mu)^2 with its
/// derived thresholds. Immutable once constructed.
class PotentialParams {
 public:
  PotentialParams(double v0, double mu) : v0_(v0), mu_(mu) {
    if (!(v0 > 0.0) || !std::isfinite(v0)) {
      throw DomainError("v0 must be positive and finite");
    }
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
      throw DomainError("mu must be non-negative and finite");
    }
  }

  double v0() const { return v0_; }
  double mu() const { return mu_; }

  double v_minus() const { return v0_ * std::exp(-2.0 * mu_); }
  double v_plus() const { return v0_ * std::exp(2.0 * mu_); }

  /// Critical amplitude e^{2mu} tanh(mu); bound states exist iff v0 > v_c.
  double v_c() const { return std::exp(2.0 * mu_) * std::tanh(mu_); }

  /// sqrt(v0 cosh^2 mu + 1/4), the constant shared by b_n, alpha, beta.
  double root_s() const {
    const double c = std::cosh(mu_);
    return std::sqrt(v0_ * c * c + 0.25);
  }

  /// Bound-state cap N(mu, v0); the admissible indices are n < N.
  double n_cap() const {
    return root_s() - std::sqrt(0.5 * v0_ * std::sinh(2.0 * mu_)) - 0.5;
  }

  /// Transition momentum sqrt(v+ - v-) separating simple and double
  /// continuum.
  double kappa_transition() const { return std::sqrt(v_plus() - v_minus()); }

  double operator()(double z) const {
    const double c = std::cosh(mu_);
    const double w = std::tanh(z) + std::tanh(mu_);
    return v0_ * c * c * w * w;
  }

 private:
  double v0_;
  double mu_;
};

}  // namespace rmspec
