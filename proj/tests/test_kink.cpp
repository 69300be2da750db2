#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <optional>

#include "rmspec/kink.hpp"
#include "rmspec/oracle.hpp"

using namespace rmspec;
using kink::KinkModel;

TEST(Kink, Construction) {
  EXPECT_THROW(KinkModel(0), DomainError);
  EXPECT_THROW(KinkModel(-3), DomainError);
  EXPECT_THROW(KinkModel(2, 0.0), DomainError);
  EXPECT_THROW(KinkModel(2, -1.0), DomainError);
  EXPECT_NO_THROW(KinkModel(1));
}

TEST(Kink, FieldPotentialValuesAndVacua) {
  const KinkModel m(2, 1.0);
  EXPECT_DOUBLE_EQ(kink::field_potential(m, 0.0), 0.0);
  EXPECT_NEAR(kink::field_potential(m, std::sqrt(2.0)), 0.0, 1e-15);
  // phi = 1: 1 * (1 - 2)^2 / 16
  EXPECT_NEAR(kink::field_potential(m, 1.0), 1.0 / 16.0, 1e-15);
  const KinkModel m3(3, 0.5);
  const double vac = std::cbrt(1.0);
  EXPECT_NEAR(kink::field_potential(m3, vac), 0.0, 1e-15);
  EXPECT_NEAR(kink::field_potential_d1(m3, vac), 0.0, 1e-14);
  EXPECT_GT(kink::field_potential(m3, 0.5 * vac), 0.0);
}

TEST(Kink, DerivativesMatchFiniteDifferences) {
  const double h = 1e-5;
  for (int p : {1, 2, 3, 5}) {
    const KinkModel m(p, 0.8);
    for (double phi : {0.2, 0.7, 1.1}) {
      const double d1 = (kink::field_potential(m, phi + h) - kink::field_potential(m, phi - h)) / (2 * h);
      const double d2 = (kink::field_potential_d1(m, phi + h) -
                         kink::field_potential_d1(m, phi - h)) / (2 * h);
      EXPECT_NEAR(kink::field_potential_d1(m, phi), d1, 1e-8);
      EXPECT_NEAR(kink::field_potential_d2(m, phi), d2, 1e-8);
    }
  }
}

TEST(Kink, StaticSolutionSolvesFieldEquation) {
  for (int p : {2, 3, 4}) {
    const KinkModel m(p, 1.3);
    const double vac = std::pow(2.0 * m.phi1(), 1.0 / p);
    EXPECT_NEAR(kink::static_kink(m, -40.0), 0.0, 1e-8);
    EXPECT_NEAR(kink::static_kink(m, 40.0), vac, 1e-12);
    const double h = 1e-3;
    for (double x = -4.0; x <= 4.0; x += 0.5) {
      const double d2 = (kink::static_kink(m, x + h) - 2 * kink::static_kink(m, x) +
                         kink::static_kink(m, x - h)) / (h * h);
      EXPECT_NEAR(d2, kink::field_potential_d1(m, kink::static_kink(m, x)), 1e-5);
      // BPS: phi'^2 / 2 = U(phi)
      const double d1 = (kink::static_kink(m, x + h) - kink::static_kink(m, x - h)) / (2 * h);
      EXPECT_NEAR(0.5 * d1 * d1, kink::field_potential(m, kink::static_kink(m, x)), 1e-6);
    }
  }
}

TEST(Kink, SlopeIsDerivativeInZ) {
  const KinkModel m(3, 0.9);
  const double c = std::numbers::sqrt2 / m.phi1();
  const double h = 1e-5;
  for (double z : {-3.0, 0.0, 1.7}) {
    const double d = (kink::static_kink(m, c * (z + h)) - kink::static_kink(m, c * (z - h))) / (2 * h);
    EXPECT_NEAR(kink::kink_slope(m, z), d, 1e-9);
  }
  EXPECT_TRUE(std::isfinite(kink::kink_slope(m, -500.0)));
}

TEST(Kink, StabilityPotential) {
  EXPECT_NEAR(kink::stability_potential(KinkModel(2), 0.0), -9.0 / 4.0, 1e-15);
  for (int p : {1, 2, 3, 7}) {
    const KinkModel m(p, 1.7);
    // V vanishes at -inf; the +inf limit is the sum of the three coefficients.
    EXPECT_NEAR(kink::stability_potential(m, -50.0), 0.0, 1e-12);
    const double dp = p;
    EXPECT_NEAR(kink::stability_potential(m, 50.0),
                (-3.0 * (dp + 1) + 2 * (dp * dp - 1) + (2 * dp + 1) * (dp + 1)) / (dp * dp), 1e-12);
    // 2 U''(phi_st) / phi1^2 = V + 4/p^2
    const double c = std::numbers::sqrt2 / m.phi1();
    for (double z : {-2.0, 0.0, 0.6, 3.0}) {
      const double u2 = kink::field_potential_d2(m, kink::static_kink(m, c * z));
      EXPECT_NEAR(2.0 * u2 / (m.phi1() * m.phi1()),
                  kink::stability_potential(m, z) + 4.0 / (dp * dp), 1e-12);
    }
  }
}

TEST(Kink, MappingIdentity) {
  for (int p = 2; p <= 50; ++p) {
    const KinkModel m(p);
    const PotentialParams pp = m.mapped_params();
    EXPECT_NEAR(pp.v_minus(), m.eps_shift(), 1e-12);
    for (double z : {-5.0, -1.0, 0.0, 0.4, 2.0, 6.0}) {
      EXPECT_NEAR(pp(z), kink::stability_potential(m, z) + m.eps_shift(), 1e-12) << p;
    }
  }
}

TEST(Kink, GoldstoneModeIsTheSlope) {
  for (int p : {2, 3, 6}) {
    const KinkModel m(p);
    const auto r = kink::analyze(m);
    ASSERT_GE(r.n_bound, 1);
    EXPECT_NEAR(r.b0, 1.0 + 1.0 / p, 1e-13);
    EXPECT_NEAR(r.a0, 1.0 - 1.0 / p, 1e-13);
    EXPECT_NEAR(r.goldstone_omega_sq, 0.0, 1e-14);
    EXPECT_TRUE(r.stable);
    EXPECT_FALSE(r.warning.has_value());
    const PotentialParams pp = m.mapped_params();
    const oracle::FdGrid g(-20.0, 20.0, 16001);
    const auto s = oracle::sample([&](double z) { return kink::kink_slope(m, z); }, g);
    EXPECT_LT(oracle::residual(pp, r.goldstone_eps, std::span<const double>(s), g), 1e-5);
  }
}

TEST(Kink, PTwoReport) {
  const auto r = kink::analyze(KinkModel(2));
  EXPECT_EQ(r.n_bound, 1);
  EXPECT_NEAR(r.goldstone_eps, 1.4, 1e-14);
  EXPECT_NEAR(r.continuum_floor_omega_sq, 0.5, 1e-15);
}

TEST(Kink, POneHasInternalModeAndWarning) {
  const KinkModel m(1);
  EXPECT_NEAR(m.mapped_mu(), 0.0, 1e-15);
  EXPECT_NEAR(m.mapped_v0(), 6.0, 1e-14);
  const auto r = kink::analyze(m);
  EXPECT_EQ(r.n_bound, 2);
  EXPECT_TRUE(r.warning.has_value());
  EXPECT_NEAR(r.modes[0].omega_sq, 0.0, 1e-14);
  EXPECT_GT(r.modes[1].omega_sq, 0.0);
}

TEST(Kink, Boost) {
  const KinkModel m(2);
  const double v = 0.6;
  const auto [xp, tp] = kink::lorentz_boost(1.0, 2.0, v);
  EXPECT_NEAR(xp, 1.25 * (1.0 - 1.2), 1e-15);
  EXPECT_NEAR(tp, 1.25 * (2.0 - 0.6), 1e-15);
  EXPECT_NEAR(kink::boosted_kink(m, 3.0, 5.0, v), kink::static_kink(m, 1.25 * (3.0 - 3.0)), 1e-15);
  EXPECT_THROW(kink::boosted_kink(m, 0.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(kink::lorentz_boost(0.0, 0.0, -1.5), DomainError);
  // The boosted profile solves the wave equation phi_tt - phi_xx = -U'(phi).
  const double h = 1e-3;
  auto f = [&](double x, double t) { return kink::boosted_kink(m, x, t, v); };
  for (double x : {-1.0, 0.5, 2.0}) {
    const double t = 0.7;
    const double ftt = (f(x, t + h) - 2 * f(x, t) + f(x, t - h)) / (h * h);
    const double fxx = (f(x + h, t) - 2 * f(x, t) + f(x - h, t)) / (h * h);
    EXPECT_NEAR(ftt - fxx, -kink::field_potential_d1(m, f(x, t)), 1e-5);
  }
}
