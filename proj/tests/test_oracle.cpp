#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "rmspec/oracle.hpp"
#include "rmspec/spectrum.hpp"

using namespace rmspec;

TEST(Oracle, SturmCountOnSmallMatrix) {
  // [[2, -1], [-1, 2]] has eigenvalues 1 and 3.
  oracle::TridiagonalSystem sys{{2.0, 2.0}, {-1.0}};
  EXPECT_EQ(oracle::sturm_count(sys, 0.5), 0u);
  EXPECT_EQ(oracle::sturm_count(sys, 1.5), 1u);
  EXPECT_EQ(oracle::sturm_count(sys, 3.5), 2u);
  const auto ev = oracle::eigenvalues_below(sys, 4.0);
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 1.0, 1e-12);
  EXPECT_NEAR(ev[1], 3.0, 1e-12);
}

TEST(Oracle, FreeBoxMatchesSineModes) {
  // Tiny v0 so v(z) ~ 1e-12: Dirichlet box of width L.
  const PotentialParams p(1e-12, 0.0);
  const oracle::FdGrid g(0.0, 10.0, 1001);
  const auto ev = oracle::eigenvalues_below(oracle::discretize(p, g), 1.0);
  ASSERT_GE(ev.size(), 3u);
  const double h = g.h();
  for (int m = 1; m <= 3; ++m) {
    const double exact = 4.0 / (h * h) * std::pow(std::sin(m * std::numbers::pi * h / 20.0), 2);
    EXPECT_NEAR(ev[static_cast<std::size_t>(m - 1)], exact, 1e-9);
  }
}

TEST(Oracle, PoschlTellerEigenvalue) {
  const PotentialParams p(6.0, 0.0);  // eps = 6 - b^2 with b = 2, 1
  const oracle::FdGrid g(-15.0, 15.0, 6001);
  const auto ev = oracle::eigenvalues_below(oracle::discretize(p, g), p.v_minus());
  ASSERT_GE(ev.size(), 2u);
  EXPECT_NEAR(ev[0], 2.0, 1e-4);
  EXPECT_NEAR(ev[1], 5.0, 1e-4);
}

TEST(Oracle, EigenvalueErrorIsSecondOrder) {
  const PotentialParams p(6.0, 0.3);
  const double exact = bound_states(p).at(0).eps;
  auto err = [&](int n) {
    const oracle::FdGrid g(-30.0, 30.0, n);
    return oracle::eigenvalues_below(oracle::discretize(p, g), p.v_minus()).at(0) - exact;
  };
  const double e1 = err(2001);
  const double e2 = err(4001);
  EXPECT_NEAR(e1 / e2, 4.0, 0.1);
}

TEST(Oracle, RandomParametersAgree) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uv(0.5, 15.0);
  std::uniform_real_distribution<double> um(0.0, 1.0);
  int tested = 0;
  while (tested < 10) {
    const PotentialParams p(uv(rng), um(rng));
    const auto bs = bound_states(p);
    if (bs.empty() || bs.back().b - bs.back().a < 0.1) continue;
    const double d = bs.back().b - bs.back().a;
    const double half = 30.0 / std::min(d, 1.0);
    const oracle::FdGrid g(-half, half, static_cast<int>(2.0 * half / 0.005) + 1);
    const auto ev = oracle::eigenvalues_below(oracle::discretize(p, g), p.v_minus());
    ASSERT_EQ(ev.size(), bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) EXPECT_NEAR(ev[i], bs[i].eps, 1e-3);
    ++tested;
  }
}

TEST(Oracle, ResidualSmallForEigenfunctionLargeForNoise) {
  const PotentialParams p(1.0, 0.5 * std::numbers::ln2);
  const auto st = bound_states(p).at(0);
  const oracle::FdGrid g(-20.0, 20.0, 8001);
  const auto s = oracle::sample([&](double z) { return eval_bound(p, st, z); }, g);
  const double r1 = oracle::residual(p, st.eps, std::span<const double>(s), g);
  EXPECT_LT(r1, 1e-5);

  const oracle::FdGrid g2(-20.0, 20.0, 16001);
  const auto s2 = oracle::sample([&](double z) { return eval_bound(p, st, z); }, g2);
  const double r2 = oracle::residual(p, st.eps, std::span<const double>(s2), g2);
  EXPECT_NEAR(r1 / r2, 4.0, 0.2);

  // Wrong energy is detected.
  EXPECT_GT(oracle::residual(p, st.eps + 0.01, std::span<const double>(s), g), 1e-3);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<double> noise(s.size());
  for (double& v : noise) v = nd(rng);
  EXPECT_GT(oracle::residual(p, st.eps, std::span<const double>(noise), g), 1.0);
  const std::vector<double> short_s(5, 1.0);
  EXPECT_THROW(oracle::residual(p, st.eps, std::span<const double>(short_s), g), DomainError);
}

TEST(Oracle, GridValidation) {
  EXPECT_THROW(oracle::FdGrid(1.0, 0.0, 10), DomainError);
  EXPECT_THROW(oracle::FdGrid(0.0, 1.0, 2), DomainError);
  const oracle::FdGrid d;
  EXPECT_EQ(d.n_points, 4000);
  EXPECT_DOUBLE_EQ(d.h(), 60.0 / 3999.0);
}

TEST(Quadrature, Integrals) {
  EXPECT_NEAR(quad::integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0, 1e-13),
              std::sqrt(std::numbers::pi), 1e-12);
  EXPECT_NEAR(quad::integrate([](double x) { return 1.0 / std::cosh(x); }, -40.0, 40.0, 1e-13),
              std::numbers::pi, 1e-12);
  EXPECT_NEAR(quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12),
              2.0 / 3.0, 1e-10);
  const cplx c = quad::integrate([](double x) { return std::exp(cplx(0.0, x)); }, 0.0,
                                 std::numbers::pi, 1e-13);
  EXPECT_NEAR(std::abs(c - cplx(0.0, 2.0)), 0.0, 1e-12);
}

TEST(Quadrature, GaussLegendreAndSimpson) {
  const auto [x, w] = quad::gauss_legendre(8);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], 14);
  EXPECT_NEAR(s, 2.0 / 15.0, 1e-14);
  const auto u = quad::uniform_weights(101, 0.01);
  double t = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) t += u[i] * std::pow(0.01 * i, 3);
  EXPECT_NEAR(t, 0.25, 1e-14);
}
