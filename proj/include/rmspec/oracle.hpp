#pragma once

// Independent numerical checks of the analytic spectrum: second-order
// finite-difference discretization of -d^2/dz^2 + v(z) with Dirichlet walls,
// Sturm-sequence bisection for the low eigenvalues, and ODE residuals.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "rmspec/errors.hpp"
#include "rmspec/potential.hpp"
#include "rmspec/quadrature.hpp"

namespace rmspec::oracle {

struct FdGrid {
  double z_min = -30.0;
  double z_max = 30.0;
  int n_points = 4000;

  FdGrid() = default;
  FdGrid(double lo, double hi, int n) : z_min(lo), z_max(hi), n_points(n) {
    if (!(lo < hi)) throw DomainError("FdGrid: z_min must be below z_max");
    if (n < 3) throw DomainError("FdGrid: need at least 3 points");
  }

  double h() const { return (z_max - z_min) / (n_points - 1); }
  double z(int i) const { return z_min + i * h(); }
};

/// Symmetric tridiagonal matrix; off_diagonal has size diagonal.size() - 1.
struct TridiagonalSystem {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
};

/// Unknowns are the interior points z_1 .. z_{n-2}; the walls carry psi = 0.
inline TridiagonalSystem discretize(const PotentialParams& p,
                                    const FdGrid& grid) {
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  const auto m = static_cast<std::size_t>(grid.n_points - 2);
  TridiagonalSystem sys;
  sys.diagonal.resize(m);
  sys.off_diagonal.assign(m > 0 ? m - 1 : 0, -inv_h2);
  for (std::size_t i = 0; i < m; ++i) {
    sys.diagonal[i] = 2.0 * inv_h2 + p(grid.z(static_cast<int>(i) + 1));
  }
  return sys;
}

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
inline std::size_t sturm_count(const TridiagonalSystem& sys, double x) {
  std::size_t count = 0;
  double q = 1.0;
  const std::size_t n = sys.diagonal.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = i == 0 ? 0.0 : sys.off_diagonal[i - 1] *
                                         sys.off_diagonal[i - 1];
    q = sys.diagonal[i] - x - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0.0) ++count;
  }
  return count;
}

/// Eigenvalues below cutoff in ascending order, each bisected to roundoff.
inline std::vector<double> eigenvalues_below(const TridiagonalSystem& sys,
                                             double cutoff) {
  const std::size_t n = sys.diagonal.size();
  if (n == 0) return {};
  double lower = sys.diagonal[0];
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(sys.off_diagonal[i - 1]);
    if (i + 1 < n) r += std::abs(sys.off_diagonal[i]);
    lower = std::min(lower, sys.diagonal[i] - r);
    scale = std::max(scale, std::abs(sys.diagonal[i]) + r);
  }
  const std::size_t m = sturm_count(sys, cutoff);
  std::vector<double> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    double lo = lower - 1.0;
    double hi = cutoff;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * scale) {
        break;
      }
      if (sturm_count(sys, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

/// max_i |psi''_FD(z_i) - (v(z_i) - eps) psi_i| / max |psi| over the interior.
template <typename T>
double residual(const PotentialParams& p, double eps, std::span<const T> psi,
                const FdGrid& grid) {
  if (psi.size() != static_cast<std::size_t>(grid.n_points)) {
    throw DomainError("residual: samples do not match the grid");
  }
  const double h = grid.h();
  double peak = 0.0;
  for (const T& v : psi) peak = std::max(peak, static_cast<double>(std::abs(v)));
  if (peak == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
    const double z = grid.z(static_cast<int>(i));
    const T d2 = (psi[i + 1] - 2.0 * psi[i] + psi[i - 1]) / (h * h);
    const T r = d2 - (p(z) - eps) * psi[i];
    worst = std::max(worst, static_cast<double>(std::abs(r)));
  }
  return worst / peak;
}

/// Samples f on the grid; convenience for residual().
template <typename F>
auto sample(F&& f, const FdGrid& grid) {
  using R = decltype(f(0.0));
  std::vector<R> out(static_cast<std::size_t>(grid.n_points));
  for (int i = 0; i < grid.n_points; ++i) {
    out[static_cast<std::size_t>(i)] = f(grid.z(i));
  }
  return out;
}

using quad::integrate;

}  // namespace rmspec::oracle
