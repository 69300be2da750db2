#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <utility>
#include <vector>

#include "rmspec/errors.hpp"

namespace rmspec::quad {

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (abscissae >= 0).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <typename F>
auto gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  using R = decltype(f(c));
  const R fc = f(c);
  R kron = fc * kWgk[7];
  R gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const R f1 = f(c - dx);
    const R f2 = f(c + dx);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return std::pair<R, double>{kron * h, magnitude((kron - gauss) * h)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. Works for
/// real- and complex-valued integrands. The interval with the largest error
/// estimate is bisected until the summed estimate drops below tol.
template <typename F>
auto integrate(F&& f, double a, double b, double tol = 1e-10,
               int max_intervals = 4000) {
  if (!(tol > 0.0)) throw DomainError("integrate: tol must be positive");
  using R = decltype(f(a));
  struct Piece {
    double a, b;
    R value;
    double err;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  std::priority_queue<Piece> heap;
  auto [v0, e0] = detail::gk15(f, a, b);
  heap.push({a, b, v0, e0});
  double err = e0;
  int count = 1;
  while (err > tol) {
    if (count >= max_intervals) {
      throw NoConvergence("integrate: subdivision limit reached");
    }
    Piece top = heap.top();
    heap.pop();
    const double mid = 0.5 * (top.a + top.b);
    auto [vl, el] = detail::gk15(f, top.a, mid);
    auto [vr, er] = detail::gk15(f, mid, top.b);
    err += el + er - top.err;
    heap.push({top.a, mid, vl, el});
    heap.push({mid, top.b, vr, er});
    ++count;
  }
  // Re-sum to shed the rounding accumulated by the running updates.
  R sum{};
  while (!heap.empty()) {
    sum += heap.top().value;
    heap.pop();
  }
  return sum;
}

/// Gauss-Legendre nodes and weights on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(
    int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
  }
  return {x, w};
}

/// Composite Simpson weights on a uniform grid (trapezoid on the last panel
/// when the point count is even).
inline std::vector<double> uniform_weights(std::size_t n, double h) {
  std::vector<double> w(n, 0.0);
  if (n < 2) return w;
  if (n == 2) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  const std::size_t m = (n % 2 == 1) ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) {
    const double c = (i == 0 || i == m - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    w[i] += c * h / 3.0;
  }
  if (m != n) {
    w[n - 2] += 0.5 * h;
    w[n - 1] += 0.5 * h;
  }
  return w;
}

}  // namespace rmspec::quad
