#pragma once

// Special-function kernel: complex gamma and digamma, Euler Beta,
// Pochhammer symbols, Gauss hypergeometric 2F1 on [0,1) with complex
// parameters, and Jacobi polynomials.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "rmspec/errors.hpp"

namespace rmspec {

using cplx = std::complex<double>;

namespace specfun {

inline constexpr double kPoleTol = 1e-12;
inline constexpr double kSeriesTol = 1e-12;
inline constexpr int kMaxSeriesTerms = 5000;

namespace detail {

/// Returns true when z lies within tol of {0, -1, -2, ...}; writes the
/// integer into *n when requested.
inline bool near_nonpositive_integer(cplx z, double tol, long* n = nullptr) {
  const double r = std::round(z.real());
  if (r > 0.0) return false;
  if (std::abs(z - cplx(r, 0.0)) >= tol) return false;
  if (n) *n = static_cast<long>(r);
  return true;
}

inline bool near_integer(cplx z, double tol, long* n = nullptr) {
  const double r = std::round(z.real());
  if (std::abs(z - cplx(r, 0.0)) >= tol) return false;
  if (n) *n = static_cast<long>(r);
  return true;
}

// Lanczos approximation, g = 7, nine coefficients.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

/// log Gamma for Re z >= 0.5.
inline cplx lgamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

/// log sin(pi z), stable for large |Im z|. Branch is irrelevant to callers.
inline cplx log_sin_pi(cplx z) {
  using std::numbers::pi;
  const cplx i(0.0, 1.0);
  if (z.imag() > 20.0) {
    return -i * pi * z + std::log(cplx(0.0, 0.5)) +
           std::log(1.0 - std::exp(2.0 * i * pi * z));
  }
  if (z.imag() < -20.0) {
    return i * pi * z + std::log(cplx(0.0, -0.5)) +
           std::log(1.0 - std::exp(-2.0 * i * pi * z));
  }
  return std::log(std::sin(pi * z));
}

}  // namespace detail

/// Complex log Gamma. The imaginary part is only defined modulo 2*pi, which
/// is all that is needed when the result is exponentiated.
inline cplx lgamma_complex(cplx z) {
  if (detail::near_nonpositive_integer(z, kPoleTol)) {
    throw PoleError("gamma: argument is a non-positive integer");
  }
  if (z.real() < 0.5) {
    return std::log(std::numbers::pi) - detail::log_sin_pi(z) -
           detail::lgamma_right(1.0 - z);
  }
  return detail::lgamma_right(z);
}

inline cplx gamma_complex(cplx z) { return std::exp(lgamma_complex(z)); }

/// 1/Gamma(z); entire, so poles of Gamma map to exact zeros.
inline cplx rgamma(cplx z) {
  if (detail::near_nonpositive_integer(z, kPoleTol)) return {0.0, 0.0};
  return std::exp(-lgamma_complex(z));
}

inline cplx digamma(cplx z) {
  if (detail::near_nonpositive_integer(z, kPoleTol)) {
    throw PoleError("digamma: argument is a non-positive integer");
  }
  using std::numbers::pi;
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - pi / std::tan(pi * z);
  }
  cplx shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const cplx w = 1.0 / (z * z);
  // Bernoulli tail: B_2k / (2k)
  constexpr std::array<double, 7> c = {1.0 / 12.0,   -1.0 / 120.0,
                                       1.0 / 252.0,  -1.0 / 240.0,
                                       1.0 / 132.0,  -691.0 / 32760.0,
                                       1.0 / 12.0};
  cplx tail = 0.0;
  cplx wp = w;
  for (double ck : c) {
    tail += ck * wp;
    wp *= w;
  }
  return shift + std::log(z) - 0.5 / z - tail;
}

/// Euler Beta function B(a, b) for a, b > 0.
inline double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("beta: arguments must be positive");
  }
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

/// Rising factorial (a)_k.
inline cplx pochhammer(cplx a, unsigned k) {
  cplx p = 1.0;
  for (unsigned i = 0; i < k; ++i) p *= a + static_cast<double>(i);
  return p;
}

struct Hyp2F1Params {
  cplx alpha;
  cplx beta;
  cplx gamma;
  double s = 0.0;
};

namespace detail {

/// Plain power series; caller guarantees |x| <= ~1/2 or termination.
inline cplx hyp_series(cplx a, cplx b, cplx c, double x) {
  cplx term = 1.0;
  cplx sum = 1.0;
  double peak = 1.0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
    const double at = std::abs(term);
    peak = std::max(peak, at);
    if (at == 0.0) return sum;
    if (at <= 1e-17 * std::abs(sum) || at <= 1e-20 * peak) return sum;
  }
  if (std::abs(term) > kSeriesTol * std::abs(sum)) {
    throw NoConvergence("hyp2f1: series did not converge");
  }
  return sum;
}

inline cplx gamma_ratio(cplx n1, cplx n2, cplx d1, cplx d2) {
  if (near_nonpositive_integer(d1, kPoleTol) ||
      near_nonpositive_integer(d2, kPoleTol)) {
    return {0.0, 0.0};
  }
  return std::exp(lgamma_complex(n1) + lgamma_complex(n2) -
                  lgamma_complex(d1) - lgamma_complex(d2));
}

/// F(a, b; a+b+m; 1-t) for integer m >= 0 (logarithmic case).
inline cplx hyp_log_case(cplx a, cplx b, long m, double t) {
  const cplx c = a + b + static_cast<double>(m);
  cplx first = 0.0;
  if (m > 0) {
    cplx term = 1.0;
    cplx sum = 1.0;
    for (long n = 0; n + 1 < m; ++n) {
      const double dn = static_cast<double>(n);
      term *= (a + dn) * (b + dn) / ((dn + 1.0) * (1.0 - m + dn)) * t;
      sum += term;
    }
    first = std::exp(std::lgamma(static_cast<double>(m)) + lgamma_complex(c)) *
            rgamma(a + static_cast<double>(m)) *
            rgamma(b + static_cast<double>(m)) * sum;
  }
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const cplx pref = sign * std::pow(t, static_cast<double>(m)) *
                    std::exp(lgamma_complex(c)) * rgamma(a) * rgamma(b);
  if (pref == cplx(0.0, 0.0)) return first;

  const double lt = std::log(t);
  const double dm = static_cast<double>(m);
  // psi(n+1), psi(n+m+1) real; psi(a+n+m), psi(b+n+m) complex
  double psi1 = -0.5772156649015328606;
  double psi2 = std::real(digamma(cplx(dm + 1.0, 0.0)));
  cplx psia = digamma(a + dm);
  cplx psib = digamma(b + dm);
  cplx coef = 1.0 / std::exp(std::lgamma(dm + 1.0));  // 1/(n!(n+m)!) at n=0
  cplx sum = 0.0;
  double peak = 0.0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const double dn = n;
    const cplx term = coef * (lt - psi1 - psi2 + psia + psib);
    sum += term;
    const double at = std::abs(term);
    peak = std::max(peak, at);
    if (n > 2 && (at <= 1e-17 * std::abs(sum) || at <= 1e-20 * peak)) break;
    coef *= (a + dm + dn) * (b + dm + dn) / ((dn + 1.0) * (dn + dm + 1.0)) * t;
    psi1 += 1.0 / (dn + 1.0);
    psi2 += 1.0 / (dn + dm + 1.0);
    psia += 1.0 / (a + dm + dn);
    psib += 1.0 / (b + dm + dn);
    if (n + 1 == kMaxSeriesTerms) {
      throw NoConvergence("hyp2f1: logarithmic series did not converge");
    }
  }
  return first - pref * sum;
}

}  // namespace detail

/// Gauss 2F1(a, b; c; s) with the complement t = 1 - s supplied separately so
/// that callers near s = 1 keep full relative precision in t.
inline cplx hyp2f1(cplx a, cplx b, cplx c, double s, double t) {
  if (!(s >= 0.0) || !(t > 0.0) || s > 1.0) {
    throw DomainError("hyp2f1: argument must lie in [0, 1)");
  }
  if (detail::near_nonpositive_integer(c, kPoleTol)) {
    throw DegenerateGamma("hyp2f1: gamma parameter is a non-positive integer");
  }
  if (s == 0.0) return 1.0;

  long l = 0;
  if (detail::near_nonpositive_integer(a, kPoleTol, &l) ||
      detail::near_nonpositive_integer(b, kPoleTol, &l)) {
    // Terminating: exact polynomial of degree -l.
    cplx term = 1.0;
    cplx sum = 1.0;
    for (long n = 0; n < -l; ++n) {
      const double dn = static_cast<double>(n);
      term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * s;
      sum += term;
    }
    return sum;
  }

  if (s <= 0.5) return detail::hyp_series(a, b, c, s);

  const cplx d = c - a - b;
  long m = 0;
  if (detail::near_integer(d, kPoleTol, &m)) {
    if (m < 0) {
      // Euler: F(a,b;c;s) = t^d F(c-a, c-b; c; s), whose excess is -d > 0.
      return std::pow(cplx(t, 0.0), d) * hyp2f1(c - a, c - b, c, s, t);
    }
    return detail::hyp_log_case(a, b, m, t);
  }
  const cplx g1 = detail::gamma_ratio(c, d, c - a, c - b);
  const cplx g2 = detail::gamma_ratio(c, -d, a, b);
  cplx out = 0.0;
  if (g1 != cplx(0.0, 0.0)) out += g1 * detail::hyp_series(a, b, 1.0 - d, t);
  if (g2 != cplx(0.0, 0.0)) {
    out += g2 * std::pow(cplx(t, 0.0), d) *
           detail::hyp_series(c - a, c - b, d + 1.0, t);
  }
  return out;
}

inline cplx hyp2f1(const Hyp2F1Params& p) {
  if (!(p.s >= 0.0) || !(p.s < 1.0)) {
    throw DomainError("hyp2f1: argument must lie in [0, 1)");
  }
  return hyp2f1(p.alpha, p.beta, p.gamma, p.s, 1.0 - p.s);
}

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the three-term recurrence.
inline double jacobi_poly(int n, double alpha, double beta, double x) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("jacobi_poly: alpha and beta must exceed -1");
  }
  if (n < 0) throw DomainError("jacobi_poly: negative degree");
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("jacobi_poly: x must lie in [-1, 1]");
  }
  if (n == 0) return 1.0;
  const double ab = alpha + beta;
  double prev = 1.0;
  double cur = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
  for (int k = 1; k < n; ++k) {
    const double two_k_ab = 2.0 * k + ab;
    const double a1 = 2.0 * (k + 1) * (k + ab + 1.0) * two_k_ab;
    const double a2 = (two_k_ab + 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (two_k_ab + 1.0) * (two_k_ab + 2.0) * two_k_ab;
    const double a4 = 2.0 * (k + alpha) * (k + beta) * (two_k_ab + 2.0);
    const double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace specfun
}  // namespace rmspec
