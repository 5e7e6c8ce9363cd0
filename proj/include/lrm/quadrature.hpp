#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>
#include <utility>

namespace lrm {

// Adaptive Gauss-Kronrod 7-15 for real- or complex-valued integrands of a
// real variable. The error estimate is |K15 - G7| per panel; panels are
// bisected until the estimate clears an absolute budget apportioned by
// length or a relative target on the panel value.

struct QuadDiag {
  double err = 0.0;
  long panels = 0;
  bool converged = true;
};

namespace quad_detail {

// 15-point Kronrod nodes on [0, 1] side (symmetric), with the embedded
// 7-point Gauss rule sitting on the odd-indexed nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class F, class T>
void panel(F& f, double a, double b, T& kronrod, double& err) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  const T fc = f(c);
  T g = kGaussWeights[3] * fc;
  T k = kKronrodWeights[7] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const T fs = f(c - dx) + f(c + dx);
    k += kKronrodWeights[i] * fs;
    if (i % 2 == 1) g += kGaussWeights[i / 2] * fs;
  }
  kronrod = h * k;
  err = std::abs(h * (k - g));
}

template <class F, class T>
T recurse(F& f, double a, double b, double abs_budget, double rel_tol,
          int depth, QuadDiag& diag) {
  T v;
  double e;
  panel<F, T>(f, a, b, v, e);
  ++diag.panels;
  const double target = std::max(abs_budget, rel_tol * std::abs(v));
  if (e <= target || depth <= 0) {
    if (e > target) diag.converged = false;
    diag.err += e;
    return v;
  }
  const double m = 0.5 * (a + b);
  return recurse<F, T>(f, a, m, 0.5 * abs_budget, rel_tol, depth - 1, diag) +
         recurse<F, T>(f, m, b, 0.5 * abs_budget, rel_tol, depth - 1, diag);
}

}  // namespace quad_detail

template <class F, class T = std::invoke_result_t<F&, double>>
T gk_adaptive(F f, double a, double b, double abs_tol = 1e-10,
              double rel_tol = 1e-10, QuadDiag* diag = nullptr,
              int max_depth = 48) {
  QuadDiag d;
  T v{};
  if (a != b) v = quad_detail::recurse<F, T>(f, a, b, abs_tol, rel_tol, max_depth, d);
  if (diag) *diag = d;
  return v;
}

// 64-point Gauss-Legendre panel, refined by bisection when the panel value
// disagrees with the sum over its halves. Used for smooth integrands where a
// fixed high-order rule is near machine precision per panel.

namespace quad_detail {

struct GL64 {
  std::array<double, 32> x;  // positive half of the nodes
  std::array<double, 32> w;
};

inline const GL64& gl64() {
  static const GL64 table = [] {
    GL64 t;
    constexpr int n = 64;
    for (int i = 0; i < 32; ++i) {
      // Newton iteration on P_64 from the Chebyshev initial guess.
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        const double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      t.x[i] = x;
      t.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return t;
  }();
  return table;
}

template <class F, class T>
T gl64_panel(F& f, double a, double b) {
  const GL64& t = gl64();
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  T acc{};
  for (int i = 0; i < 32; ++i) {
    const double dx = h * t.x[i];
    acc += t.w[i] * (f(c - dx) + f(c + dx));
  }
  return h * acc;
}

template <class F, class T>
T gl64_recurse(F& f, double a, double b, T whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const T left = gl64_panel<F, T>(f, a, m);
  const T right = gl64_panel<F, T>(f, m, b);
  const T sum = left + right;
  if (depth <= 0 ||
      std::abs(whole - sum) <= std::max(tol, tol * std::abs(sum)))
    return sum;
  return gl64_recurse<F, T>(f, a, m, left, tol, depth - 1) +
         gl64_recurse<F, T>(f, m, b, right, tol, depth - 1);
}

}  // namespace quad_detail

template <class F, class T = std::invoke_result_t<F&, double>>
T gl64_adaptive(F f, double a, double b, double tol = 1e-11,
                int max_depth = 24) {
  if (a == b) return T{};
  const T whole = quad_detail::gl64_panel<F, T>(f, a, b);
  return quad_detail::gl64_recurse<F, T>(f, a, b, whole, tol, max_depth);
}

}  // namespace lrm
