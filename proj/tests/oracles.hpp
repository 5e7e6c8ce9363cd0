#pragma once

// Slow reference implementations built directly on the jump density, used to
// pin the closed forms. Nothing here shares code with the library paths
// beyond levy_density itself.

#include <algorithm>
#include <cmath>
#include <complex>

#include "lrm/model.hpp"
#include "lrm/quadrature.hpp"

namespace oracles {

using lrm::cplx;

inline double right_cutoff(const lrm::ModelSpec& m, double t, double re_z) {
  const double rate = m.params.M * std::pow(t, -m.params.H) - std::max(re_z, 0.0);
  return 40.0 / rate;
}

inline double left_cutoff(const lrm::ModelSpec& m, double t, double re_z) {
  const double rate = m.params.G * std::pow(t, -m.params.H) + std::min(re_z, 0.0);
  return 40.0 / rate;
}

// q_t(z) = int (e^{zx} - 1) pi(t, x) dx
inline cplx q_oracle(const lrm::ModelSpec& m, double t, cplx z) {
  auto f = [&](double x) {
    return (std::exp(z * x) - 1.0) * lrm::levy_density(m, t, x);
  };
  const cplx neg = lrm::gk_adaptive(f, -left_cutoff(m, t, z.real()), -1e-300, 1e-13, 1e-11);
  const cplx pos = lrm::gk_adaptive(f, 1e-300, right_cutoff(m, t, z.real()), 1e-13, 1e-11);
  return neg + pos;
}

// Sigma_t = int (e^x - 1)^2 pi(t, x) dx
inline double sigma_oracle(const lrm::ModelSpec& m, double t) {
  auto f = [&](double x) {
    const double g = std::expm1(x);
    return g * g * lrm::levy_density(m, t, x);
  };
  return lrm::gk_adaptive(f, -left_cutoff(m, t, 0.0), -1e-300, 1e-13, 1e-11) +
         lrm::gk_adaptive(f, 1e-300, right_cutoff(m, t, 2.0), 1e-13, 1e-11);
}

// int (e^{zx} - 1)(e^x - 1) pi(t, x) dx = q(z+1) - q(z) - q(1)
inline cplx inner_oracle(const lrm::ModelSpec& m, double t, cplx z) {
  auto f = [&](double x) {
    return (std::exp(z * x) - 1.0) * std::expm1(x) * lrm::levy_density(m, t, x);
  };
  const cplx neg = lrm::gk_adaptive(f, -left_cutoff(m, t, z.real()), -1e-300, 1e-13, 1e-11);
  const cplx pos = lrm::gk_adaptive(f, 1e-300, right_cutoff(m, t, z.real() + 1.0), 1e-13, 1e-11);
  return neg + pos;
}

// int_{t0}^{t1} q_s(z) ds by quadrature over the jump-density oracle. The
// substitution v = s^H removes the s^{H-1} endpoint singularity; the inner
// evaluation stays the density integral above.
inline cplx q_time_oracle(const lrm::ModelSpec& m, double t0, double t1, cplx z) {
  const double H = m.params.H;
  auto f = [&](double v) {
    const double s = std::pow(v, 1.0 / H);
    return q_oracle(m, s, z) * (1.0 / H) * std::pow(v, 1.0 / H - 1.0);
  };
  return lrm::gk_adaptive(f, std::pow(t0, H), std::pow(t1, H), 1e-12, 1e-10,
                          nullptr, 20);
}

inline double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-30);
}

}  // namespace oracles
