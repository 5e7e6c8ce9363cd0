#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lrm {

using cplx = std::complex<double>;

// Thrown when an argument leaves the analyticity strip of the unit-time law,
// i.e. the exponential moment in question does not exist.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when a model/grid combination violates a precondition that the
// numerics cannot survive (damping line outside the moment strip). The CLI
// maps this to exit code 2.
struct assumption_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Self-similar additive model whose unit-time law is a difference of gamma
// variables: C is the common shape, M and G the rates of the positive and
// negative tails, H the scaling exponent.
struct VGSSDParams {
  double C = 1.0;
  double G = 4.0;
  double M = 4.0;
  double H = 0.5;
};

enum class DriftKind { martingale, half_variance, tabulated };

// rho'_t, the absolutely continuous drift of the log price. The martingale
// choice makes the discounted price a martingale under the physical measure;
// half_variance mimics the Black-Scholes -sigma^2/2 convention. A tabulated
// drift interpolates (t, rho'_t) nodes linearly and refuses to extrapolate.
struct DriftSpec {
  DriftKind kind = DriftKind::martingale;
  std::vector<std::pair<double, double>> grid;

  static DriftSpec martingale() { return {}; }
  static DriftSpec half_variance() {
    DriftSpec d;
    d.kind = DriftKind::half_variance;
    return d;
  }
  static DriftSpec tabulated(std::vector<std::pair<double, double>> nodes);
};

struct ModelSpec {
  VGSSDParams params;
  DriftSpec drift;
  double T = 1.0;  // horizon; every time argument lives in [0, T]
};

ModelSpec make_model(VGSSDParams p, DriftSpec d, double T);

struct MarketState {
  double t = 0.0;
  double spot = 1.0;
};

struct OptionSpec {
  double strike = 1.0;
  double maturity = 1.0;
};

// True when C = 1, G = M, H = 1/2, where q and its time integral have
// elementary closed forms.
bool has_vg_closed_forms(const VGSSDParams& p);

// Levy density of the time-inhomogeneous jump compensator at (t, x), t in
// (0, T], x != 0.
double levy_density(const ModelSpec& m, double t, double x);

// q_t(z): local exponent derivative, analytic for Re(z) in
// (-G t^-H, M t^-H). Throws pole_error outside the closed strip.
cplx q(const ModelSpec& m, double t, cplx z);

// Integral of q_s(z) over s in [t0, t1]; the worst-case strip is the one at
// s = t1. Closed form in the C = 1, G = M, H = 1/2 case, otherwise a
// substitution v = s^H followed by adaptive quadrature of a smooth rational.
cplx q_integrated(const ModelSpec& m, double t0, double t1, cplx z);

double rho_prime(const ModelSpec& m, double t);
double rho(const ModelSpec& m, double t);  // integral of rho' over [0, t]

// l_t(z) = z rho'_t + q_t(z).
cplx l(const ModelSpec& m, double t, cplx z);

// Mean rate of the price return under the physical measure, l_t(1).
double mu_s(const ModelSpec& m, double t);

// Local quadratic characteristic of the return, q_t(2) - 2 q_t(1) > 0.
double big_sigma(const ModelSpec& m, double t);

// Integrand of the minimal-martingale density, mu_s (e^x - 1) / Sigma.
double theta(const ModelSpec& m, double t, double x);

// Risk-premium intensity per unit of spot, mu_s / (S Sigma).
double lambda(const ModelSpec& m, const MarketState& state);

// kappa_t(z) = z rho_t + int_0^t q_s(z) ds; cumulant of L_t.
cplx cumulant(const ModelSpec& m, double t, cplx z);

}  // namespace lrm
