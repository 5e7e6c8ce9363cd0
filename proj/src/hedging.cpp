#include "lrm/hedging.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lrm/fft.hpp"
#include "lrm/quadrature.hpp"

namespace lrm {

namespace {

constexpr double kPi = std::numbers::pi;

cplx inv_denominator(cplx z) {
  const cplx iz(-z.imag(), z.real());
  return 1.0 / ((iz - 1.0) * iz);
}

struct HedgeSetup {
  double t_loc = 0.0;   // floored local time for q_t / Sigma_t / density
  double sigma = 0.0;
  double mu = 0.0;
};

HedgeSetup local_pieces(const ModelSpec& m, const MarketState& state) {
  HedgeSetup s;
  s.t_loc = std::max(state.t, kHedgeTimeFloor);
  s.sigma = big_sigma(m, s.t_loc);
  s.mu = mu_s(m, s.t_loc);
  return s;
}

// Frequency coefficients shared by every strike at a fixed state:
// c_j = w_j inner(z_j) phi*(z_j) / ((i z_j - 1) i z_j).
std::vector<cplx> hedge_coefficients(const ModelSpec& m, const CharFnContext& ctx,
                                     double t_loc, const TransformGrid& grid) {
  std::vector<cplx> c(static_cast<std::size_t>(grid.N));
  for (int j = 0; j < grid.N; ++j) {
    const cplx z = grid.z(j);
    const cplx iz(-z.imag(), z.real());
    c[j] = grid.weight(j) * inner_integral(m, t_loc, iz) * ctx.phi_star(z) *
           inv_denominator(z);
  }
  return c;
}

// sum_j c_j e^{-i u_j x}, with the rotation recurrence resynced so drift
// stays at machine level.
cplx rotated_sum(const std::vector<cplx>& c, double eta, double x,
                 cplx* last = nullptr) {
  const cplx step = std::polar(1.0, -eta * x);
  cplx rot(1.0, 0.0);
  cplx sum = 0.0;
  cplx term = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if ((j & 511u) == 0)
      rot = std::polar(1.0, -eta * x * static_cast<double>(j));
    term = c[j] * rot;
    sum += term;
    rot *= step;
  }
  if (last) *last = term;
  return sum;
}

}  // namespace

cplx inner_integral(const ModelSpec& m, double t, cplx z) {
  return q(m, t, z + 1.0) - q(m, t, z) - q(m, t, 1.0);
}

HedgeResult xi_fft(const ModelSpec& m, const MarketState& state,
                   const OptionSpec& opt, const TransformGrid& grid,
                   CharFnMode mode) {
  validate_pricing_inputs(m, state, opt);
  require_damping(m, grid.R);
  grid.validate();

  const double x = std::log(opt.strike) - std::log(state.spot);  // k - s
  if (std::abs(x) > grid.b())
    throw std::out_of_range(
        "xi_fft: |log(K/S)| exceeds the grid half-width pi/eta");

  const HedgeSetup hs = local_pieces(m, state);
  const CharFnContext ctx(m, state.t, m.T, mode);

  // xi = e^{(1-R)(k-s)} / (pi Sigma) * Re sum_j c_j e^{-i u_j (k-s)},
  // and the price rides along on the same phi* evaluations.
  cplx hedge_sum = 0.0, price_sum = 0.0, last = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    const cplx z = grid.z(j);
    const cplx iz(-z.imag(), z.real());
    const cplx base =
        grid.weight(j) * ctx.phi_star(z) * inv_denominator(z) *
        std::exp(-iz * x);
    const cplx term = base * inner_integral(m, hs.t_loc, iz);
    hedge_sum += term;
    price_sum += base;
    last = term;
  }
  const double damp = std::exp(x);  // e^{k-s}, strike-homogeneous

  HedgeResult out;
  out.method = HedgeMethod::fft;
  out.sigma_t = hs.sigma;
  out.mu_s_t = hs.mu;
  out.xi = damp * hedge_sum.real() / (kPi * hs.sigma);
  out.price = std::max(state.spot * damp * price_sum.real() / kPi, 0.0);
  out.diag.imag_residual = std::abs(hedge_sum.imag()) * damp / (kPi * hs.sigma);
  out.diag.last_summand_rel =
      std::abs(last) / std::max(std::abs(hedge_sum), 1e-300);
  out.diag.coverage_warning = out.diag.last_summand_rel > 1e-10;
  return out;
}

HedgeResult xi_quad_direct(const ModelSpec& m, const MarketState& state,
                           const OptionSpec& opt, const TransformGrid& grid) {
  validate_pricing_inputs(m, state, opt);
  require_damping(m, grid.R);
  grid.validate();

  const HedgeSetup hs = local_pieces(m, state);
  const CharFnContext ctx(m, state.t, m.T);
  const double s = std::log(state.spot);
  const double k = std::log(opt.strike);

  // price coefficients, strike-independent
  std::vector<cplx> c(static_cast<std::size_t>(grid.N));
  cplx last = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    const cplx z = grid.z(j);
    c[j] = grid.weight(j) * ctx.phi_star(z) * inv_denominator(z);
  }
  auto price_at = [&](double kk) {
    const cplx sum = rotated_sum(c, grid.eta, kk - s);
    return std::exp(kk + (grid.R) * (s - kk)) * sum.real() / kPi;
  };
  const double f_k = price_at(k);

  // xi = (1/(S Sigma)) int (e^x f(K e^{-x}) - f(K)) (e^x - 1) pi(t, x) dx
  auto integrand = [&](double xx) {
    const double shifted = price_at(k - xx);
    return (std::exp(xx) * shifted - f_k) * std::expm1(xx) *
           levy_density(m, hs.t_loc, xx);
  };
  const double tH = std::pow(hs.t_loc, -m.params.H);
  const double x_hi = 40.0 / (m.params.M * tH - 2.0);
  const double x_lo = 40.0 / (m.params.G * tH);
  const double integral =
      gk_adaptive(integrand, -x_lo, -1e-300, 1e-11, 1e-9) +
      gk_adaptive(integrand, 1e-300, x_hi, 1e-11, 1e-9);

  // diagnostics from the price sum at the hedge strike
  const cplx sum_k = rotated_sum(c, grid.eta, k - s, &last);

  HedgeResult out;
  out.method = HedgeMethod::quad_direct;
  out.sigma_t = hs.sigma;
  out.mu_s_t = hs.mu;
  out.xi = integral / (state.spot * hs.sigma);
  out.price = std::max(f_k, 0.0);
  out.diag.imag_residual =
      std::abs(sum_k.imag()) * std::exp(k + grid.R * (s - k)) / kPi;
  out.diag.last_summand_rel =
      std::abs(last) / std::max(std::abs(sum_k), 1e-300);
  out.diag.coverage_warning = out.diag.last_summand_rel > 1e-10;
  return out;
}

std::vector<CurvePoint> xi_curve_fft(const ModelSpec& m, const MarketState& state,
                                     double maturity, const TransformGrid& grid,
                                     double strike_lo, double strike_hi,
                                     Exec exec) {
  validate_pricing_inputs(m, state, {strike_lo, maturity});
  require_damping(m, grid.R);
  grid.validate();
  if (!(strike_hi >= strike_lo))
    throw std::invalid_argument("xi_curve_fft: empty strike window");

  const HedgeSetup hs = local_pieces(m, state);
  const CharFnContext ctx(m, state.t, m.T);
  const double s = std::log(state.spot);
  const double lam = grid.lambda();
  const double k0 = s - grid.b();
  const double k_lo = std::log(strike_lo);
  const double k_hi = std::log(strike_hi);
  if (k_lo < k0 - 1e-12 || k_hi > k0 + lam * (grid.N - 1) + 1e-12)
    throw std::out_of_range(
        "xi_curve_fft: strike window outside the covered lattice");

  std::vector<cplx> c(static_cast<std::size_t>(grid.N));
  for_each_index(grid.N, exec, [&](std::int64_t j) {
    const int jj = static_cast<int>(j);
    const cplx z = grid.z(jj);
    const cplx iz(-z.imag(), z.real());
    const double sign = (jj % 2 == 0) ? 1.0 : -1.0;
    c[j] = grid.weight(jj) * sign * inner_integral(m, hs.t_loc, iz) *
           ctx.phi_star(z) * inv_denominator(z);
  });
  fft_inplace(c);

  const int m_lo = static_cast<int>(std::ceil((k_lo - k0) / lam - 1e-9));
  const int m_hi = static_cast<int>(std::floor((k_hi - k0) / lam + 1e-9));
  std::vector<CurvePoint> out;
  out.reserve(std::max(0, m_hi - m_lo + 1));
  for (int mm = m_lo; mm <= m_hi; ++mm) {
    const double km = k0 + lam * mm;
    const double xi =
        std::exp((1.0 - grid.R) * (km - s)) * c[mm].real() / (kPi * hs.sigma);
    out.push_back({std::exp(km), xi});
  }
  return out;
}

std::vector<double> xi_strike_sweep(const ModelSpec& m, const MarketState& state,
                                    const std::vector<double>& strikes,
                                    const TransformGrid& grid, Exec exec) {
  if (strikes.empty()) return {};
  validate_pricing_inputs(m, state, {strikes.front(), m.T});
  require_damping(m, grid.R);
  grid.validate();
  for (double kk : strikes) {
    if (!(kk > 0.0))
      throw std::invalid_argument("xi_strike_sweep: strikes must be positive");
    if (std::abs(std::log(kk) - std::log(state.spot)) > grid.b())
      throw std::out_of_range(
          "xi_strike_sweep: |log(K/S)| exceeds the grid half-width pi/eta");
  }

  const HedgeSetup hs = local_pieces(m, state);
  const CharFnContext ctx(m, state.t, m.T);
  const double s = std::log(state.spot);
  const std::vector<cplx> c = hedge_coefficients(m, ctx, hs.t_loc, grid);

  std::vector<double> out(strikes.size());
  for_each_index(static_cast<std::int64_t>(strikes.size()), exec,
                 [&](std::int64_t i) {
                   const double x = std::log(strikes[i]) - s;
                   const cplx sum = rotated_sum(c, grid.eta, x);
                   out[i] = std::exp((1.0 - grid.R) * x) * sum.real() /
                            (kPi * hs.sigma);
                 });
  return out;
}

}  // namespace lrm
