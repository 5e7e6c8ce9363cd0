#include "lrm/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lrm/fft.hpp"

namespace lrm {

namespace {

constexpr double kPi = std::numbers::pi;

// 1 / ((iz - 1) iz) with z = u - iR; never vanishes for R in (1, 2]
cplx inv_denominator(cplx z) {
  const cplx iz(-z.imag(), z.real());
  return 1.0 / ((iz - 1.0) * iz);
}

}  // namespace

void validate_pricing_inputs(const ModelSpec& m, const MarketState& state,
                             const OptionSpec& opt) {
  if (!(state.spot > 0.0))
    throw std::invalid_argument("pricing: spot must be positive");
  if (!(opt.strike > 0.0))
    throw std::invalid_argument("pricing: strike must be positive");
  if (std::abs(opt.maturity - m.T) > 1e-12 * std::max(1.0, m.T))
    throw std::invalid_argument(
        "pricing: option maturity must equal the model horizon");
  if (!(state.t >= 0.0) || !(state.t < m.T))
    throw std::invalid_argument("pricing: need 0 <= t < maturity");
}

void require_damping(const ModelSpec& m, double R) {
  const double margin =
      m.params.M * std::pow(m.T, -m.params.H) - (R + 1.0);
  if (!(margin > 0.0))
    throw assumption_failure(
        "damping condition fails: M T^-H = " +
        std::to_string(m.params.M * std::pow(m.T, -m.params.H)) +
        " does not exceed R + 1 = " + std::to_string(R + 1.0));
}

PriceResult price_call_quad(const ModelSpec& m, const MarketState& state,
                            const OptionSpec& opt, const TransformGrid& grid) {
  validate_pricing_inputs(m, state, opt);
  require_damping(m, grid.R);
  grid.validate();

  const double k = std::log(opt.strike);
  const double s = std::log(state.spot);
  // the discrete sum is 2 pi / eta periodic in k - s; past half a period the
  // value is an alias of some other strike, so refuse rather than mislead
  if (std::abs(k - s) > grid.b())
    throw std::out_of_range(
        "price_call_quad: |log(K/S)| exceeds the grid half-width pi/eta");

  const CharFnContext ctx(m, state.t, m.T);

  // summand_j = phi*(z_j) e^{k + i z_j (s - k)} / ((i z_j - 1) i z_j)
  cplx sum = 0.0;
  cplx last = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    const cplx z = grid.z(j);
    const cplx iz(-z.imag(), z.real());
    const cplx term = grid.weight(j) * ctx.phi_star(z) *
                      std::exp(k + iz * (s - k)) * inv_denominator(z);
    sum += term;
    last = term;
  }

  PriceResult out;
  out.price = std::max(sum.real() / kPi, 0.0);
  out.diag.imag_residual = std::abs(sum.imag()) / kPi;
  out.diag.last_summand_rel =
      std::abs(last) / std::max(std::abs(sum), 1e-300);
  out.diag.coverage_warning = out.diag.last_summand_rel > 1e-10;
  return out;
}

std::vector<CurvePoint> price_curve_fft(const ModelSpec& m, const MarketState& state,
                                        double maturity, const TransformGrid& grid,
                                        double strike_lo, double strike_hi,
                                        Exec exec) {
  validate_pricing_inputs(m, state, {strike_lo, maturity});
  require_damping(m, grid.R);
  grid.validate();
  if (!(strike_hi >= strike_lo))
    throw std::invalid_argument("price_curve_fft: empty strike window");

  const double s = std::log(state.spot);
  const double lam = grid.lambda();
  const double k0 = s - grid.b();
  // lattice coverage: k_m = k0 + lam m, m = 0 .. N-1
  const double k_lo = std::log(strike_lo);
  const double k_hi = std::log(strike_hi);
  if (k_lo < k0 - 1e-12 || k_hi > k0 + lam * (grid.N - 1) + 1e-12)
    throw std::out_of_range(
        "price_curve_fft: strike window outside the covered lattice");

  const CharFnContext ctx(m, state.t, m.T);

  // With k0 = s - pi/eta the shift phase collapses to (-1)^j:
  // price(k_m) = e^{(1-R)k_m + R s} / pi * Re X_m.
  std::vector<cplx> c(static_cast<std::size_t>(grid.N));
  for_each_index(grid.N, exec, [&](std::int64_t j) {
    const int jj = static_cast<int>(j);
    const cplx z = grid.z(jj);
    const double sign = (jj % 2 == 0) ? 1.0 : -1.0;
    c[j] = grid.weight(jj) * sign * ctx.phi_star(z) * inv_denominator(z);
  });
  fft_inplace(c);

  const int m_lo = static_cast<int>(std::ceil((k_lo - k0) / lam - 1e-9));
  const int m_hi = static_cast<int>(std::floor((k_hi - k0) / lam + 1e-9));
  std::vector<CurvePoint> out;
  out.reserve(std::max(0, m_hi - m_lo + 1));
  for (int mm = m_lo; mm <= m_hi; ++mm) {
    const double km = k0 + lam * mm;
    const double price =
        std::exp((1.0 - grid.R) * km + grid.R * s) * c[mm].real() / kPi;
    out.push_back({std::exp(km), std::max(price, 0.0)});
  }
  return out;
}

double interpolate_curve(const std::vector<CurvePoint>& curve, double strike) {
  if (curve.size() < 5)
    throw std::invalid_argument("interpolate_curve: need at least 5 points");
  const double k = std::log(strike);
  // locate the nearest node, then center a 5-point stencil on it
  std::size_t lo = 0, hi = curve.size() - 1;
  if (k < std::log(curve.front().strike) || k > std::log(curve.back().strike))
    throw std::out_of_range("interpolate_curve: strike outside the curve");
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (std::log(curve[mid].strike) <= k ? lo : hi) = mid;
  }
  const std::size_t center =
      (std::abs(std::log(curve[lo].strike) - k) <=
       std::abs(std::log(curve[hi].strike) - k))
          ? lo
          : hi;
  std::size_t first = center >= 2 ? center - 2 : 0;
  first = std::min(first, curve.size() - 5);

  double acc = 0.0;
  for (std::size_t i = first; i < first + 5; ++i) {
    double w = 1.0;
    const double ki = std::log(curve[i].strike);
    for (std::size_t j = first; j < first + 5; ++j) {
      if (j == i) continue;
      const double kj = std::log(curve[j].strike);
      w *= (k - kj) / (ki - kj);
    }
    acc += w * curve[i].value;
  }
  return acc;
}

InversionResult price_call_inversion(const ModelSpec& m, const MarketState& state,
                                     const OptionSpec& opt,
                                     const InversionConfig& cfg) {
  validate_pricing_inputs(m, state, opt);
  if (cfg.n_u < 8 || !(cfg.u_max > 0.0))
    throw std::invalid_argument("inversion: bad frequency grid");

  const CharFnContext ctx(m, state.t, m.T);
  const int n = cfg.n_u;
  const double eta_u = cfg.u_max / n;
  const double lam_y = 2.0 * kPi / (n * eta_u);
  const double b_y = kPi / eta_u;

  // density on y_m = -b_y + lam_y m from the positive-frequency half,
  // p(y) = (1/pi) Re int_0^inf e^{-iuy} phi*(u) du; the shift phase is
  // again (-1)^j because b_y eta_u = pi.
  std::vector<cplx> c(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double w = (j == 0) ? 0.5 * eta_u : eta_u;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    c[j] = w * sign * ctx.phi_star(cplx(eta_u * j, 0.0));
  }
  fft_inplace(c);

  std::vector<double> p(static_cast<std::size_t>(n));
  for (int mm = 0; mm < n; ++mm) p[mm] = c[mm].real() / kPi;

  InversionResult out;
  double norm = 0.0;
  for (int mm = 0; mm < n; ++mm) {
    const double w = (mm == 0 || mm == n - 1) ? 0.5 : 1.0;
    norm += w * p[mm];
  }
  out.density_norm = norm * lam_y;

  // Payoff integration with the kink cell split at y* = log(K/S). The upper
  // cut keeps the aliased frequency tail away from the exponentially large
  // payoff near the window edge; beyond it the density has decayed by more
  // than e^-25 relative to the payoff growth.
  const double ystar = std::log(opt.strike / state.spot);
  const double tail_rate =
      m.params.M * std::pow(m.T, -m.params.H) - 1.0;
  const double y_cut = std::min(b_y, 0.1 + 25.0 / tail_rate);
  auto y_at = [&](int mm) { return -b_y + lam_y * mm; };
  auto payoff = [&](double y) {
    return std::max(state.spot * std::exp(y) - opt.strike, 0.0);
  };
  const int m_hi = std::min(
      n - 1, static_cast<int>(std::floor((y_cut + b_y) / lam_y)));

  double price = 0.0;
  int m_lo = 1;
  if (ystar > y_at(0)) {
    const int cell = static_cast<int>(std::floor((ystar + b_y) / lam_y));
    m_lo = cell + 2;
    if (cell + 1 <= m_hi) {
      // payoff vanishes at the kink, so the split cell is a single trapezoid
      price += 0.5 * (y_at(cell + 1) - ystar) * payoff(y_at(cell + 1)) *
               p[cell + 1];
    }
  }
  for (int mm = m_lo; mm <= m_hi; ++mm)
    price += 0.5 * lam_y *
             (payoff(y_at(mm - 1)) * p[mm - 1] + payoff(y_at(mm)) * p[mm]);
  out.price = std::max(price, 0.0);

  out.tail_leak = payoff(y_at(m_hi)) * std::abs(p[m_hi]);
  out.grid_warning =
      std::abs(out.density_norm - 1.0) > 1e-6 || out.tail_leak > 1e-7;
  return out;
}

}  // namespace lrm
