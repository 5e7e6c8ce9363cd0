#pragma once

#include <vector>

#include "lrm/pricing.hpp"

namespace lrm {

enum class HedgeMethod { fft, quad_direct };

struct HedgeResult {
  double xi = 0.0;       // risk-minimizing holding in the underlying
  double price = 0.0;    // call value at the same state
  double sigma_t = 0.0;  // local quadratic characteristic
  double mu_s_t = 0.0;   // local return mean
  HedgeMethod method = HedgeMethod::fft;
  SumDiagnostics diag;
};

// The local pieces q_t, Sigma_t and the jump density blow up as t -> 0+ in a
// way whose ratio has a finite limit; hedge calls at t = 0 evaluate those
// pieces at this floor instead. The induced error is far below the method
// tolerances.
inline constexpr double kHedgeTimeFloor = 1e-6;

// q_t(z + 1) - q_t(z) - q_t(1), the frequency-domain hedge numerator factor.
// Equals Sigma_t at z = 1.
cplx inner_integral(const ModelSpec& m, double t, cplx z);

// Hedge ratio by the damped frequency sum, single strike.
HedgeResult xi_fft(const ModelSpec& m, const MarketState& state,
                   const OptionSpec& opt, const TransformGrid& grid,
                   CharFnMode mode = CharFnMode::automatic);

// Independent slow path: differentiates nothing, instead integrates price
// differences against the jump density per the ratio's definition.
HedgeResult xi_quad_direct(const ModelSpec& m, const MarketState& state,
                           const OptionSpec& opt, const TransformGrid& grid);

// Hedge ratios on the whole conjugate log-strike lattice by one FFT.
std::vector<CurvePoint> xi_curve_fft(const ModelSpec& m, const MarketState& state,
                                     double maturity, const TransformGrid& grid,
                                     double strike_lo, double strike_hi,
                                     Exec exec = Exec::serial);

// Damped sums evaluated independently at arbitrary strikes (not snapped to
// the lattice); the per-strike loop is the data-parallel kernel behind the
// strike-sweep experiments.
std::vector<double> xi_strike_sweep(const ModelSpec& m, const MarketState& state,
                                    const std::vector<double>& strikes,
                                    const TransformGrid& grid,
                                    Exec exec = Exec::serial);

}  // namespace lrm
