#include "lrm/mc.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

namespace lrm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 53-bit lattice index in [0, 2^53); the uniform is (j + 1/2) 2^-53, which
// keeps both u and its antithetic mirror exactly representable and strictly
// inside (0, 1).
std::uint64_t lattice53(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(seed + k * 0x9e3779b97f4a7c15ULL) >> 11;
}

double to_unit(std::uint64_t j) {
  return (static_cast<double>(j) + 0.5) * 0x1.0p-53;
}

// inverse-CDF gamma draw with the shape-1 fast path
double gamma_draw(double shape, double u) {
  if (shape == 1.0) return -std::log1p(-u);
  return boost::math::gamma_p_inv(shape, u);
}

}  // namespace

std::vector<double> sample_terminal_log_price(const ModelSpec& m, double T,
                                              const MCConfig& cfg, Exec exec) {
  if (m.drift.kind != DriftKind::martingale)
    throw std::invalid_argument(
        "monte carlo sampling supports the martingale drift only");
  if (!(T > 0.0) || !(T <= m.T))
    throw std::domain_error("sample_terminal_log_price: T outside (0, model T]");
  if (cfg.paths <= 0)
    throw std::invalid_argument("monte carlo: need a positive path count");

  const VGSSDParams& p = m.params;
  const double scale = std::pow(T, p.H);
  const double drift = rho(m, T);

  std::vector<double> out(static_cast<std::size_t>(cfg.paths));
  auto draw = [&](std::uint64_t ju, std::uint64_t jv) {
    const double gp = gamma_draw(p.C, to_unit(ju));
    const double gn = gamma_draw(p.C, to_unit(jv));
    return scale * (gp / p.M - gn / p.G) + drift;
  };
  constexpr std::uint64_t kMirror = (1ULL << 53) - 1;

  if (cfg.antithetic) {
    const std::int64_t pairs = (cfg.paths + 1) / 2;
    for_each_index(pairs, exec, [&](std::int64_t i) {
      const std::uint64_t ju = lattice53(cfg.seed, 2 * static_cast<std::uint64_t>(i));
      const std::uint64_t jv = lattice53(cfg.seed, 2 * static_cast<std::uint64_t>(i) + 1);
      out[2 * i] = draw(ju, jv);
      if (2 * i + 1 < cfg.paths)
        out[2 * i + 1] = draw(kMirror - ju, kMirror - jv);
    });
  } else {
    for_each_index(cfg.paths, exec, [&](std::int64_t i) {
      out[i] = draw(lattice53(cfg.seed, 2 * static_cast<std::uint64_t>(i)),
                    lattice53(cfg.seed, 2 * static_cast<std::uint64_t>(i) + 1));
    });
  }
  return out;
}

MCPrice mc_call_price(const ModelSpec& m, const MarketState& state,
                      const OptionSpec& opt, const MCConfig& cfg, Exec exec) {
  if (state.t != 0.0)
    throw std::invalid_argument("mc_call_price prices from t = 0 only");
  if (!(state.spot > 0.0) || !(opt.strike > 0.0))
    throw std::invalid_argument("mc_call_price: spot and strike must be positive");
  if (std::abs(opt.maturity - m.T) > 1e-12 * std::max(1.0, m.T))
    throw std::invalid_argument(
        "mc_call_price: option maturity must equal the model horizon");

  const std::vector<double> logs =
      sample_terminal_log_price(m, opt.maturity, cfg, exec);

  // Pair means go into the variance when antithetic sampling is on, since
  // the two legs of a pair are dependent.
  double sum = 0.0, sum2 = 0.0;
  std::int64_t groups = 0;
  const std::int64_t n = static_cast<std::int64_t>(logs.size());
  auto payoff = [&](double lp) {
    return std::max(state.spot * std::exp(lp) - opt.strike, 0.0);
  };
  if (cfg.antithetic) {
    for (std::int64_t i = 0; i + 1 < n; i += 2) {
      const double g = 0.5 * (payoff(logs[i]) + payoff(logs[i + 1]));
      sum += g;
      sum2 += g * g;
      ++groups;
    }
    if (n % 2 == 1) {
      const double g = payoff(logs[n - 1]);
      sum += g;
      sum2 += g * g;
      ++groups;
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      const double g = payoff(logs[i]);
      sum += g;
      sum2 += g * g;
      ++groups;
    }
  }

  MCPrice out;
  const double mean = sum / groups;
  out.price = mean;
  if (groups > 1) {
    const double var =
        std::max(0.0, (sum2 - groups * mean * mean) / (groups - 1));
    out.std_error = std::sqrt(var / groups);
  }
  return out;
}

}  // namespace lrm
