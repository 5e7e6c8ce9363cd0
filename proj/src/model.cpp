#include "lrm/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrm/quadrature.hpp"

namespace lrm {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_time(double t, double T, const char* who) {
  if (!(t > 0.0) || !(t <= T))
    throw std::domain_error(std::string(who) + ": t must lie in (0, T]");
}

// Analyticity strip at time t is Re(z) in (-G t^-H, M t^-H); the boundary is
// excluded because the corresponding exponential moment diverges.
void check_strip(const VGSSDParams& p, double t, cplx z, const char* who) {
  const double th = std::pow(t, p.H);
  const double re = z.real();
  if (!(re * th < p.M) || !(-re * th < p.G))
    throw pole_error(std::string(who) +
                     ": Re(z) outside the strip (-G t^-H, M t^-H)");
}

cplx q_raw(const VGSSDParams& p, double t, cplx z) {
  const double th = std::pow(t, p.H);
  const cplx num = z * (p.G - p.M + 2.0 * z * th);
  const cplx den = (p.M - z * th) * (p.G + z * th);
  return p.C * p.H * std::pow(t, p.H - 1.0) * num / den;
}

}  // namespace

DriftSpec DriftSpec::tabulated(std::vector<std::pair<double, double>> nodes) {
  require(nodes.size() >= 2, "tabulated drift needs at least two nodes");
  require(nodes.front().first >= 0.0,
          "tabulated drift grid must start at a nonnegative time");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    require(nodes[i].first > nodes[i - 1].first,
            "tabulated drift grid must be strictly increasing");
  DriftSpec d;
  d.kind = DriftKind::tabulated;
  d.grid = std::move(nodes);
  return d;
}

ModelSpec make_model(VGSSDParams p, DriftSpec d, double T) {
  require(p.C > 0.0 && p.G > 0.0 && p.M > 0.0 && p.H > 0.0,
          "model parameters C, G, M, H must be positive");
  require(T > 0.0, "horizon T must be positive");
  if (d.kind == DriftKind::tabulated)
    require(d.grid.back().first >= T,
            "tabulated drift grid must cover (0, T]");
  return ModelSpec{p, std::move(d), T};
}

bool has_vg_closed_forms(const VGSSDParams& p) {
  return p.C == 1.0 && p.G == p.M && p.H == 0.5;
}

double levy_density(const ModelSpec& m, double t, double x) {
  check_time(t, m.T, "levy_density");
  if (x == 0.0) throw std::domain_error("levy_density: x = 0 is excluded");
  const VGSSDParams& p = m.params;
  const double s = std::pow(t, -p.H);
  const double scale = p.C * p.H * std::pow(t, -1.0 - p.H);
  return x > 0.0 ? scale * p.M * std::exp(-p.M * s * x)
                 : scale * p.G * std::exp(p.G * s * x);
}

cplx q(const ModelSpec& m, double t, cplx z) {
  check_time(t, m.T, "q");
  check_strip(m.params, t, z, "q");
  return q_raw(m.params, t, z);
}

cplx q_integrated(const ModelSpec& m, double t0, double t1, cplx z) {
  if (!(t0 >= 0.0) || !(t1 >= t0) || !(t1 <= m.T))
    throw std::domain_error("q_integrated: need 0 <= t0 <= t1 <= T");
  if (t0 == t1) return {};
  check_strip(m.params, t1, z, "q_integrated");
  const VGSSDParams& p = m.params;
  if (has_vg_closed_forms(p)) {
    // Both log arguments keep a positive real part inside the strip, so the
    // principal branches subtract without a cut crossing.
    const double m2 = p.M * p.M;
    return std::log(m2 - z * z * t0) - std::log(m2 - z * z * t1);
  }
  // v = s^H turns q_s(z) ds into C z (G - M + 2 z v) / ((M - z v)(G + z v)) dv.
  auto f = [&p, z](double v) {
    return p.C * z * (p.G - p.M + 2.0 * z * v) /
           ((p.M - z * v) * (p.G + z * v));
  };
  return gk_adaptive(f, std::pow(t0, p.H), std::pow(t1, p.H), 1e-13, 1e-12);
}

double rho_prime(const ModelSpec& m, double t) {
  switch (m.drift.kind) {
    case DriftKind::martingale:
      return -q(m, t, 1.0).real();
    case DriftKind::half_variance:
      return -0.5 * q(m, t, 2.0).real();
    case DriftKind::tabulated: {
      check_time(t, m.T, "rho_prime");
      const auto& g = m.drift.grid;
      if (t < g.front().first || t > g.back().first)
        throw std::domain_error(
            "rho_prime: t outside the tabulated grid (no extrapolation)");
      auto it = std::lower_bound(
          g.begin(), g.end(), t,
          [](const std::pair<double, double>& n, double v) { return n.first < v; });
      if (it->first == t) return it->second;
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double w = (t - lo.first) / (hi.first - lo.first);
      return lo.second + w * (hi.second - lo.second);
    }
  }
  throw std::logic_error("rho_prime: unknown drift kind");
}

double rho(const ModelSpec& m, double t) {
  if (!(t >= 0.0) || !(t <= m.T))
    throw std::domain_error("rho: t must lie in [0, T]");
  if (t == 0.0) return 0.0;
  switch (m.drift.kind) {
    case DriftKind::martingale:
      return -q_integrated(m, 0.0, t, 1.0).real();
    case DriftKind::half_variance:
      return -0.5 * q_integrated(m, 0.0, t, 2.0).real();
    case DriftKind::tabulated: {
      const auto& g = m.drift.grid;
      if (g.front().first != 0.0)
        throw std::domain_error(
            "rho: tabulated grid must start at t = 0 to integrate from 0");
      if (t > g.back().first)
        throw std::domain_error(
            "rho: t outside the tabulated grid (no extrapolation)");
      double acc = 0.0;
      for (std::size_t i = 1; i < g.size(); ++i) {
        const auto& lo = g[i - 1];
        const auto& hi = g[i];
        if (t <= hi.first) {
          const double v = rho_prime(m, t);
          acc += 0.5 * (t - lo.first) * (lo.second + v);
          return acc;
        }
        acc += 0.5 * (hi.first - lo.first) * (lo.second + hi.second);
      }
      return acc;
    }
  }
  throw std::logic_error("rho: unknown drift kind");
}

cplx l(const ModelSpec& m, double t, cplx z) {
  return z * rho_prime(m, t) + q(m, t, z);
}

double mu_s(const ModelSpec& m, double t) {
  return rho_prime(m, t) + q(m, t, 1.0).real();
}

double big_sigma(const ModelSpec& m, double t) {
  return (q(m, t, 2.0) - 2.0 * q(m, t, 1.0)).real();
}

double theta(const ModelSpec& m, double t, double x) {
  return mu_s(m, t) * std::expm1(x) / big_sigma(m, t);
}

double lambda(const ModelSpec& m, const MarketState& state) {
  if (!(state.spot > 0.0)) throw std::domain_error("lambda: spot must be positive");
  return mu_s(m, state.t) / (state.spot * big_sigma(m, state.t));
}

cplx cumulant(const ModelSpec& m, double t, cplx z) {
  if (!(t >= 0.0) || !(t <= m.T))
    throw std::domain_error("cumulant: t must lie in [0, T]");
  if (t == 0.0) return {};
  return z * rho(m, t) + q_integrated(m, 0.0, t, z);
}

}  // namespace lrm
