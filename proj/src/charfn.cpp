#include "lrm/charfn.hpp"

#include <cmath>

#include "lrm/quadrature.hpp"

namespace lrm {

CharFnContext::CharFnContext(ModelSpec model, double t, double T, CharFnMode mode)
    : model_(std::move(model)), t_(t), T_(T) {
  if (!(t >= 0.0) || !(t < T) || !(T <= model_.T))
    throw std::domain_error("phi_star: need 0 <= t < T <= model horizon");
  const VGSSDParams& p = model_.params;
  // Sigma involves q(2) at every time up to T, so the weak moment condition
  // is a hard requirement for the measure change itself.
  if (!(2.0 * std::pow(T, p.H) < p.M))
    throw pole_error("phi_star: weak moment condition 2 T^H < M fails");
  if (mode == CharFnMode::automatic && has_vg_closed_forms(p)) {
    if (model_.drift.kind == DriftKind::martingale)
      form_ = Form::martingale_vg;
    else if (model_.drift.kind == DriftKind::half_variance)
      form_ = Form::half_variance_vg;
  }
  if (form_ != Form::generic) {
    const double m2 = p.M * p.M;
    log_m1_ = std::log((m2 - t) / (m2 - T));
    if (form_ == Form::half_variance_vg)
      log_m4_ = std::log((m2 - 4.0 * t) / (m2 - 4.0 * T));
  }
}

void CharFnContext::check_strip(cplx z) const {
  const VGSSDParams& p = model_.params;
  const double tH = std::pow(T_, p.H);
  const double a = -z.imag();  // Re(iz)
  const bool ok = (a * tH < p.M) && (-a * tH < p.G) &&
                  ((a + 1.0) * tH < p.M) && (-(a + 1.0) * tH < p.G);
  if (!ok)
    throw pole_error("phi_star: argument leaves the moment strip at T");
}

cplx CharFnContext::log_phi_star(cplx z) const {
  check_strip(z);
  const VGSSDParams& p = model_.params;
  const double m2 = p.M * p.M;
  const cplx i(0.0, 1.0);
  switch (form_) {
    case Form::martingale_vg: {
      // All log arguments stay in the right half-plane inside the strip, so
      // the principal branches are continuous along any damped line.
      const cplx z2 = z * z;
      return std::log(m2 + z2 * t_) - std::log(m2 + z2 * T_) - i * z * log_m1_;
    }
    case Form::half_variance_vg: {
      const cplx w = i * z + 1.0;
      const cplx ww = w * w;
      const cplx z2 = z * z;
      const cplx big_q_iz = std::log(m2 + z2 * t_) - std::log(m2 + z2 * T_);
      const cplx big_q_w = std::log(m2 - ww * t_) - std::log(m2 - ww * T_);
      return 0.5 * (big_q_iz + big_q_w) - 0.5 * log_m1_ -
             0.5 * i * z * log_m4_;
    }
    case Form::generic:
      return log_phi_star_generic(z);
  }
  throw std::logic_error("phi_star: unknown form");
}

cplx CharFnContext::log_phi_star_generic(cplx z) const {
  check_strip(z);
  const double H = model_.params.H;
  const cplx iz = cplx(0.0, 1.0) * z;
  // The drift cancels out of both brackets, so only q and the ratio mu/Sigma
  // appear. Integration runs in v = s^H where the integrand is smooth down
  // to v = 0.
  auto integrand = [&](double v) -> cplx {
    const double s = std::pow(v, 1.0 / H);
    const cplx q_iz = q(model_, s, iz);
    const cplx q_1 = q(model_, s, 1.0);
    cplx val = q_iz - iz * q_1;
    const double mu = mu_s(model_, s);
    if (mu != 0.0) {
      const cplx q_w = q(model_, s, iz + 1.0);
      const cplx q_2 = q(model_, s, 2.0);
      const cplx sigma = q_2 - 2.0 * q_1;
      val -= mu / sigma.real() * (q_w - q_iz - q_1 - iz * sigma);
    }
    return val * (1.0 / H) * std::pow(v, 1.0 / H - 1.0);
  };
  return gl64_adaptive(integrand, std::pow(t_, H), std::pow(T_, H), 1e-11);
}

void unwrap_phase(std::vector<cplx>& log_values) {
  double shift = 0.0;
  for (std::size_t i = 1; i < log_values.size(); ++i) {
    double d = log_values[i].imag() + shift - log_values[i - 1].imag();
    while (d > M_PI) {
      shift -= 2.0 * M_PI;
      d -= 2.0 * M_PI;
    }
    while (d < -M_PI) {
      shift += 2.0 * M_PI;
      d += 2.0 * M_PI;
    }
    log_values[i] += cplx(0.0, shift);
  }
}

}  // namespace lrm
