#pragma once

#include <vector>

#include "lrm/model.hpp"

namespace lrm {

enum class CharFnMode {
  automatic,  // closed form when the model admits one, generic otherwise
  generic,    // force the time-quadrature path (reference)
};

// Characteristic function of the log-price increment over (t, T] under the
// minimal martingale measure: phi*(z) = E*[exp(i z (L_T - L_t))]. Arguments
// are complex; pricing evaluates along the damped line z = u - iR.
class CharFnContext {
 public:
  CharFnContext(ModelSpec model, double t, double T,
                CharFnMode mode = CharFnMode::automatic);

  const ModelSpec& model() const { return model_; }
  double t() const { return t_; }
  double T() const { return T_; }
  bool closed_form() const { return form_ != Form::generic; }

  cplx log_phi_star(cplx z) const;
  cplx phi_star(cplx z) const { return std::exp(log_phi_star(z)); }

  // Time quadrature of the measure-changed exponent; works for any drift and
  // parameter set, and serves as the oracle for the closed forms.
  cplx log_phi_star_generic(cplx z) const;

 private:
  enum class Form { generic, martingale_vg, half_variance_vg };

  void check_strip(cplx z) const;

  ModelSpec model_;
  double t_ = 0.0;
  double T_ = 1.0;
  Form form_ = Form::generic;
  double log_m1_ = 0.0;  // log((M^2 - t) / (M^2 - T))
  double log_m4_ = 0.0;  // log((M^2 - 4t) / (M^2 - 4T)), half-variance form only
};

// Adds multiples of 2 pi i so consecutive imaginary parts differ by less
// than pi. For diagnosing branch-cut crossings in sampled log curves.
void unwrap_phase(std::vector<cplx>& log_values);

}  // namespace lrm
