#pragma once

#include <bit>
#include <numbers>
#include <stdexcept>

#include "lrm/model.hpp"

namespace lrm {

// Weights for the one-sided frequency sum. The lattice rule halves the j = 0
// weight (trapezoid on the half-line); since the real part of the integrand
// is even in u, that cancels every Euler-Maclaurin correction and leaves
// only exponentially small aliasing. Simpson reweighting is kept as an
// option for comparison runs.
enum class SumWeighting { lattice, simpson };

struct TransformGrid {
  int N = 1 << 14;
  double eta = 0.25;
  double R = 1.75;
  SumWeighting weighting = SumWeighting::lattice;

  TransformGrid() = default;
  TransformGrid(int n, double eta_, double r,
                SumWeighting w = SumWeighting::lattice)
      : N(n), eta(eta_), R(r), weighting(w) {
    validate();
  }

  void validate() const {
    if (N < 2 || !std::has_single_bit(static_cast<unsigned>(N)))
      throw std::invalid_argument("transform grid: N must be a power of two");
    if (!(eta > 0.0))
      throw std::invalid_argument("transform grid: eta must be positive");
    if (!(R > 1.0) || !(R <= 2.0))
      throw std::invalid_argument("transform grid: damping R must lie in (1, 2]");
  }

  double u(int j) const { return eta * j; }
  cplx z(int j) const { return {eta * j, -R}; }

  // log-strike spacing and half-width of the conjugate lattice
  double lambda() const { return 2.0 * std::numbers::pi / (N * eta); }
  double b() const { return std::numbers::pi / eta; }

  double weight(int j) const {
    switch (weighting) {
      case SumWeighting::lattice:
        return j == 0 ? 0.5 * eta : eta;
      case SumWeighting::simpson:
        return eta * (3.0 + (j % 2 == 0 ? -1.0 : 1.0) - (j == 0 ? 1.0 : 0.0)) / 3.0;
    }
    return eta;
  }
};

}  // namespace lrm
