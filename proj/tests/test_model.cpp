#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "lrm/model.hpp"
#include "lrm/quadrature.hpp"
#include "oracles.hpp"

using lrm::cplx;
using doctest::Approx;

namespace {

lrm::ModelSpec symmetric(double M, double T, lrm::DriftSpec d = lrm::DriftSpec::martingale()) {
  return lrm::make_model({1.0, M, M, 0.5}, std::move(d), T);
}

// No closed forms here; exercises the quadrature paths.
lrm::ModelSpec skewed() {
  return lrm::make_model({1.3, 3.0, 5.0, 0.7}, lrm::DriftSpec::martingale(), 1.0);
}

}  // namespace

TEST_CASE("jump density matches the hand value and integrates to 2CH/t") {
  auto m = symmetric(4.0, 1.0);
  CHECK(lrm::levy_density(m, 0.25, 0.1) == Approx(16.0 * std::exp(-0.8)).epsilon(1e-14));
  CHECK(lrm::levy_density(m, 0.25, -0.1) == Approx(16.0 * std::exp(-0.8)).epsilon(1e-14));

  for (double t : {0.1, 0.25, 1.0}) {
    auto f = [&](double x) { return lrm::levy_density(m, t, x); };
    const double mass = lrm::gk_adaptive(f, 1e-300, oracles::right_cutoff(m, t, 0.0)) +
                        lrm::gk_adaptive(f, -oracles::left_cutoff(m, t, 0.0), -1e-300);
    CHECK(mass == Approx(2.0 * 0.5 / t).epsilon(1e-10));
  }
}

TEST_CASE("jump density rejects t outside (0, T] and x = 0") {
  auto m = symmetric(4.0, 1.0);
  CHECK_THROWS_AS(lrm::levy_density(m, 0.0, 0.1), std::domain_error);
  CHECK_THROWS_AS(lrm::levy_density(m, 1.5, 0.1), std::domain_error);
  CHECK_THROWS_AS(lrm::levy_density(m, 0.5, 0.0), std::domain_error);
}

TEST_CASE("q closed form hits the special-case values") {
  auto m = symmetric(4.0, 1.0);
  // C = 1, G = M, H = 1/2 collapses q to z^2 / (M^2 - z^2 t)
  CHECK(lrm::q(m, 0.5, 1.0).real() == Approx(1.0 / 15.5).epsilon(1e-14));
  CHECK(lrm::q(m, 0.5, 1.0).imag() == Approx(0.0));
  CHECK(lrm::q(m, 0.5, 2.0).real() == Approx(2.0 / 7.0).epsilon(1e-14));
}

TEST_CASE("q agrees with the jump-density integral") {
  const cplx zs[] = {{0.0, 0.0}, {1.0, 0.0},  {2.0, 0.0},
                     {0.0, 1.0}, {1.0, 1.0},  {2.0, 1.0},
                     {0.0, 10.0}, {1.0, 10.0}, {2.0, 10.0},
                     {-1.5, 3.0}};
  for (const auto& m : {symmetric(4.0, 1.0), skewed()}) {
    for (double t : {0.1, 0.5, 1.0}) {
      for (cplx z : zs) {
        const cplx got = lrm::q(m, t, z);
        const cplx want = oracles::q_oracle(m, t, z);
        CHECK_MESSAGE(oracles::rel_err(got, want) < 1e-9,
                      "t=", t, " z=(", z.real(), ",", z.imag(), ") got=",
                      got.real(), "+", got.imag(), "i");
      }
    }
  }
}

TEST_CASE("q respects the analyticity strip") {
  auto m = symmetric(4.0, 1.0);
  CHECK_THROWS_AS(lrm::q(m, 1.0, cplx(4.0, 0.0)), lrm::pole_error);
  CHECK_THROWS_AS(lrm::q(m, 1.0, cplx(-4.0, 0.0)), lrm::pole_error);
  CHECK_THROWS_AS(lrm::q(m, 0.25, cplx(8.0, 0.0)), lrm::pole_error);
  CHECK_NOTHROW(lrm::q(m, 1.0, cplx(3.999, 50.0)));  // only Re(z) matters
}

TEST_CASE("q is Hermitian in z") {
  auto m = skewed();
  for (double t : {0.2, 0.9}) {
    for (cplx z : {cplx(1.0, 2.0), cplx(-0.5, 7.0)}) {
      const cplx a = lrm::q(m, t, std::conj(z));
      const cplx b = std::conj(lrm::q(m, t, z));
      CHECK(std::abs(a - b) < 1e-15 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("q_integrated closed form") {
  auto m = symmetric(4.0, 1.0);
  CHECK(lrm::q_integrated(m, 0.0, 0.5, 2.0).real() ==
        Approx(std::log(16.0 / 14.0)).epsilon(1e-14));
  CHECK(lrm::q_integrated(m, 0.0, 1.0, 1.0).real() ==
        Approx(std::log(16.0 / 15.0)).epsilon(1e-14));
  CHECK(lrm::q_integrated(m, 0.3, 0.3, cplx(1.0, 5.0)) == cplx(0.0, 0.0));
}

TEST_CASE("q_integrated agrees with the double-quadrature oracle") {
  for (const auto& m : {symmetric(4.0, 1.0), symmetric(16.0, 1.0), skewed()}) {
    for (cplx z : {cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.5, 4.0), cplx(-1.0, 2.0)}) {
      for (auto [a, b] : {std::pair{0.0, 0.5}, {0.25, 1.0}, {0.0, 1.0}}) {
        const cplx got = lrm::q_integrated(m, a, b, z);
        const cplx want = oracles::q_time_oracle(m, a, b, z);
        // absolute floor: the skewed model at z = 2 over [0,1] is an exact
        // zero (see the unit-law exponent case below), where relative error
        // degenerates
        CHECK_MESSAGE(std::abs(got - want) < 1e-8 * std::max(std::abs(want), 1e-6),
                      "[", a, ",", b, "] z=(", z.real(), ",", z.imag(), ")");
      }
    }
  }
}

TEST_CASE("q_integrated over [0,1] reproduces the unit-law exponent") {
  // self-similarity: int_0^1 q_s(z) ds = C log(GM / ((M - z)(G + z)))
  auto m = skewed();
  const double C = 1.3, G = 3.0, M = 5.0;
  for (cplx z : {cplx(1.0, 0.0), cplx(-1.0, 1.0), cplx(0.5, 4.0)}) {
    const cplx want = C * std::log(G * M / ((M - z) * (G + z)));
    const cplx got = lrm::q_integrated(m, 0.0, 1.0, z);
    CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, std::abs(want)));
  }
  // z = 2 solves (M - z)(G + z) = GM, so the integral vanishes identically
  CHECK(std::abs(lrm::q_integrated(m, 0.0, 1.0, 2.0)) < 1e-15);
}

TEST_CASE("q_integrated validates the strip at the right endpoint") {
  auto m = symmetric(4.0, 1.0);
  CHECK_NOTHROW(lrm::q_integrated(m, 0.0, 0.5, 3.9));
  CHECK_THROWS_AS(lrm::q_integrated(m, 0.0, 1.0, 4.0), lrm::pole_error);
  CHECK_THROWS_AS(lrm::q_integrated(m, 0.0, 0.5, -8.0), lrm::pole_error);
}

TEST_CASE("martingale drift kills the return mean exactly") {
  auto m = symmetric(4.0, 1.0);
  for (double t : {0.01, 0.4, 1.0}) {
    CHECK(lrm::mu_s(m, t) == 0.0);
    CHECK(lrm::l(m, t, 1.0) == cplx(0.0, 0.0));
  }
}

TEST_CASE("half-variance drift pins mu/Sigma at -1/2") {
  auto m = symmetric(4.0, 1.0, lrm::DriftSpec::half_variance());
  CHECK(lrm::l(m, 0.5, 1.0).real() == Approx(-17.0 / 217.0).epsilon(1e-14));
  for (double t : {0.05, 0.5, 0.97}) {
    CHECK(lrm::mu_s(m, t) / lrm::big_sigma(m, t) == Approx(-0.5).epsilon(1e-12));
  }
  CHECK(lrm::theta(m, 0.5, std::log(2.0)) == Approx(-0.5).epsilon(1e-12));
  CHECK(lrm::lambda(m, {0.5, 1.0}) == Approx(-0.5).epsilon(1e-12));
  CHECK(lrm::lambda(m, {0.5, 2.0}) == Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("big_sigma values and positivity") {
  CHECK(lrm::big_sigma(symmetric(4.0, 1.0), 0.5) ==
        Approx(34.0 / 217.0).epsilon(1e-14));
  CHECK(lrm::big_sigma(symmetric(16.0, 1.0), 0.5) ==
        Approx(514.0 / 64897.0).epsilon(1e-14));
  for (const auto& m : {symmetric(4.0, 1.0), skewed()}) {
    for (int i = 1; i <= 40; ++i) {
      const double t = i / 40.0;
      CHECK(lrm::big_sigma(m, t) > 0.0);
      CHECK(lrm::big_sigma(m, t) ==
            Approx(oracles::sigma_oracle(m, t)).epsilon(1e-9));
    }
  }
}

TEST_CASE("return mean is nonpositive for both named drifts") {
  for (auto d : {lrm::DriftSpec::martingale(), lrm::DriftSpec::half_variance()}) {
    for (const auto& m : {symmetric(4.0, 1.0, d), symmetric(16.0, 1.0, d)}) {
      for (int i = 1; i <= 100; ++i) CHECK(lrm::mu_s(m, i / 100.0) <= 0.0);
    }
  }
}

TEST_CASE("cumulant reproduces the frozen value and kills z = 1") {
  auto m = symmetric(4.0, 1.0);
  const cplx k2 = lrm::cumulant(m, 1.0, 2.0);
  CHECK(k2.real() == Approx(std::log(75.0 / 64.0)).epsilon(1e-13));
  CHECK(k2.imag() == Approx(0.0));
  // martingale normalization: kappa_t(1) = 0
  for (double t : {0.25, 1.0}) {
    CHECK(std::abs(lrm::cumulant(m, t, 1.0)) < 1e-15);
  }
  CHECK(lrm::cumulant(m, 0.0, cplx(0.7, 3.0)) == cplx(0.0, 0.0));
}

TEST_CASE("tabulated drift interpolates, integrates, never extrapolates") {
  auto ref = symmetric(4.0, 1.0, lrm::DriftSpec::half_variance());
  std::vector<std::pair<double, double>> nodes;
  for (int i = 0; i <= 200; ++i) {
    const double t = i / 200.0;
    // -2/M^2 is the t -> 0 limit of the half-variance drift
    nodes.emplace_back(t, t == 0.0 ? -2.0 / 16.0 : lrm::rho_prime(ref, t));
  }
  auto m = symmetric(4.0, 1.0, lrm::DriftSpec::tabulated(nodes));

  CHECK(lrm::rho_prime(m, 0.5) == Approx(lrm::rho_prime(ref, 0.5)).epsilon(1e-14));
  const double mid = 0.5 * (nodes[100].second + nodes[101].second);
  CHECK(lrm::rho_prime(m, 0.5025) == Approx(mid).epsilon(1e-14));
  // trapezoid vs the exact integral of the sampled drift
  CHECK(lrm::rho(m, 1.0) == Approx(lrm::rho(ref, 1.0)).epsilon(1e-6));
  CHECK(lrm::rho(m, 0.0) == 0.0);
  CHECK_THROWS_AS(lrm::rho_prime(m, 1.2), std::domain_error);

  auto short_grid = lrm::DriftSpec::tabulated({{0.2, -0.1}, {1.0, -0.2}});
  auto m2 = symmetric(4.0, 1.0, short_grid);
  CHECK_THROWS_AS(lrm::rho_prime(m2, 0.1), std::domain_error);
  CHECK_THROWS_AS(lrm::rho(m2, 0.5), std::domain_error);  // grid must start at 0
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(lrm::make_model({0.0, 4.0, 4.0, 0.5}, lrm::DriftSpec::martingale(), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(lrm::make_model({1.0, 4.0, 4.0, 0.5}, lrm::DriftSpec::martingale(), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(lrm::DriftSpec::tabulated({{0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(lrm::DriftSpec::tabulated({{0.5, 1.0}, {0.5, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      lrm::make_model({1.0, 4.0, 4.0, 0.5}, lrm::DriftSpec::tabulated({{0.0, 0.0}, {0.5, -0.1}}), 1.0),
      std::invalid_argument);
}
