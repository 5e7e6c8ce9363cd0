// Acceptance gate: nine go/no-go checks covering the analytic kernels, the
// transform pricer and hedger, the independent oracles, and the experiment
// runner. Each criterion prints one PASS/FAIL line with its worst observed
// metric; the process exits nonzero if any line fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "lrm/assumptions.hpp"
#include "lrm/charfn.hpp"
#include "lrm/experiments.hpp"
#include "lrm/hedging.hpp"
#include "lrm/mc.hpp"
#include "lrm/pricing.hpp"
#include "oracles.hpp"

using lrm::cplx;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(int idx, bool pass, const std::string& detail, double elapsed) {
  std::printf("criterion %d: %s (%s, %.2f s)\n", idx, pass ? "PASS" : "FAIL",
              detail.c_str(), elapsed);
  if (!pass) ++g_failures;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

lrm::ModelSpec vg(double M, double T, int model_id = 1) {
  auto drift = model_id == 1 ? lrm::DriftSpec::martingale()
                             : lrm::DriftSpec::half_variance();
  return lrm::make_model({1.0, M, M, 0.5}, std::move(drift), T);
}

// 1. closed forms vs adaptive quadrature of the jump-density integrals
void criterion1() {
  const auto t0 = clock_type::now();
  const std::vector<lrm::ModelSpec> models = {
      vg(4.0, 1.0), vg(16.0, 1.0),
      lrm::make_model({1.3, 3.0, 5.0, 0.7}, lrm::DriftSpec::martingale(), 1.0)};
  double worst = 0.0;
  for (const auto& m : models) {
    for (double t : {0.1, 0.5, 1.0}) {
      for (double re : {0.0, 1.0, 2.0}) {
        for (double im : {0.0, 1.0, 10.0}) {
          const cplx z(re, im);
          worst = std::max(worst,
                           oracles::rel_err(lrm::q(m, t, z),
                                            oracles::q_oracle(m, t, z)));
          worst = std::max(worst,
                           oracles::rel_err(lrm::inner_integral(m, t, z),
                                            oracles::inner_oracle(m, t, z)));
        }
      }
      worst = std::max(worst,
                       oracles::rel_err(cplx(lrm::big_sigma(m, t), 0.0),
                                        cplx(oracles::sigma_oracle(m, t), 0.0)));
    }
  }
  const double el = seconds_since(t0);
  report(1, worst < 1e-8 && el < 10.0,
         "q/Sigma/inner vs quadrature, worst rel err " + fmt("%.2e", worst),
         el);
}

// 2. martingale identity phi*(-i) = 1
void criterion2() {
  const auto t0 = clock_type::now();
  double worst = 0.0;
  for (int id : {1, 2}) {
    for (double M : {4.0, 16.0}) {
      for (auto [t, T] : {std::pair{0.0, 0.5}, {0.25, 1.0}, {0.5, 1.0}}) {
        const lrm::CharFnContext ctx(vg(M, T, id), t, T);
        worst = std::max(worst, std::abs(ctx.phi_star(cplx(0.0, -1.0)) - 1.0));
      }
    }
  }
  report(2, worst < 1e-10, "max |phi*(-i) - 1| = " + fmt("%.2e", worst),
         seconds_since(t0));
}

// 3. damping-parameter invariance of the price
void criterion3() {
  const auto t0 = clock_type::now();
  double worst = 0.0;
  // eta small enough that the ITM alias e^{-(R-1) 2 pi / eta} is far below
  // the tolerance even at R = 1.25
  for (int id : {1, 2}) {
    for (double M : {4.0, 16.0}) {
      auto m = vg(M, 0.5, id);
      double lo = 1e300, hi = -1e300;
      for (double R : {1.25, 1.5, 1.75, 2.0}) {
        const double p = lrm::price_call_quad(
                             m, {0.0, 1.0}, {1.0, 0.5},
                             lrm::TransformGrid(1 << 15, 0.0625, R))
                             .price;
        lo = std::min(lo, p);
        hi = std::max(hi, p);
      }
      worst = std::max(worst, (hi - lo) / hi);
    }
  }
  report(3, worst < 1e-6,
         "R in {1.25,1.5,1.75,2}, worst rel spread " + fmt("%.2e", worst) +
             " on the 2^15/0.0625 grid",
         seconds_since(t0));
}

// 4. oracle triangle: quadrature sum, FFT curve node, density inversion, MC
void criterion4() {
  const auto t0 = clock_type::now();
  const lrm::TransformGrid grid{};
  double worst_node = 0.0, worst_inv = 0.0, worst_mc = 0.0;
  for (int id : {1, 2}) {
    for (double M : {4.0, 16.0}) {
      auto m = vg(M, 0.5, id);
      const lrm::MarketState st{0.0, 1.0};
      const double quad = lrm::price_call_quad(m, st, {1.0, 0.5}, grid).price;

      // the lattice is centered so the node nearest K = 1 is exactly K = 1
      const auto curve = lrm::price_curve_fft(m, st, 0.5, grid, 0.99, 1.01);
      double best = 1e300, node_val = 0.0;
      for (const auto& pt : curve)
        if (std::abs(pt.strike - 1.0) < best) {
          best = std::abs(pt.strike - 1.0);
          node_val = pt.value;
        }
      worst_node = std::max(worst_node, std::abs(node_val - quad) / quad);

      const auto inv = lrm::price_call_inversion(m, st, {1.0, 0.5});
      worst_inv = std::max(worst_inv, std::abs(inv.price - quad) / quad);

      if (id == 1) {
        const auto mc =
            lrm::mc_call_price(m, st, {1.0, 0.5}, {1000000, 2024, true},
                               lrm::Exec::parallel);
        worst_mc = std::max(worst_mc,
                            std::abs(mc.price - quad) / (3.0 * mc.std_error));
      }
    }
  }
  const double el = seconds_since(t0);
  report(4,
         worst_node < 1e-6 && worst_inv < 1e-4 && worst_mc < 1.0 && el < 60.0,
         "node rel " + fmt("%.2e", worst_node) + ", inversion rel " +
             fmt("%.2e", worst_inv) + ", MC dev " + fmt("%.2f", worst_mc) +
             " of 3 SE",
         el);
}

// 5. hedge payoff-slope limits
void criterion5() {
  const auto t0 = clock_type::now();
  auto m = vg(16.0, 0.5);
  const lrm::TransformGrid grid{};
  const double itm = lrm::xi_fft(m, {0.0, 1.0}, {0.001, 0.5}, grid).xi;
  const double otm = lrm::xi_fft(m, {0.0, 1.0}, {100.0, 0.5}, grid).xi;
  report(5, std::abs(itm - 1.0) < 0.01 && std::abs(otm) < 1e-4,
         "xi(0.001) = " + fmt("%.5f", itm) + ", xi(100) = " + fmt("%.2e", otm),
         seconds_since(t0));
}

// 6. frequency-space vs density-space hedge at 12 configurations
void criterion6() {
  const auto t0 = clock_type::now();
  const lrm::TransformGrid grid{};
  double worst = 0.0;
  for (int id : {1, 2}) {
    for (double M : {4.0, 16.0}) {
      auto m = vg(M, 0.5, id);
      for (auto [t, K] : {std::pair{0.0, 0.9}, {0.25, 1.0}, {0.45, 1.2}}) {
        const double f = lrm::xi_fft(m, {t, 1.0}, {K, 0.5}, grid).xi;
        const double q = lrm::xi_quad_direct(m, {t, 1.0}, {K, 0.5}, grid).xi;
        worst = std::max(worst, std::abs(f - q));
      }
    }
  }
  report(6, worst < 1e-4,
         "12 combos (2 models x 2 M x 3 (t,K)), worst |diff| " +
             fmt("%.2e", worst),
         seconds_since(t0));
}

// 7. grid refinement stability of the ATM hedge
void criterion7() {
  const auto t0 = clock_type::now();
  const lrm::TransformGrid base(1 << 14, 0.25, 1.75);
  const lrm::TransformGrid fine(1 << 15, 0.125, 1.75);
  double worst = 0.0;
  for (int id : {1, 2}) {
    for (double M : {4.0, 16.0}) {
      auto m = vg(M, 0.5, id);
      const double a = lrm::xi_fft(m, {0.0, 1.0}, {1.0, 0.5}, base).xi;
      const double b = lrm::xi_fft(m, {0.0, 1.0}, {1.0, 0.5}, fine).xi;
      worst = std::max(worst, std::abs(a - b));
    }
  }
  report(7, worst < 1e-6, "ATM |xi change| under N->2N, eta->eta/2: worst " +
                              fmt("%.2e", worst),
         seconds_since(t0));
}

// 8. qualitative reproduction of the four experiment panels
void criterion8() {
  const auto t0 = clock_type::now();
  const auto dir =
      std::filesystem::temp_directory_path() / "lrm_acceptance_panels";
  std::filesystem::remove_all(dir);
  const lrm::TransformGrid grid{};

  bool ok = true;
  std::string why;
  for (int id : {1, 2}) {
    lrm::ExperimentSpec a;
    a.kind = lrm::ExperimentKind::time_sweep;
    a.model_id = id;
    const auto ra = lrm::run_experiment(a, grid, dir, true, lrm::Exec::parallel);
    for (const auto& col : ra.xi)
      for (double v : col)
        if (v < -0.01 || v > 1.01) {
          ok = false;
          why = "A panel value " + fmt("%.4f", v) + " outside [-0.01, 1.01]";
        }

    lrm::ExperimentSpec b;
    b.kind = lrm::ExperimentKind::strike_sweep;
    b.model_id = id;
    const auto rb = lrm::run_experiment(b, grid, dir, true, lrm::Exec::parallel);
    if (id == 1) {
      const auto& xi4 = rb.xi[0];
      const auto& xi16 = rb.xi[1];
      if (!(xi16.front() > 0.95 && xi16.back() < 0.05)) {
        ok = false;
        why = "B model 1 endpoints " + fmt("%.4f", xi16.front()) + " / " +
              fmt("%.4f", xi16.back());
      }
      double d4 = 0.0, d16 = 0.0;
      for (std::size_t i = 1; i < xi16.size(); ++i) {
        d4 = std::max(d4, std::abs(xi4[i] - xi4[i - 1]));
        d16 = std::max(d16, std::abs(xi16[i] - xi16[i - 1]));
        if (xi16[i] > xi16[i - 1] + 1e-6 || xi4[i] > xi4[i - 1] + 1e-6) {
          ok = false;
          why = "B model 1 curve not non-increasing at index " +
                std::to_string(i);
        }
      }
      if (!(d16 > d4)) {
        ok = false;
        why = "M=16 transition not steeper: " + fmt("%.4f", d16) +
              " vs " + fmt("%.4f", d4);
      }
    }
  }
  const double el = seconds_since(t0);
  if (ok)
    why = "four panels reproduced (endpoints, steepness, monotone, bounds)";
  std::filesystem::remove_all(dir);
  report(8, ok && el < 120.0, why, el);
}

// 9. assumption checker verdicts at the experiment configurations
void criterion9() {
  const auto t0 = clock_type::now();
  const auto r41 = lrm::check_all(vg(4.0, 1.0), 1.75);
  const auto r161 = lrm::check_all(vg(16.0, 1.0), 1.75);
  const auto r405 = lrm::check_all(vg(4.0, 0.5), 1.75);
  const auto a4_m1 = lrm::check_all(vg(16.0, 1.0, 1), 1.75).a4.verdict;
  const auto a4_m2 = lrm::check_all(vg(16.0, 1.0, 2), 1.75).a4.verdict;

  const bool ok = r41.a3_strict.verdict == lrm::Verdict::fails &&
                  r41.a3_strict.margin == 0.0 &&
                  r161.a3_strict.verdict == lrm::Verdict::holds &&
                  r405.a3_strict.verdict == lrm::Verdict::holds &&
                  a4_m1 == lrm::Verdict::holds && a4_m2 == lrm::Verdict::holds;
  report(9, ok,
         std::string("a3_strict ") + lrm::to_string(r41.a3_strict.verdict) +
             "/" + lrm::to_string(r161.a3_strict.verdict) + "/" +
             lrm::to_string(r405.a3_strict.verdict) +
             " at (4,1)/(16,1)/(4,0.5); drift trap " + lrm::to_string(a4_m1) +
             "," + lrm::to_string(a4_m2),
         seconds_since(t0));
}

}  // namespace

int main() {
  const auto t0 = clock_type::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("acceptance: %d/9 criteria pass (%.1f s total)\n",
              9 - g_failures, seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
