// Timing harness for the data-parallel kernels: each one is run with the
// serial reference implementation and with the OpenMP path, and the wall
// times are printed side by side. The outputs are bitwise identical by
// construction (see test_parallel), so this only measures speed.
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "lrm/exec.hpp"
#include "lrm/hedging.hpp"
#include "lrm/mc.hpp"
#include "lrm/pricing.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    fn();
    best = std::min(
        best, std::chrono::duration<double, std::milli>(clock_type::now() - t0)
                  .count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  const auto m = lrm::make_model({1.0, 16.0, 16.0, 0.5},
                                 lrm::DriftSpec::martingale(), 0.5);
  const lrm::TransformGrid grid{};
  const lrm::MarketState st{0.0, 1.0};

  std::printf("threads available: %d\n\n", lrm::max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    std::vector<double> strikes;
    for (int i = 0; i < 400; ++i) strikes.push_back(0.5 + 0.003 * i);
    volatile double sink = 0.0;
    const double ts = time_best_of(3, [&] {
      sink = lrm::xi_strike_sweep(m, st, strikes, grid, lrm::Exec::serial)[0];
    });
    const double tp = time_best_of(3, [&] {
      sink = lrm::xi_strike_sweep(m, st, strikes, grid, lrm::Exec::parallel)[0];
    });
    (void)sink;
    row("xi_strike_sweep (400 K)", ts, tp);
  }

  {
    const lrm::MCConfig cfg{4000000, 7, true};
    volatile double sink = 0.0;
    const double ts = time_best_of(2, [&] {
      sink = lrm::mc_call_price(m, st, {1.0, 0.5}, cfg, lrm::Exec::serial).price;
    });
    const double tp = time_best_of(2, [&] {
      sink =
          lrm::mc_call_price(m, st, {1.0, 0.5}, cfg, lrm::Exec::parallel).price;
    });
    (void)sink;
    row("mc_call_price (4e6 paths)", ts, tp);
  }

  {
    const lrm::TransformGrid big(1 << 18, 0.0625, 1.75);
    volatile double sink = 0.0;
    const double ts = time_best_of(3, [&] {
      sink = lrm::price_curve_fft(m, st, 0.5, big, 0.5, 2.0,
                                  lrm::Exec::serial)[0]
                 .value;
    });
    const double tp = time_best_of(3, [&] {
      sink = lrm::price_curve_fft(m, st, 0.5, big, 0.5, 2.0,
                                  lrm::Exec::parallel)[0]
                 .value;
    });
    (void)sink;
    row("price_curve_fft (N=2^18)", ts, tp);
  }

  {
    const lrm::TransformGrid big(1 << 18, 0.0625, 1.75);
    volatile double sink = 0.0;
    const double ts = time_best_of(3, [&] {
      sink =
          lrm::xi_curve_fft(m, st, 0.5, big, 0.5, 2.0, lrm::Exec::serial)[0]
              .value;
    });
    const double tp = time_best_of(3, [&] {
      sink =
          lrm::xi_curve_fft(m, st, 0.5, big, 0.5, 2.0, lrm::Exec::parallel)[0]
              .value;
    });
    (void)sink;
    row("xi_curve_fft (N=2^18)", ts, tp);
  }

  return 0;
}
