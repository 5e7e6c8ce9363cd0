#pragma once

#include <cstdint>
#include <vector>

#include "lrm/exec.hpp"
#include "lrm/model.hpp"

namespace lrm {

struct MCConfig {
  std::int64_t paths = 100000;
  std::uint64_t seed = 0x5eed;
  bool antithetic = true;
};

struct MCPrice {
  double price = 0.0;
  double std_error = 0.0;
};

// Exact draws of L_T: the terminal law is a scaled difference of gamma
// variables plus the deterministic drift. Sample i is a pure function of
// (seed, i), so the output is identical for any thread count. Martingale
// drift only.
std::vector<double> sample_terminal_log_price(const ModelSpec& m, double T,
                                              const MCConfig& cfg,
                                              Exec exec = Exec::serial);

MCPrice mc_call_price(const ModelSpec& m, const MarketState& state,
                      const OptionSpec& opt, const MCConfig& cfg,
                      Exec exec = Exec::serial);

}  // namespace lrm
