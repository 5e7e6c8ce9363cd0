#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrm/assumptions.hpp"
#include "lrm/experiments.hpp"
#include "lrm/mc.hpp"
#include "lrm/pricing.hpp"

namespace {

// Values from a config file override flags; parsing happens after the
// command line so the file wins.
class ConfigBinder {
 public:
  void bind(std::string key, double* p) {
    set_[std::move(key)] = [p](const std::string& v) { *p = parse_double(v); };
  }
  void bind(std::string key, int* p) {
    set_[std::move(key)] = [p](const std::string& v) {
      *p = static_cast<int>(std::stoll(v));
    };
  }
  void bind(std::string key, long long* p) {
    set_[std::move(key)] = [p](const std::string& v) { *p = std::stoll(v); };
  }
  void bind(std::string key, unsigned long long* p) {
    set_[std::move(key)] = [p](const std::string& v) { *p = std::stoull(v); };
  }
  void bind(std::string key, std::string* p) {
    set_[std::move(key)] = [p](const std::string& v) { *p = v; };
  }
  void bind(std::string key, bool* p) {
    set_[std::move(key)] = [p](const std::string& v) {
      if (v == "true" || v == "1" || v == "yes") *p = true;
      else if (v == "false" || v == "0" || v == "no") *p = false;
      else throw std::invalid_argument("config: bad boolean '" + v + "'");
    };
  }

  void apply_file(const std::string& path) const {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      const auto eq = trimmed.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": expected key = value");
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string val = trim(trimmed.substr(eq + 1));
      const auto it = set_.find(key);
      if (it == set_.end())
        throw std::invalid_argument("config: unknown key '" + key + "'");
      it->second(val);
    }
  }

 private:
  static std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  }
  static double parse_double(const std::string& v) {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size())
      throw std::invalid_argument("config: bad number '" + v + "'");
    return d;
  }
  std::map<std::string, std::function<void(const std::string&)>> set_;
};

struct ModelOpts {
  std::string model = "martingale";
  double C = 1.0, G = -1.0, M = 4.0, H = 0.5, T = 1.0;

  lrm::ModelSpec build() const {
    lrm::DriftSpec drift;
    if (model == "martingale") {
      drift = lrm::DriftSpec::martingale();
    } else if (model == "half-variance" || model == "half_variance") {
      drift = lrm::DriftSpec::half_variance();
    } else {
      throw std::invalid_argument(
          "unknown --model '" + model +
          "' (expected martingale or half-variance)");
    }
    const double g = G > 0.0 ? G : M;
    return lrm::make_model({C, g, M, H}, std::move(drift), T);
  }

  void add_flags(CLI::App* sub, ConfigBinder* cfg) {
    sub->add_option("--model", model, "drift: martingale or half-variance");
    sub->add_option("--C", C, "gamma shape");
    sub->add_option("--G", G, "down-jump rate (defaults to M)");
    sub->add_option("--M", M, "up-jump rate");
    sub->add_option("--H", H, "self-similarity exponent");
    sub->add_option("--T", T, "horizon / option maturity");
    cfg->bind("model", &model);
    cfg->bind("C", &C);
    cfg->bind("G", &G);
    cfg->bind("M", &M);
    cfg->bind("H", &H);
    cfg->bind("T", &T);
  }
};

struct GridOpts {
  int N = 1 << 14;
  double eta = 0.25;
  double R = 1.75;
  bool simpson = false;

  lrm::TransformGrid build() const {
    return {N, eta, R,
            simpson ? lrm::SumWeighting::simpson : lrm::SumWeighting::lattice};
  }

  void add_flags(CLI::App* sub, ConfigBinder* cfg) {
    sub->add_option("--N", N, "frequency nodes (power of two)");
    sub->add_option("--eta", eta, "frequency spacing");
    sub->add_option("--R", R, "damping in (1, 2]");
    sub->add_flag("--simpson", simpson, "Simpson frequency weights");
    cfg->bind("N", &N);
    cfg->bind("eta", &eta);
    cfg->bind("R", &R);
    cfg->bind("simpson", &simpson);
  }
};

void print_diagnostics(const lrm::SumDiagnostics& d) {
  std::printf("imag_residual = %.6g\n", d.imag_residual);
  std::printf("last_summand_rel = %.6g\n", d.last_summand_rel);
  if (d.coverage_warning)
    std::printf("warning: frequency window may be too short\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hedge ratios and call prices for self-similar additive models"};
  app.require_subcommand(1);

  ConfigBinder cfg_check, cfg_price, cfg_hedge, cfg_exp;
  std::string config_path;

  // check
  auto* check = app.add_subcommand("check", "verify model assumptions");
  ModelOpts check_model;
  double check_R = 1.75;
  int check_grid = 999;
  check_model.add_flags(check, &cfg_check);
  check->add_option("--R", check_R, "damping to test");
  check->add_option("--grid-size", check_grid, "a4 sample count");
  check->add_option("--config", config_path, "key = value file, overrides flags");
  cfg_check.bind("R", &check_R);
  cfg_check.bind("grid-size", &check_grid);

  // price
  auto* price = app.add_subcommand("price", "price a European call");
  ModelOpts price_model;
  GridOpts price_grid;
  double price_t = 0.0, price_S = 1.0, price_K = 1.0;
  std::string price_method = "quad";
  long long price_paths = 1000000;
  unsigned long long price_seed = 0x5eed;
  bool price_antithetic = true;
  price_model.add_flags(price, &cfg_price);
  price_grid.add_flags(price, &cfg_price);
  price->add_option("--t", price_t, "valuation time");
  price->add_option("--S", price_S, "spot");
  price->add_option("--K", price_K, "strike");
  price->add_option("--method", price_method, "fft | quad | inversion | mc");
  price->add_option("--paths", price_paths, "mc paths");
  price->add_option("--seed", price_seed, "mc seed");
  price->add_flag("--antithetic,!--no-antithetic", price_antithetic,
                  "mc antithetic pairing");
  price->add_option("--config", config_path, "key = value file, overrides flags");
  cfg_price.bind("t", &price_t);
  cfg_price.bind("S", &price_S);
  cfg_price.bind("K", &price_K);
  cfg_price.bind("method", &price_method);
  cfg_price.bind("paths", &price_paths);
  cfg_price.bind("seed", &price_seed);
  cfg_price.bind("antithetic", &price_antithetic);

  // hedge
  auto* hedge = app.add_subcommand("hedge", "risk-minimizing hedge ratio");
  ModelOpts hedge_model;
  GridOpts hedge_grid;
  double hedge_t = 0.0, hedge_S = 1.0, hedge_K = 1.0;
  std::string hedge_method = "fft";
  hedge_model.add_flags(hedge, &cfg_hedge);
  hedge_grid.add_flags(hedge, &cfg_hedge);
  hedge->add_option("--t", hedge_t, "valuation time");
  hedge->add_option("--S", hedge_S, "spot");
  hedge->add_option("--K", hedge_K, "strike");
  hedge->add_option("--method", hedge_method, "fft | quad");
  hedge->add_option("--config", config_path, "key = value file, overrides flags");
  cfg_hedge.bind("t", &hedge_t);
  cfg_hedge.bind("S", &hedge_S);
  cfg_hedge.bind("K", &hedge_K);
  cfg_hedge.bind("method", &hedge_method);

  // experiment
  auto* exp = app.add_subcommand("experiment", "hedge-ratio panels (CSV + SVG)");
  GridOpts exp_grid;
  std::string exp_kind = "both";
  int exp_model_id = 0;
  std::vector<double> exp_M = {4.0, 16.0};
  std::string exp_out = "out";
  bool exp_svg = true, exp_parallel = false;
  double exp_C = 1.0, exp_H = 0.5, exp_S = 1.0;
  exp_grid.add_flags(exp, &cfg_exp);
  exp->add_option("--kind", exp_kind, "A (time sweep), B (strike sweep), both");
  exp->add_option("--model-id", exp_model_id, "1, 2, or 0 for both");
  exp->add_option("--M", exp_M, "M values, one curve each");
  exp->add_option("--C", exp_C, "gamma shape");
  exp->add_option("--H", exp_H, "self-similarity exponent");
  exp->add_option("--S", exp_S, "spot");
  exp->add_option("--out-dir", exp_out, "output directory");
  exp->add_flag("--svg,!--no-svg", exp_svg, "write SVG plots");
  exp->add_flag("--parallel", exp_parallel, "parallel sweep kernels");
  exp->add_option("--config", config_path, "key = value file, overrides flags");
  cfg_exp.bind("kind", &exp_kind);
  cfg_exp.bind("model-id", &exp_model_id);
  cfg_exp.bind("out-dir", &exp_out);
  cfg_exp.bind("svg", &exp_svg);
  cfg_exp.bind("parallel", &exp_parallel);
  cfg_exp.bind("C", &exp_C);
  cfg_exp.bind("H", &exp_H);
  cfg_exp.bind("S", &exp_S);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (check->parsed()) {
      if (!config_path.empty()) cfg_check.apply_file(config_path);
      const lrm::ModelSpec model = check_model.build();
      const lrm::AssumptionReport rep =
          lrm::check_all(model, check_R, check_grid);
      std::fputs(lrm::format_report(rep).c_str(), stdout);
      return rep.hard_failure() ? 2 : 0;
    }

    if (price->parsed()) {
      if (!config_path.empty()) cfg_price.apply_file(config_path);
      const lrm::ModelSpec model = price_model.build();
      const lrm::MarketState state{price_t, price_S};
      const lrm::OptionSpec opt{price_K, model.T};
      if (price_method == "quad") {
        const lrm::PriceResult r =
            lrm::price_call_quad(model, state, opt, price_grid.build());
        std::printf("price = %.12g\n", r.price);
        print_diagnostics(r.diag);
      } else if (price_method == "fft") {
        const lrm::TransformGrid grid = price_grid.build();
        const double pad = std::exp(6.0 * grid.lambda());
        const auto curve = lrm::price_curve_fft(
            model, state, model.T, grid, price_K / pad, price_K * pad);
        std::printf("price = %.12g\n", lrm::interpolate_curve(curve, price_K));
        std::printf("method = fft curve, %zu lattice nodes in window\n",
                    curve.size());
      } else if (price_method == "inversion") {
        const lrm::InversionResult r =
            lrm::price_call_inversion(model, state, opt);
        std::printf("price = %.12g\n", r.price);
        std::printf("density_norm = %.12g\n", r.density_norm);
        if (r.grid_warning)
          std::printf("warning: inversion grid looks too narrow%s\n",
                      state.t > 0.0 ? " (nonzero t carries an atom)" : "");
      } else if (price_method == "mc") {
        lrm::MCConfig mc;
        mc.paths = price_paths;
        mc.seed = price_seed;
        mc.antithetic = price_antithetic;
        const lrm::MCPrice r = lrm::mc_call_price(model, state, opt, mc);
        std::printf("price = %.12g\n", r.price);
        std::printf("std_error = %.6g\n", r.std_error);
      } else {
        throw std::invalid_argument("unknown --method '" + price_method + "'");
      }
      return 0;
    }

    if (hedge->parsed()) {
      if (!config_path.empty()) cfg_hedge.apply_file(config_path);
      const lrm::ModelSpec model = hedge_model.build();
      const lrm::MarketState state{hedge_t, hedge_S};
      const lrm::OptionSpec opt{hedge_K, model.T};
      lrm::HedgeResult r;
      if (hedge_method == "fft") {
        r = lrm::xi_fft(model, state, opt, hedge_grid.build());
      } else if (hedge_method == "quad") {
        r = lrm::xi_quad_direct(model, state, opt, hedge_grid.build());
      } else {
        throw std::invalid_argument("unknown --method '" + hedge_method + "'");
      }
      std::printf("xi = %.12g\n", r.xi);
      std::printf("price = %.12g\n", r.price);
      std::printf("sigma_t = %.12g\n", r.sigma_t);
      std::printf("mu_s_t = %.12g\n", r.mu_s_t);
      print_diagnostics(r.diag);
      return 0;
    }

    if (exp->parsed()) {
      if (!config_path.empty()) cfg_exp.apply_file(config_path);
      std::vector<lrm::ExperimentKind> kinds;
      if (exp_kind == "A" || exp_kind == "a" || exp_kind == "time")
        kinds = {lrm::ExperimentKind::time_sweep};
      else if (exp_kind == "B" || exp_kind == "b" || exp_kind == "strike")
        kinds = {lrm::ExperimentKind::strike_sweep};
      else if (exp_kind == "both")
        kinds = {lrm::ExperimentKind::time_sweep,
                 lrm::ExperimentKind::strike_sweep};
      else
        throw std::invalid_argument("unknown --kind '" + exp_kind + "'");
      std::vector<int> ids;
      if (exp_model_id == 0) ids = {1, 2};
      else if (exp_model_id == 1 || exp_model_id == 2) ids = {exp_model_id};
      else throw std::invalid_argument("--model-id must be 0, 1 or 2");

      const lrm::TransformGrid grid = exp_grid.build();
      const lrm::Exec ex =
          exp_parallel ? lrm::Exec::parallel : lrm::Exec::serial;
      for (lrm::ExperimentKind kind : kinds) {
        for (int id : ids) {
          lrm::ExperimentSpec spec;
          spec.kind = kind;
          spec.model_id = id;
          spec.M_values = exp_M;
          spec.C = exp_C;
          spec.H = exp_H;
          spec.spot = exp_S;
          const lrm::ExperimentResult r =
              lrm::run_experiment(spec, grid, exp_out, exp_svg, ex);
          std::printf("wrote %s\n", r.csv_path.string().c_str());
          if (exp_svg) std::printf("wrote %s\n", r.svg_path.string().c_str());
          for (const auto& w : r.warnings)
            std::printf("warning: %s\n", w.c_str());
        }
      }
      return 0;
    }
  } catch (const lrm::assumption_failure& e) {
    std::fprintf(stderr, "assumption failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
