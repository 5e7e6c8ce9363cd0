#pragma once

#include <string>

#include "lrm/model.hpp"

namespace lrm {

enum class Verdict { holds, fails, holds_by_construction };

const char* to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::holds;
  double margin = 0.0;   // distance to the boundary, or the bound/value computed
  double margin2 = 0.0;  // secondary margin where a check has two sides
};

struct AssumptionReport {
  CheckResult a3_strict;  // strict moment condition, margin = M T^-H - 4
  CheckResult a3_weak;    // weak moment condition, margin = M T^-H - 2
  CheckResult a4;         // drift trap: -q_t(1) >= rho'_t > q_t(1) - q_t(2)
  CheckResult a5;         // minimal-measure density integrability bound
  CheckResult a6;         // first-moment value C T^H (1/M + 1/G)
  CheckResult damping;    // strip clearance for the damping line, R+1 < M T^-H
  int a4_samples = 0;
  std::string notes;

  // the one precondition the transform cannot survive losing
  bool hard_failure() const { return damping.verdict == Verdict::fails; }
};

// Evaluates every checkable assumption for the model at damping R. The a4
// inequalities are sampled on t_i = i T / n, i = 1..n.
AssumptionReport check_all(const ModelSpec& m, double damping_R,
                           int t_grid_size = 999);

std::string format_report(const AssumptionReport& r);

}  // namespace lrm
