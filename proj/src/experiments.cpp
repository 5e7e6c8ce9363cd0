#include "lrm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lrm/assumptions.hpp"

namespace lrm {

namespace {

std::string trim_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const ExperimentResult& r,
               const std::vector<double>& m_values) {
  std::ofstream os(path, std::ios::binary);  // binary keeps line endings LF
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << "t_or_K";
  for (double mv : m_values) os << ",xi_M" << trim_number(mv);
  os << "\n";
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    os << format12(r.x[i]);
    for (const auto& col : r.xi) os << "," << format12(col[i]);
    os << "\n";
  }
}

void write_svg(const std::filesystem::path& path, const std::string& title,
               const std::string& x_label, const ExperimentResult& r,
               const std::vector<double>& m_values) {
  const int width = 700, height = 500;
  const double ml = 70, mr = 20, mt = 40, mb = 50;
  const double pw = width - ml - mr, ph = height - mt - mb;

  const double x0 = r.x.front(), x1 = r.x.back();
  double y0 = 0.0, y1 = 1.0;
  for (const auto& col : r.xi) {
    y0 = std::min(y0, *std::min_element(col.begin(), col.end()));
    y1 = std::max(y1, *std::max_element(col.begin(), col.end()));
  }
  y1 += 0.02 * (y1 - y0);

  auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return mt + (y1 - y) / (y1 - y0) * ph; };

  static const char* colors[] = {"red", "blue", "green", "orange"};

  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";

  // frame and ticks
  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5.0;
    os << "<line x1=\"" << px(xv) << "\" y1=\"" << mt + ph << "\" x2=\""
       << px(xv) << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 20
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << trim_number(std::round(xv * 100.0) / 100.0) << "</text>\n";
    const double yv = y0 + (y1 - y0) * i / 5.0;
    os << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml
       << "\" y2=\"" << py(yv) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << trim_number(std::round(yv * 100.0) / 100.0) << "</text>\n";
  }
  os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"12\">"
     << x_label << "</text>\n";
  os << "<text x=\"18\" y=\"" << mt + ph / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\""
        " transform=\"rotate(-90 18 "
     << mt + ph / 2 << ")\">xi</text>\n";

  for (std::size_t c = 0; c < r.xi.size(); ++c) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[c % 4]
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < r.x.size(); ++i)
      os << px(r.x[i]) << "," << py(r.xi[c][i]) << " ";
    os << "\"/>\n";
    os << "<text x=\"" << ml + pw - 10 << "\" y=\"" << mt + 20 + 16 * c
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\""
          " fill=\""
       << colors[c % 4] << "\">M=" << trim_number(m_values[c]) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace

std::string experiment_basename(const ExperimentSpec& spec) {
  std::string kind =
      spec.kind == ExperimentKind::time_sweep ? "A" : "B";
  return "experiment" + kind + "_model" + std::to_string(spec.model_id);
}

ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const TransformGrid& grid,
                                const std::filesystem::path& out_dir,
                                bool write_svg_file, Exec exec) {
  if (spec.model_id != 1 && spec.model_id != 2)
    throw std::invalid_argument("experiment: model_id must be 1 or 2");
  if (spec.M_values.empty())
    throw std::invalid_argument("experiment: need at least one M");

  const bool time_sweep = spec.kind == ExperimentKind::time_sweep;
  const double T = time_sweep ? 1.0 : 0.5;

  ExperimentResult out;
  if (time_sweep) {
    for (int i = 1; i <= 99; ++i) out.x.push_back(i * 0.01);
  } else {
    for (int i = 51; i <= 150; ++i) out.x.push_back(i * 0.01);
  }

  for (double mv : spec.M_values) {
    auto drift = spec.model_id == 1 ? DriftSpec::martingale()
                                    : DriftSpec::half_variance();
    const ModelSpec model =
        make_model({spec.C, mv, mv, spec.H}, std::move(drift), T);

    const AssumptionReport rep = check_all(model, grid.R);
    if (rep.hard_failure())
      throw assumption_failure("experiment aborted for M = " + trim_number(mv) +
                               ": damping margin " +
                               std::to_string(rep.damping.margin));
    if (rep.a3_strict.verdict == Verdict::fails) {
      std::ostringstream w;
      w << "M = " << trim_number(mv) << ", T = " << T
        << ": strict moment condition fails (margin "
        << rep.a3_strict.margin << "); weak condition "
        << to_string(rep.a3_weak.verdict) << ", damping margin "
        << rep.damping.margin << "; proceeding on the weakened bound";
      out.warnings.push_back(w.str());
    }

    std::vector<double> col(out.x.size());
    if (time_sweep) {
      for_each_index(static_cast<std::int64_t>(out.x.size()), exec,
                     [&](std::int64_t i) {
                       const HedgeResult h =
                           xi_fft(model, {out.x[i], spec.spot}, {1.0, T}, grid);
                       col[i] = h.xi;
                     });
    } else {
      col = xi_strike_sweep(model, {0.0, spec.spot}, out.x, grid, exec);
    }
    out.xi.push_back(std::move(col));
  }

  std::filesystem::create_directories(out_dir);
  const std::string base = experiment_basename(spec);
  out.csv_path = out_dir / (base + ".csv");
  write_csv(out.csv_path, out, spec.M_values);
  if (write_svg_file) {
    out.svg_path = out_dir / (base + ".svg");
    const std::string drift_name =
        spec.model_id == 1 ? "martingale drift" : "half-variance drift";
    const std::string title =
        time_sweep
            ? "Hedge ratio at K = 1, T = 1 (" + drift_name + ")"
            : "Hedge ratio across strikes, t = 0, T = 0.5 (" + drift_name + ")";
    write_svg(out.svg_path, title, time_sweep ? "t" : "K", out, spec.M_values);
  }
  return out;
}

}  // namespace lrm
