#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "curvelab/characterize.hpp"
#include "curvelab/dsl.hpp"
#include "curvelab/limits.hpp"
#include "curvelab/report.hpp"

namespace {

using namespace curvelab;

struct OutputOptions {
  std::string format = "text";
  std::string out_file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->set_help_flag("--help", "Print help");
  cmd->add_option("--out", out.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out-file", out.out_file, "Write the report to a file instead of stdout");
}

void emit(const RunReport& report, const OutputOptions& out) {
  std::string body;
  if (out.format == "json")
    body = report_to_json(report).dump(2) + "\n";
  else if (out.format == "csv")
    body = report_to_csv(report);
  else
    body = report_to_text(report);
  if (out.out_file.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out.out_file);
    if (!f) throw Error("cannot open output file: " + out.out_file);
    f << body;
  }
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

std::vector<Point2> read_points_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open points file: " + path);
  std::vector<Point2> points;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream is(line);
    double x, y;
    if (is >> x >> y) {
      points.push_back({x, y});
    } else if (first) {
      // optional header row
    } else {
      throw Error("malformed CSV line: " + line);
    }
    first = false;
  }
  return points;
}

nlohmann::json verdict_json(const Verdict& v) {
  return {{"decision", to_string(v.decision)},
          {"max_ratio_deviation", v.max_ratio_deviation},
          {"conic_residual", v.conic_residual},
          {"conic_discriminant", v.conic_discriminant},
          {"max_lemma6", v.max_lemma6},
          {"max_lemma7", v.max_lemma7},
          {"max_ode", v.max_ode},
          {"ratio_samples", v.ratio_samples},
          {"thresholds",
           {{"tol_ratio", v.thresholds.tol_ratio},
            {"tol_conic", v.thresholds.tol_conic},
            {"tol_disc", v.thresholds.tol_disc},
            {"tol_res", v.thresholds.tol_res}}}};
}

int run_limits(const std::string& spec, double at, double h0, double ratio, int steps,
               const OutputOptions& out) {
  Timer timer;
  const Curve curve = parse_curve_spec(spec);
  const Frame frame(curve, at);
  const std::vector<double> hs =
      h0 > 0.0 ? h_sequence(h0, ratio, steps) : default_h_sequence(frame);

  Table samples{"samples", {"h", "L_over_sqrt_h", "T_over_h32", "U_over_h32", "alpha"}, {}};
  for (double h : hs) {
    const double L = chord_length(frame, h);
    const double sh = std::sqrt(h);
    const AlphaDecomposition d = alpha_decomposition(frame, h);
    samples.rows.push_back(
        {h, L / sh, t_p(frame, h) / (h * sh), u_p(frame, h) / (h * sh), d.alpha});
  }

  const double kappa = frame.kappa();
  const double a = 0.5 * kappa;
  struct Row {
    const char* name;
    LimitEstimate est;
    double target;
  };
  std::vector<Row> rows = {
      {"L_over_sqrt_h", chord_limit(frame, hs), 2.0 * std::sqrt(2.0 / kappa)},
      {"T_over_h32", t_limit(frame, hs), std::sqrt(2.0 / kappa)},
      {"U_over_h32", u_limit(frame, hs), 0.5 * std::sqrt(2.0 / kappa)},
      {"alpha", alpha_limit(frame, hs), std::sqrt(2.0 / kappa)},
      {"beta", beta_limit(frame, hs), kappa},
      {"delta", delta_limit(frame, hs), kappa * kappa},
      {"eta", eta_limit(frame, hs), 0.5 / std::sqrt(a)},
      {"gamma", gamma_limit(frame, hs), 2.0 * a * std::sqrt(a)},
  };

  RunReport report;
  report.command = "limits";
  report.curve_spec = curve.spec();
  report.params = {{"at", at}, {"h0", hs.front()}, {"ratio", ratio}, {"steps", steps},
                   {"kappa", kappa}};
  report.tables.push_back(std::move(samples));
  Table limits{"limits", {}, {{}}};
  for (const auto& row : rows) {
    limits.columns.push_back(row.name);
    limits.columns.push_back(std::string(row.name) + "_target");
    limits.rows[0].push_back(row.est.value);
    limits.rows[0].push_back(row.target);
  }
  report.tables.push_back(std::move(limits));
  report.timing_ms = timer.ms();
  emit(report, out);
  return 0;
}

int run_ratio(const std::string& spec, double at, double h, const OutputOptions& out) {
  Timer timer;
  const Curve curve = parse_curve_spec(spec);
  const Frame frame(curve, at);
  const double T = t_p(frame, h);
  const double U = u_p(frame, h);
  RunReport report;
  report.command = "ratio";
  report.curve_spec = curve.spec();
  report.params = {{"at", at}, {"h", h}};
  report.tables.push_back({"ratio", {"x0", "h", "T", "U", "U_over_T"}, {{at, h, T, U, U / T}}});
  report.timing_ms = timer.ms();
  emit(report, out);
  return 0;
}

int run_scan(const std::string& spec, double from, double to, int samples, double h,
             int threads, const OutputOptions& out) {
  Timer timer;
  const Curve curve = parse_curve_spec(spec);
  if (samples < 1) throw InvalidParameter("samples", "must be at least 1");

  std::vector<std::vector<double>> rows(static_cast<std::size_t>(samples));
  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const double x0 =
          samples == 1 ? from : from + (to - from) * i / static_cast<double>(samples - 1);
      const Frame frame(curve, x0);
      const double T = t_p(frame, h);
      const double U = u_p(frame, h);
      rows[static_cast<std::size_t>(i)] = {x0, T, U, U / T};
    }
  };
  threads = std::max(1, std::min(threads, samples));
  if (threads == 1) {
    worker(0, samples);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const int chunk = (samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          worker(t * chunk, std::min(samples, (t + 1) * chunk));
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  RunReport report;
  report.command = "scan";
  report.curve_spec = curve.spec();
  report.params = {{"from", from}, {"to", to}, {"samples", samples}, {"h", h},
                   {"threads", threads}};
  report.tables.push_back({"scan", {"x0", "T", "U", "U_over_T"}, std::move(rows)});
  report.timing_ms = timer.ms();
  emit(report, out);
  return 0;
}

int run_residuals(const std::string& spec, double at, std::vector<double> probes,
                  const OutputOptions& out) {
  Timer timer;
  const Curve curve = parse_curve_spec(spec);
  const Frame frame(curve, at);
  if (probes.empty()) probes = {0.25 * frame.probe_radius(), 0.5 * frame.probe_radius()};

  RunReport report;
  report.command = "residuals";
  report.curve_spec = curve.spec();
  report.params = {{"at", at}};
  Table table{"residuals", {"t", "lemma6", "lemma7", "ode"}, {}};
  for (double t : probes) {
    double l6 = std::numeric_limits<double>::quiet_NaN();
    double l7 = l6, ode = l6;
    try {
      l6 = lemma6_residual(frame, t);
      l7 = lemma7_residual(frame, t);
      ode = ode_residual(frame, t);
    } catch (const SingularAtApex& e) {
      report.notes.push_back("t=" + std::to_string(t) + ": " + e.what());
    }
    table.rows.push_back({t, l6, l7, ode});
  }
  report.tables.push_back(std::move(table));
  report.timing_ms = timer.ms();
  emit(report, out);
  return 0;
}

int run_classify(const std::string& spec, const std::string& points_file,
                 const ClassifyThresholds& thresholds, const OutputOptions& out) {
  Timer timer;
  RunReport report;
  report.command = "classify";
  Verdict verdict;
  if (!points_file.empty()) {
    verdict = classify_points(read_points_csv(points_file), thresholds);
    report.params = {{"points", points_file}};
  } else {
    const Curve curve = parse_curve_spec(spec);
    report.curve_spec = curve.spec();
    const std::vector<double> points = default_sample_points(curve);
    const std::vector<double> scales = default_scales(curve, points[points.size() / 2]);
    verdict = classify_curve(curve, points, scales, thresholds);
  }
  report.verdict = verdict_json(verdict);
  report.timing_ms = timer.ms();
  emit(report, out);
  switch (verdict.decision) {
    case Decision::Parabola: return 0;
    case Decision::NotParabola: return 1;
    case Decision::Inconclusive: return 3;
  }
  return 3;
}

int run_ode_check(double a, double c, double t0, double t1, const OutputOptions& out) {
  Timer timer;
  const double err = ode_trajectory_max_error(a, c, t0, t1);
  RunReport report;
  report.command = "ode-check";
  report.curve_spec = family_curve(a, c).spec();
  report.params = {{"a", a}, {"c", c}, {"t0", t0}, {"t1", t1}};
  report.tables.push_back({"ode_check", {"max_error"}, {{err}}});
  report.timing_ms = timer.ms();
  emit(report, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Triangle areas on strictly convex plane curves: contact/tangent triangle "
      "limits, curvature estimators, and a parabola classifier.\n\n"
      "Curve specs: parabola(a=1), family(a=1,c=0.5), circle(r=2), ellipse(p=2,q=1),\n"
      "piecewise(a=1,b=4), expshift, expr(x^2 + 0.1*x^4).\n"
      "Expression grammar: + - * / ^ (right-associative; unary minus binds looser,\n"
      "so -x^2 = -(x^2)), parentheses, functions sin cos exp log sqrt cosh sinh."};
  // --h is a domain flag, so help is --help only.
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);

  std::string spec, points_file;
  double at = 0.0, h = 0.1, h0 = 0.0, ratio = 0.5, from = 0.0, to = 1.0;
  double fam_a = 1.0, fam_c = 1.0, t0 = 0.5, t1 = 3.0;
  int steps = 16, samples = 20, threads = 1;
  ClassifyThresholds thresholds;
  OutputOptions out;

  auto* limits = app.add_subcommand("limits", "Chord/area limit scan at a base point");
  limits->add_option("--curve", spec, "Curve spec")->required();
  limits->add_option("--at", at, "Base point x0")->capture_default_str();
  limits->add_option("--h0", h0, "Initial height (default: from the probe radius)");
  limits->add_option("--ratio", ratio, "Geometric ratio")->capture_default_str();
  limits->add_option("--steps", steps, "Number of heights")->capture_default_str();
  add_output_flags(limits, out);

  auto* ratio_cmd = app.add_subcommand("ratio", "U_P(h)/T_P(h) at one point and height");
  ratio_cmd->add_option("--curve", spec, "Curve spec")->required();
  ratio_cmd->add_option("--at", at, "Base point x0")->capture_default_str();
  ratio_cmd->add_option("--h", h, "Chord height")->capture_default_str();
  add_output_flags(ratio_cmd, out);

  auto* scan = app.add_subcommand("scan", "Sweep U_P/T_P over base points");
  scan->add_option("--curve", spec, "Curve spec")->required();
  scan->add_option("--from", from, "First base point")->required();
  scan->add_option("--to", to, "Last base point")->required();
  scan->add_option("--samples", samples, "Number of base points")->capture_default_str();
  scan->add_option("--h", h, "Chord height")->capture_default_str();
  scan->add_option("--threads", threads, "Worker threads")->capture_default_str();
  add_output_flags(scan, out);

  std::vector<double> probes;
  auto* residuals = app.add_subcommand("residuals", "Characterizing-identity residuals");
  residuals->add_option("--curve", spec, "Curve spec")->required();
  residuals->add_option("--at", at, "Base point x0")->capture_default_str();
  residuals->add_option("--t", probes, "Probe offsets in the frame")->delimiter(',');
  add_output_flags(residuals, out);

  auto* classify = app.add_subcommand("classify", "Parabola classifier");
  auto* copt = classify->add_option("--curve", spec, "Curve spec");
  auto* popt = classify->add_option("--points", points_file, "CSV point set (x,y)");
  copt->excludes(popt);
  classify->add_option("--tol-ratio", thresholds.tol_ratio, "Ratio channel tolerance")
      ->capture_default_str();
  classify->add_option("--tol-conic", thresholds.tol_conic, "Conic residual tolerance")
      ->capture_default_str();
  classify->add_option("--tol-disc", thresholds.tol_disc, "Discriminant tolerance")
      ->capture_default_str();
  classify->add_option("--tol-res", thresholds.tol_res, "Identity residual tolerance")
      ->capture_default_str();
  add_output_flags(classify, out);

  auto* ode = app.add_subcommand("ode-check", "Integrate the characterization ODE");
  ode->add_option("--a", fam_a, "Family parameter a")->capture_default_str();
  ode->add_option("--c", fam_c, "Family parameter c")->capture_default_str();
  ode->add_option("--t0", t0, "Integration start")->capture_default_str();
  ode->add_option("--t1", t1, "Integration end")->capture_default_str();
  add_output_flags(ode, out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (limits->parsed()) return run_limits(spec, at, h0, ratio, steps, out);
    if (ratio_cmd->parsed()) return run_ratio(spec, at, h, out);
    if (scan->parsed()) return run_scan(spec, from, to, samples, h, threads, out);
    if (residuals->parsed()) return run_residuals(spec, at, probes, out);
    if (classify->parsed()) {
      if (spec.empty() && points_file.empty())
        throw InvalidParameter("curve", "either --curve or --points is required");
      return run_classify(spec, points_file, thresholds, out);
    }
    if (ode->parsed()) return run_ode_check(fam_a, fam_c, t0, t1, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
