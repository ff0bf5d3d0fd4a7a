// xcsum: sum-capacity bounds for the two-user Gaussian X channel.
//
// Subcommands:
//   eval        evaluate all bounds at one channel point
//   sweep       grid sweep over the (a^2, b^2) plane, CSV out
//   curve       bounds A and C versus a^2 at fixed b^2, CSV out
//   thresholds  bound-A delta thresholds versus P1, CSV out
//   delta       closed-form delta thresholds at one point
//   verify      randomized oracle cross-verification
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xcsum/bounds.hpp"
#include "xcsum/csv.hpp"
#include "xcsum/genie.hpp"
#include "xcsum/sweep.hpp"
#include "xcsum/verify.hpp"

namespace {

using xcsum::csv::format_double;

xcsum::SweepRange parse_range(const std::string& text) {
  std::istringstream in(text);
  xcsum::SweepRange range;
  char sep1 = 0;
  char sep2 = 0;
  if (!(in >> range.min >> sep1 >> range.max >> sep2 >> range.count) ||
      sep1 != ':' || sep2 != ':' || !in.eof()) {
    throw CLI::ValidationError("range", "expected min:max:count, got '" + text +
                                            "'");
  }
  return range;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    values.push_back(std::stod(item));
  }
  if (values.empty()) {
    throw CLI::ValidationError("list", "expected comma-separated numbers");
  }
  return values;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("-");
}

std::string cert_field(const std::vector<xcsum::BoundKind>& kinds) {
  if (kinds.empty()) return "-";
  std::string out;
  for (const auto& kind : kinds) {
    if (!out.empty()) out += '|';
    out += xcsum::kind_code(kind);
  }
  return out;
}

// Writes through to a file when a path is given, standard output otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::runtime_error("cannot open output file '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_eval(std::ostream& out, const xcsum::SweepRow& row,
                const xcsum::ChannelParams& params) {
  out << "point a2=" << format_double(params.a2)
      << " b2=" << format_double(params.b2)
      << " p1=" << format_double(params.p1)
      << " p2=" << format_double(params.p2) << '\n';
  out << "region " << xcsum::region_code(row.region)
      << " boundary=" << (row.region.boundary ? 1 : 0) << '\n';
  out << "r_mac_1 "
      << format_double(xcsum::mac_sum_rate(params, xcsum::Receiver::One))
      << '\n';
  out << "r_mac_2 "
      << format_double(xcsum::mac_sum_rate(params, xcsum::Receiver::Two))
      << '\n';
  out << "bound side applicable value_bits gap_bits reason\n";
  for (const auto& ev : row.bounds) {
    out << xcsum::to_string(ev.kind.tag) << ' '
        << xcsum::to_string(ev.kind.side) << ' '
        << (ev.applicable ? "yes" : "no") << ' ' << opt_field(ev.value_bits)
        << ' ' << opt_field(ev.gap_bits) << ' '
        << (ev.applicable ? "-" : ev.reason) << '\n';
  }
  if (row.best_kind) {
    out << "best " << xcsum::kind_code(*row.best_kind) << ' '
        << format_double(*row.best_value_bits) << '\n';
  } else {
    out << "best none\n";
  }
  if (row.r_delta_member) {
    out << "r_delta member=" << (*row.r_delta_member ? "yes" : "no") << " via "
        << cert_field(row.certifying_bounds) << '\n';
  }
}

int run_verify(std::ostream& out, const xcsum::VerifyOptions& options) {
  const xcsum::VerifyReport report = xcsum::run_verification(options);
  for (const auto& check : report.checks) {
    std::ostringstream line;
    line << check.name << ": max residual " << format_double(check.residual)
         << " (threshold " << format_double(check.threshold) << ") "
         << (check.pass ? "[ok]" : "[FAIL]");
    out << line.str() << '\n';
  }
  out << "min applicable gap observed " << format_double(report.min_gap_bits)
      << '\n';
  if (!report.pass) {
    if (!report.first_failure.empty()) {
      out << "first failure: " << report.first_failure << '\n';
    }
    out << "verify FAIL\n";
    return 2;
  }
  out << "verify PASS\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-capacity bounds for the two-user Gaussian X channel"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate bounds at one point");
  double eval_a2 = 0, eval_b2 = 0, eval_p1 = 0, eval_p2 = 0;
  bool eval_db = false;
  std::optional<double> eval_delta;
  eval->add_option("--a2", eval_a2, "squared cross gain a^2")->required();
  eval->add_option("--b2", eval_b2, "squared cross gain b^2")->required();
  eval->add_option("--p1", eval_p1, "power P1 (linear, or dB with --db)")
      ->required();
  eval->add_option("--p2", eval_p2, "power P2 (linear, or dB with --db)")
      ->required();
  eval->add_flag("--db", eval_db, "interpret --p1/--p2 as dB: P = 10^(dB/10)");
  eval->add_option("--delta", eval_delta, "also report the delta certificate");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid sweep to CSV");
  std::string sweep_a2_spec, sweep_b2_spec, sweep_out;
  double sweep_p1 = 0, sweep_p2 = 0;
  std::optional<double> sweep_delta;
  bool sweep_log = false;
  sweep->add_option("--a2", sweep_a2_spec, "a^2 grid as min:max:count")
      ->required();
  sweep->add_option("--b2", sweep_b2_spec, "b^2 grid as min:max:count")
      ->required();
  sweep->add_option("--p1", sweep_p1, "power P1 (linear)")->required();
  sweep->add_option("--p2", sweep_p2, "power P2 (linear)")->required();
  sweep->add_option("--delta", sweep_delta, "delta for region certification");
  sweep->add_flag("--log", sweep_log, "logarithmic grid spacing");
  sweep->add_option("-o,--output", sweep_out, "output file (default stdout)");

  // curve
  auto* curve = app.add_subcommand("curve", "bounds A and C versus a^2");
  std::string curve_a2_spec, curve_out;
  double curve_p1 = 0, curve_p2 = 0, curve_b2 = 0;
  bool curve_log = false;
  curve->add_option("--a2", curve_a2_spec, "a^2 grid as min:max:count")
      ->required();
  curve->add_option("--b2", curve_b2, "fixed b^2 (at most 1)")->required();
  curve->add_option("--p1", curve_p1, "power P1 (linear)")->required();
  curve->add_option("--p2", curve_p2, "power P2 (linear)")->required();
  curve->add_flag("--log", curve_log, "logarithmic grid spacing");
  curve->add_option("-o,--output", curve_out, "output file (default stdout)");

  // thresholds
  auto* thresholds =
      app.add_subcommand("thresholds", "bound-A delta thresholds versus P1");
  std::string thr_p1_spec, thr_delta_spec, thr_out;
  bool thr_log = false;
  thresholds->add_option("--delta", thr_delta_spec, "comma-separated deltas")
      ->required();
  thresholds->add_option("--p1", thr_p1_spec, "P1 grid as min:max:count")
      ->required();
  thresholds->add_flag("--log", thr_log, "logarithmic grid spacing");
  thresholds->add_option("-o,--output", thr_out, "output file (default stdout)");

  // delta
  auto* delta_cmd =
      app.add_subcommand("delta", "closed-form delta thresholds at a point");
  double delta_a2 = 0, delta_p1 = 0, delta_p2 = 0, delta_value = 0;
  std::optional<double> delta_b2;
  delta_cmd->add_option("--a2", delta_a2, "squared cross gain a^2")->required();
  delta_cmd->add_option("--p1", delta_p1, "power P1 (linear)")->required();
  delta_cmd->add_option("--p2", delta_p2, "power P2 (linear)")->required();
  delta_cmd->add_option("--delta", delta_value, "gap target in bits")
      ->required();
  delta_cmd->add_option("--b2", delta_b2,
                        "squared cross gain b^2; adds a membership report");

  // verify
  auto* verify = app.add_subcommand("verify", "randomized oracle verification");
  xcsum::VerifyOptions verify_options;
  verify->add_option("--trials", verify_options.trials, "draws per flavor")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_options.seed, "random seed");
  verify->add_option("--tolerance", verify_options.tolerance,
                     "residual tolerance in bits")
      ->check(CLI::PositiveNumber);
  verify->add_option("--perturb-etarho", verify_options.perturb_eta_rho,
                     "offset subtracted from eta*rho (fault injection)")
      ->check(CLI::Range(0.0, 2.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*eval) {
      const double p1 = eval_db ? db_to_linear(eval_p1) : eval_p1;
      const double p2 = eval_db ? db_to_linear(eval_p2) : eval_p2;
      const xcsum::ChannelParams params{eval_a2, eval_b2, p1, p2};
      const auto row = xcsum::evaluate_grid_point(eval_a2, eval_b2, p1, p2,
                                                  eval_delta);
      print_eval(std::cout, row, params);
    } else if (*sweep) {
      xcsum::SweepConfig config;
      config.a2_range = parse_range(sweep_a2_spec);
      config.b2_range = parse_range(sweep_b2_spec);
      config.p1 = sweep_p1;
      config.p2 = sweep_p2;
      config.delta = sweep_delta;
      config.spacing = sweep_log ? xcsum::Spacing::Log : xcsum::Spacing::Linear;
      // Validate before the output file is created.
      xcsum::validate_config(config);
      OutputTarget target(sweep_out);
      xcsum::csv::write_sweep(target.stream(), config);
    } else if (*curve) {
      const auto range = parse_range(curve_a2_spec);
      const auto spacing =
          curve_log ? xcsum::Spacing::Log : xcsum::Spacing::Linear;
      xcsum::validate(xcsum::ChannelParams{0.0, curve_b2, curve_p1, curve_p2});
      if (curve_b2 > 1.0) {
        throw std::invalid_argument("curve requires 0 <= b2 <= 1");
      }
      xcsum::make_grid(range, spacing);
      OutputTarget target(curve_out);
      xcsum::csv::write_curve(target.stream(), curve_p1, curve_p2, curve_b2,
                              range, spacing);
    } else if (*thresholds) {
      const auto deltas = parse_list(thr_delta_spec);
      const auto range = parse_range(thr_p1_spec);
      const auto spacing = thr_log ? xcsum::Spacing::Log : xcsum::Spacing::Linear;
      for (double d : deltas) {
        if (!(d > 0.0)) throw std::invalid_argument("deltas must be positive");
      }
      xcsum::make_grid(range, spacing);
      OutputTarget target(thr_out);
      xcsum::csv::write_thresholds(target.stream(), deltas, range, spacing);
    } else if (*delta_cmd) {
      std::cout << "delta " << format_double(delta_value) << '\n';
      std::cout << "threshold_a a2 > "
                << format_double(xcsum::delta_threshold_a(delta_p1, delta_value))
                << " (p1=" << format_double(delta_p1) << ")\n";
      std::cout << "threshold_b b2 < "
                << format_double(
                       xcsum::delta_threshold_b(delta_a2, delta_p2, delta_value))
                << " (a2=" << format_double(delta_a2)
                << ", p2=" << format_double(delta_p2) << ")\n";
      std::cout << "threshold_c b2 < "
                << format_double(xcsum::delta_threshold_c(delta_p1, delta_value))
                << " (p1=" << format_double(delta_p1) << ")\n";
      if (delta_b2) {
        const auto row = xcsum::evaluate_grid_point(delta_a2, *delta_b2,
                                                    delta_p1, delta_p2,
                                                    delta_value);
        std::cout << "r_delta member=" << (*row.r_delta_member ? "yes" : "no")
                  << " via " << cert_field(row.certifying_bounds) << '\n';
      }
    } else if (*verify) {
      return run_verify(std::cout, verify_options);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
