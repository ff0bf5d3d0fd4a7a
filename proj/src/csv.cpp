#include "xcsum/csv.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace xcsum::csv {

namespace {

std::string opt(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}

std::string opt(const std::optional<bool>& value) {
  return value ? (*value ? "1" : "0") : std::string();
}

std::string kinds_field(const std::vector<BoundKind>& kinds) {
  std::string out;
  for (const auto& kind : kinds) {
    if (!out.empty()) out += '|';
    out += kind_code(kind);
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string sweep_header() {
  std::string header = "a2,b2,region,boundary";
  for (const char* kind : {"A1", "B1", "C1", "A2", "B2", "C2"}) {
    header += std::string(",") + kind + "_applicable," + kind + "_value_bits," +
              kind + "_gap_bits";
  }
  header += ",best_kind,best_value_bits,r_delta_member,certifying_bounds";
  return header;
}

std::string sweep_row(const SweepRow& row) {
  std::ostringstream out;
  out << format_double(row.a2) << ',' << format_double(row.b2) << ','
      << region_code(row.region) << ',' << (row.region.boundary ? '1' : '0');
  for (const auto& ev : row.bounds) {
    out << ',' << (ev.applicable ? '1' : '0') << ',' << opt(ev.value_bits)
        << ',' << opt(ev.gap_bits);
  }
  out << ',' << (row.best_kind ? kind_code(*row.best_kind) : std::string())
      << ',' << opt(row.best_value_bits) << ',' << opt(row.r_delta_member)
      << ',' << kinds_field(row.certifying_bounds);
  return out.str();
}

std::string curve_header() {
  return "a2,r_mac1,value_a,value_c,gap_a,gap_c";
}

std::string curve_row(const CurvePoint& point) {
  std::ostringstream out;
  out << format_double(point.a2) << ',' << format_double(point.r_mac1) << ','
      << opt(point.value_a) << ',' << opt(point.value_c) << ','
      << opt(point.gap_a) << ',' << opt(point.gap_c);
  return out.str();
}

std::string threshold_header() { return "p1,delta,a2_threshold"; }

std::string threshold_row(const ThresholdPoint& point) {
  std::ostringstream out;
  out << format_double(point.p1) << ',' << format_double(point.delta) << ','
      << format_double(point.a2_threshold);
  return out.str();
}

// Each writer validates everything before the first byte goes out, so an
// invalid request never leaves partial output behind.

void write_sweep(std::ostream& out, const SweepConfig& config) {
  validate_config(config);
  out << sweep_header() << '\n';
  sweep_plane(config, [&](const SweepRow& row) { out << sweep_row(row) << '\n'; });
}

void write_curve(std::ostream& out, double p1, double p2, double b2,
                 const SweepRange& a2_range, Spacing spacing) {
  validate(ChannelParams{0.0, b2, p1, p2});
  if (b2 > 1.0) {
    throw std::invalid_argument("curve requires 0 <= b2 <= 1");
  }
  make_grid(a2_range, spacing);
  out << curve_header() << '\n';
  sweep_curve_vs_a2(p1, p2, b2, a2_range, spacing,
                    [&](const CurvePoint& p) { out << curve_row(p) << '\n'; });
}

void write_thresholds(std::ostream& out, std::span<const double> deltas,
                      const SweepRange& p1_range, Spacing spacing) {
  for (double delta : deltas) {
    if (!(delta > 0.0)) {
      throw std::invalid_argument("deltas must be positive");
    }
  }
  make_grid(p1_range, spacing);
  out << threshold_header() << '\n';
  threshold_curve_vs_p1(deltas, p1_range, spacing, [&](const ThresholdPoint& p) {
    out << threshold_row(p) << '\n';
  });
}

}  // namespace xcsum::csv
