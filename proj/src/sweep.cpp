#include "xcsum/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace xcsum {

std::vector<double> make_grid(const SweepRange& range, Spacing spacing) {
  if (range.count < 1) {
    throw std::invalid_argument("grid count must be at least 1");
  }
  if (!std::isfinite(range.min) || !std::isfinite(range.max) ||
      range.min > range.max) {
    throw std::invalid_argument("grid range must be finite with min <= max");
  }
  if (spacing == Spacing::Log && !(range.min > 0.0)) {
    throw std::invalid_argument("log spacing requires min > 0");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(range.count));
  if (range.count == 1) {
    grid.push_back(range.min);
    return grid;
  }
  if (spacing == Spacing::Linear) {
    const double step = (range.max - range.min) / (range.count - 1);
    for (int i = 0; i < range.count; ++i) {
      grid.push_back(i == range.count - 1 ? range.max : range.min + i * step);
    }
  } else {
    const double lmin = std::log(range.min);
    const double lstep = (std::log(range.max) - lmin) / (range.count - 1);
    for (int i = 0; i < range.count; ++i) {
      grid.push_back(i == range.count - 1 ? range.max
                                          : std::exp(lmin + i * lstep));
    }
  }
  return grid;
}

SweepRow evaluate_grid_point(double a2, double b2, double p1, double p2,
                             std::optional<double> delta) {
  const ChannelParams params{a2, b2, p1, p2};
  validate(params);

  SweepRow row;
  row.a2 = a2;
  row.b2 = b2;
  row.region = classify_region(params);

  const bool in_r1 = a2 >= 1.0 && b2 <= 1.0;
  const bool in_r2 = a2 <= 1.0 && b2 >= 1.0;

  const auto side1 = evaluate_side(params, Receiver::One);
  const auto side2 = evaluate_side(params, Receiver::Two);
  for (int i = 0; i < 3; ++i) {
    row.bounds[i] = side1[i];
    row.bounds[3 + i] = side2[i];
    if (!in_r1) {
      row.bounds[i] = BoundEvaluation{side1[i].kind, false, "outside R1", {}, {}};
    }
    if (!in_r2) {
      row.bounds[3 + i] =
          BoundEvaluation{side2[i].kind, false, "outside R2", {}, {}};
    }
  }

  for (const auto& ev : row.bounds) {
    if (!ev.applicable) continue;
    if (!row.best_value_bits || *ev.value_bits < *row.best_value_bits) {
      row.best_kind = ev.kind;
      row.best_value_bits = ev.value_bits;
    }
  }

  if (delta) {
    if (in_r1) {
      auto cert = in_r_delta(params, *delta, Receiver::One);
      row.certifying_bounds.insert(row.certifying_bounds.end(),
                                   cert.certifying_bounds.begin(),
                                   cert.certifying_bounds.end());
    }
    if (in_r2) {
      auto cert = in_r_delta(params, *delta, Receiver::Two);
      row.certifying_bounds.insert(row.certifying_bounds.end(),
                                   cert.certifying_bounds.begin(),
                                   cert.certifying_bounds.end());
    }
    row.r_delta_member = !row.certifying_bounds.empty();
  }
  return row;
}

void validate_config(const SweepConfig& config) {
  validate(ChannelParams{0.0, 0.0, config.p1, config.p2});
  if (config.delta && !(*config.delta > 0.0)) {
    throw std::invalid_argument("delta must be positive");
  }
  make_grid(config.a2_range, config.spacing);
  make_grid(config.b2_range, config.spacing);
}

void sweep_plane(const SweepConfig& config, const RowSink& sink) {
  validate_config(config);
  const auto a2_grid = make_grid(config.a2_range, config.spacing);
  const auto b2_grid = make_grid(config.b2_range, config.spacing);
  for (double a2 : a2_grid) {
    for (double b2 : b2_grid) {
      sink(evaluate_grid_point(a2, b2, config.p1, config.p2, config.delta));
    }
  }
}

void sweep_curve_vs_a2(double p1, double p2, double b2,
                       const SweepRange& a2_range, Spacing spacing,
                       const std::function<void(const CurvePoint&)>& sink) {
  validate(ChannelParams{0.0, b2, p1, p2});
  if (b2 > 1.0) {
    throw std::invalid_argument("curve requires 0 <= b2 <= 1");
  }
  const auto grid = make_grid(a2_range, spacing);
  for (double a2 : grid) {
    const ChannelParams params{a2, b2, p1, p2};
    CurvePoint point;
    point.a2 = a2;
    point.r_mac1 = mac_sum_rate(params, Receiver::One);
    const auto eval_a = bound_a(params);
    const auto eval_c = bound_c(params);
    point.value_a = eval_a.value_bits;
    point.gap_a = eval_a.gap_bits;
    point.value_c = eval_c.value_bits;
    point.gap_c = eval_c.gap_bits;
    sink(point);
  }
}

void threshold_curve_vs_p1(
    std::span<const double> deltas, const SweepRange& p1_range,
    Spacing spacing, const std::function<void(const ThresholdPoint&)>& sink) {
  for (double delta : deltas) {
    if (!(delta > 0.0)) {
      throw std::invalid_argument("deltas must be positive");
    }
  }
  const auto grid = make_grid(p1_range, spacing);
  for (double delta : deltas) {
    for (double p1 : grid) {
      sink(ThresholdPoint{p1, delta, delta_threshold_a(p1, delta)});
    }
  }
}

}  // namespace xcsum
