// Grid evaluation over the (a^2, b^2) plane and the derived figure datasets:
// delta-region maps, best-bound dominance maps, bound curves versus a^2, and
// delta-threshold curves versus P1. Rows stream through a sink callback in a
// fixed row-major order (b^2 innermost) so large grids never build up in
// memory and output is reproducible byte for byte.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "xcsum/bounds.hpp"

namespace xcsum {

enum class Spacing { Linear, Log };

struct SweepRange {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

/// Grid points for a range; count 1 collapses to {min}. Log spacing requires
/// min > 0. Invalid ranges throw std::invalid_argument.
std::vector<double> make_grid(const SweepRange& range, Spacing spacing);

struct SweepConfig {
  SweepRange a2_range;
  SweepRange b2_range;
  double p1 = 0.0;
  double p2 = 0.0;
  std::optional<double> delta;
  Spacing spacing = Spacing::Linear;
};

/// One grid point's full record. The six bound slots are ordered
/// A1, B1, C1, A2, B2, C2; kinds whose side's region does not contain the
/// point are reported inapplicable ("outside R1"/"outside R2"), so points
/// outside both mixed regions carry no bound values at all. On the shared
/// corner a^2 = b^2 = 1 both sides are evaluated.
struct SweepRow {
  double a2 = 0.0;
  double b2 = 0.0;
  RegionLabel region;
  std::array<BoundEvaluation, 6> bounds;
  std::optional<BoundKind> best_kind;
  std::optional<double> best_value_bits;
  std::optional<bool> r_delta_member;       // present iff a delta was given
  std::vector<BoundKind> certifying_bounds;
};

/// Evaluates a single grid point; sweep_plane rows are exactly this applied
/// pointwise.
SweepRow evaluate_grid_point(double a2, double b2, double p1, double p2,
                             std::optional<double> delta);

/// Throws std::invalid_argument on bad ranges, negative powers, or a
/// non-positive delta.
void validate_config(const SweepConfig& config);

using RowSink = std::function<void(const SweepRow&)>;

/// Streams one row per grid point, a^2 outer, b^2 inner. The config is
/// validated before any row is emitted.
void sweep_plane(const SweepConfig& config, const RowSink& sink);

/// One sample of the bounds-versus-a^2 curve at fixed b^2 (the A and C bound
/// comparison). Inapplicable bounds are absent.
struct CurvePoint {
  double a2 = 0.0;
  double r_mac1 = 0.0;
  std::optional<double> value_a;
  std::optional<double> value_c;
  std::optional<double> gap_a;
  std::optional<double> gap_c;
};

void sweep_curve_vs_a2(double p1, double p2, double b2,
                       const SweepRange& a2_range, Spacing spacing,
                       const std::function<void(const CurvePoint&)>& sink);

/// One sample of the bound-A delta-threshold curve.
struct ThresholdPoint {
  double p1 = 0.0;
  double delta = 0.0;
  double a2_threshold = 0.0;
};

/// Streams delta_threshold_a over a P1 grid, one delta at a time in the
/// order given.
void threshold_curve_vs_p1(std::span<const double> deltas,
                           const SweepRange& p1_range, Spacing spacing,
                           const std::function<void(const ThresholdPoint&)>& sink);

}  // namespace xcsum
