// CSV emission for the sweep datasets. Floats carry 12 significant digits,
// absent values are empty fields, booleans are 0/1.

#pragma once

#include <iosfwd>
#include <string>

#include "xcsum/sweep.hpp"

namespace xcsum::csv {

std::string format_double(double value);

std::string sweep_header();
std::string sweep_row(const SweepRow& row);

std::string curve_header();
std::string curve_row(const CurvePoint& point);

std::string threshold_header();
std::string threshold_row(const ThresholdPoint& point);

void write_sweep(std::ostream& out, const SweepConfig& config);
void write_curve(std::ostream& out, double p1, double p2, double b2,
                 const SweepRange& a2_range, Spacing spacing);
void write_thresholds(std::ostream& out, std::span<const double> deltas,
                      const SweepRange& p1_range, Spacing spacing);

}  // namespace xcsum::csv
