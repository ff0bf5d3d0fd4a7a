#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xcsum/csv.hpp"
#include "xcsum/sweep.hpp"

using namespace xcsum;

namespace {

std::vector<SweepRow> collect(const SweepConfig& config) {
  std::vector<SweepRow> rows;
  sweep_plane(config, [&](const SweepRow& row) { rows.push_back(row); });
  return rows;
}

std::string sweep_csv(const SweepConfig& config) {
  std::ostringstream out;
  csv::write_sweep(out, config);
  return out.str();
}

}  // namespace

TEST_CASE("make_grid") {
  const auto single = make_grid({10, 10, 1}, Spacing::Linear);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 10.0);

  const auto linear = make_grid({1, 3, 5}, Spacing::Linear);
  REQUIRE(linear.size() == 5);
  CHECK(linear.front() == 1.0);
  CHECK(linear.back() == 3.0);
  CHECK(linear[2] == doctest::Approx(2.0));

  const auto log = make_grid({1, 100, 3}, Spacing::Log);
  CHECK(log[1] == doctest::Approx(10.0));
  CHECK(log.back() == 100.0);

  CHECK_THROWS_AS(make_grid({1, 3, 0}, Spacing::Linear), std::invalid_argument);
  CHECK_THROWS_AS(make_grid({3, 1, 5}, Spacing::Linear), std::invalid_argument);
  CHECK_THROWS_AS(make_grid({0, 3, 5}, Spacing::Log), std::invalid_argument);
}

TEST_CASE("single-cell sweep matches a direct evaluation") {
  SweepConfig config;
  config.a2_range = {10, 10, 1};
  config.b2_range = {0.5, 0.5, 1};
  config.p1 = config.p2 = 0.5;
  config.delta = 0.2;
  const auto rows = collect(config);
  REQUIRE(rows.size() == 1);
  const auto& row = rows[0];

  const ChannelParams p{10, 0.5, 0.5, 0.5};
  const auto side1 = evaluate_side(p, Receiver::One);
  for (int i = 0; i < 3; ++i) {
    CHECK(row.bounds[i].applicable == side1[i].applicable);
    CHECK(row.bounds[i].value_bits == side1[i].value_bits);
    CHECK(row.bounds[i].gap_bits == side1[i].gap_bits);
  }
  const auto best = best_bound(p, Receiver::One);
  REQUIRE(row.best_kind.has_value());
  CHECK(row.best_kind->tag == best->first.tag);
  CHECK(*row.best_value_bits == best->second);
  REQUIRE(row.r_delta_member.has_value());
  CHECK(*row.r_delta_member);
  REQUIRE(row.certifying_bounds.size() == 2);
}

TEST_CASE("rows outside both regions carry no bound values") {
  const auto row = evaluate_grid_point(0.5, 0.5, 1, 1, 0.2);
  CHECK(row.region.tag == RegionLabel::Tag::Outside);
  for (const auto& ev : row.bounds) {
    CHECK_FALSE(ev.applicable);
    CHECK_FALSE(ev.value_bits.has_value());
  }
  CHECK_FALSE(row.best_kind.has_value());
  REQUIRE(row.r_delta_member.has_value());
  CHECK_FALSE(*row.r_delta_member);

  // Strong interference on both links is also outside the mixed regime.
  const auto strong = evaluate_grid_point(4, 4, 1, 1, {});
  CHECK(strong.region.tag == RegionLabel::Tag::Outside);
  CHECK_FALSE(strong.best_kind.has_value());
  CHECK_FALSE(strong.r_delta_member.has_value());
}

TEST_CASE("out-of-region sides are gated with a reason") {
  const auto row = evaluate_grid_point(1.0, 5.0, 1, 1, {});
  CHECK(row.region.tag == RegionLabel::Tag::MixedR2);
  CHECK(row.bounds[2].reason == "outside R1");  // C1 would otherwise apply
  CHECK_FALSE(row.bounds[2].applicable);

  // On the shared corner both sides are evaluated.
  const auto corner = evaluate_grid_point(1.0, 1.0, 1, 1, {});
  CHECK(corner.region.boundary);
  CHECK(corner.bounds[2].applicable);   // C1
  CHECK(corner.bounds[5].applicable);   // C2
}

TEST_CASE("rows stream in row-major order with b2 inner") {
  SweepConfig config;
  config.a2_range = {1, 2, 2};
  config.b2_range = {0, 1, 3};
  config.p1 = config.p2 = 0.5;
  const auto rows = collect(config);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].a2 == 1.0);
  CHECK(rows[0].b2 == 0.0);
  CHECK(rows[1].b2 == 0.5);
  CHECK(rows[2].b2 == 1.0);
  CHECK(rows[3].a2 == 2.0);
  CHECK(rows[3].b2 == 0.0);
}

TEST_CASE("every row matches an independent evaluation bit for bit") {
  SweepConfig config;
  config.a2_range = {0.5, 20, 21};
  config.b2_range = {0, 2, 11};
  config.p1 = 0.7;
  config.p2 = 1.3;
  config.delta = 0.3;
  sweep_plane(config, [&](const SweepRow& row) {
    const ChannelParams p{row.a2, row.b2, config.p1, config.p2};
    const bool in_r1 = row.a2 >= 1.0 && row.b2 <= 1.0;
    const bool in_r2 = row.a2 <= 1.0 && row.b2 >= 1.0;
    const auto side1 = evaluate_side(p, Receiver::One);
    const auto side2 = evaluate_side(p, Receiver::Two);
    for (int i = 0; i < 3; ++i) {
      if (in_r1) {
        CHECK(row.bounds[i].applicable == side1[i].applicable);
        CHECK(row.bounds[i].value_bits == side1[i].value_bits);
        CHECK(row.bounds[i].gap_bits == side1[i].gap_bits);
      } else {
        CHECK_FALSE(row.bounds[i].applicable);
      }
      if (in_r2) {
        CHECK(row.bounds[3 + i].applicable == side2[i].applicable);
        CHECK(row.bounds[3 + i].value_bits == side2[i].value_bits);
      } else {
        CHECK_FALSE(row.bounds[3 + i].applicable);
      }
    }
    bool member = false;
    if (in_r1) member = member || in_r_delta(p, 0.3, Receiver::One).member;
    if (in_r2) member = member || in_r_delta(p, 0.3, Receiver::Two).member;
    CHECK(row.r_delta_member.value_or(false) == member);
  });
}

TEST_CASE("sweep output is deterministic") {
  SweepConfig config;
  config.a2_range = {1, 20, 21};
  config.b2_range = {0, 1, 11};
  config.p1 = 0.5;
  config.p2 = 0.5;
  config.delta = 0.2;
  CHECK(sweep_csv(config) == sweep_csv(config));
}

TEST_CASE("csv floats survive a parse round trip at 12 digits") {
  const std::vector<double> values{1.350219859070546, 0.06663326543173205,
                                   4.597359720095002, 1e-12, 0.0,
                                   123456.789012345, 2.0 / 3.0};
  for (double v : values) {
    const std::string text = csv::format_double(v);
    const double parsed = std::strtod(text.c_str(), nullptr);
    CHECK(csv::format_double(parsed) == text);
    if (v != 0.0) {
      CHECK(std::fabs(parsed - v) / std::fabs(v) < 1e-11);
    }
  }
}

TEST_CASE("sweep csv has one line per grid point plus a header") {
  SweepConfig config;
  config.a2_range = {1, 5, 4};
  config.b2_range = {0, 1, 3};
  config.p1 = config.p2 = 0.5;
  const std::string text = sweep_csv(config);
  int lines = 0;
  for (char ch : text) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 1 + 4 * 3);
  CHECK(text.substr(0, text.find('\n')) == csv::sweep_header());
}

TEST_CASE("curve behavior against the bound shapes") {
  std::vector<CurvePoint> points;
  sweep_curve_vs_a2(0.5, 0.5, 0.5625, {1, 100, 150}, Spacing::Log,
                    [&](const CurvePoint& p) { points.push_back(p); });
  REQUIRE(points.size() == 150);

  double prev_gap_a = std::numeric_limits<double>::infinity();
  std::optional<double> gap_c_seen;
  for (const auto& point : points) {
    if (point.a2 <= 2.25) {
      CHECK_FALSE(point.value_a.has_value());
    }
    if (point.gap_a) {
      CHECK(*point.gap_a < prev_gap_a);
      prev_gap_a = *point.gap_a;
    }
    REQUIRE(point.gap_c.has_value());
    if (!gap_c_seen) {
      gap_c_seen = point.gap_c;
    } else {
      CHECK(*point.gap_c == *gap_c_seen);  // constant in a2
    }
  }
  CHECK(*gap_c_seen == doctest::Approx(0.17877600230904184).epsilon(1e-12));

  CHECK_THROWS_AS(
      sweep_curve_vs_a2(0.5, 0.5, 1.5, {1, 10, 5}, Spacing::Linear,
                        [](const CurvePoint&) {}),
      std::invalid_argument);
}

TEST_CASE("threshold curve matches the closed form and is monotone") {
  std::vector<ThresholdPoint> points;
  const std::array deltas{0.1, 0.2, 0.5};
  threshold_curve_vs_p1(deltas, {0, 10, 101}, Spacing::Linear,
                        [&](const ThresholdPoint& p) { points.push_back(p); });
  REQUIRE(points.size() == 3 * 101);

  for (const auto& point : points) {
    CHECK(point.a2_threshold == delta_threshold_a(point.p1, point.delta));
    if (point.p1 == 0.0) {
      CHECK(point.a2_threshold == 1.0);
    }
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].delta == points[i - 1].delta) {
      CHECK(points[i].a2_threshold > points[i - 1].a2_threshold);
    }
  }
  // Larger delta admits smaller gains: compare curves pointwise.
  for (int i = 0; i < 101; ++i) {
    if (points[i].p1 > 0.0) {
      CHECK(points[101 + i].a2_threshold < points[i].a2_threshold);
      CHECK(points[202 + i].a2_threshold < points[101 + i].a2_threshold);
    }
  }
}
