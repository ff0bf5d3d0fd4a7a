#include "xcsum/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace xcsum {

namespace {

constexpr double kBoundaryRelTol = 1e-12;
constexpr double kHalfLn2 = 0.5 / M_LN2;

double half_log2_ratio(double log1p_num_arg, double log1p_den_arg) {
  // (1/2) log2((1 + num) / (1 + den)) via log1p for precision near 1.
  return (std::log1p(log1p_num_arg) - std::log1p(log1p_den_arg)) * kHalfLn2;
}

BoundEvaluation not_applicable(BoundKind kind, std::string reason) {
  BoundEvaluation ev;
  ev.kind = kind;
  ev.applicable = false;
  ev.reason = std::move(reason);
  return ev;
}

BoundEvaluation applicable(BoundKind kind, double mac_rate, double gap) {
  BoundEvaluation ev;
  ev.kind = kind;
  ev.applicable = true;
  ev.gap_bits = gap;
  ev.value_bits = mac_rate + gap;
  return ev;
}

double exp2m1_twice(double delta) {
  // 2^(2*delta) - 1, accurate for small delta.
  return std::expm1(2.0 * delta * M_LN2);
}

void require_positive_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be positive and finite");
  }
}

}  // namespace

void validate(const ChannelParams& p) {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(name) +
                                  " must be finite and nonnegative");
    }
  };
  check(p.a2, "a2");
  check(p.b2, "b2");
  check(p.p1, "p1");
  check(p.p2, "p2");
}

std::string_view to_string(Receiver side) {
  return side == Receiver::One ? "1" : "2";
}

std::string_view to_string(BoundTag tag) {
  switch (tag) {
    case BoundTag::A: return "A";
    case BoundTag::B: return "B";
    case BoundTag::C: return "C";
  }
  return "?";
}

std::string kind_code(const BoundKind& kind) {
  return std::string(to_string(kind.tag)) + std::string(to_string(kind.side));
}

RegionLabel classify_region(const ChannelParams& p) {
  validate(p);
  RegionLabel label;
  const bool in_r1 = p.a2 >= 1.0 && p.b2 <= 1.0;
  const bool in_r2 = p.a2 <= 1.0 && p.b2 >= 1.0;
  label.tag = in_r1 ? RegionLabel::Tag::MixedR1
                    : (in_r2 ? RegionLabel::Tag::MixedR2
                             : RegionLabel::Tag::Outside);
  label.boundary = std::fabs(p.a2 - 1.0) <= kBoundaryRelTol ||
                   std::fabs(p.b2 - 1.0) <= kBoundaryRelTol;
  return label;
}

std::string_view region_code(const RegionLabel& label) {
  switch (label.tag) {
    case RegionLabel::Tag::MixedR1: return "R1";
    case RegionLabel::Tag::MixedR2: return "R2";
    case RegionLabel::Tag::Outside: return "outside";
  }
  return "?";
}

double mac_sum_rate(const ChannelParams& p, Receiver receiver) {
  validate(p);
  if (receiver == Receiver::Two) {
    return mac_sum_rate(mirror(p), Receiver::One);
  }
  return std::log1p(p.p1 + p.a2 * p.p2) * kHalfLn2;
}

BoundEvaluation bound_a(const ChannelParams& p) {
  validate(p);
  const BoundKind kind{BoundTag::A, Receiver::One};
  if (p.b2 > 1.0) {
    return not_applicable(kind, "b2 > 1");
  }
  const double c = p.p1 + 1.0;
  const double c2 = c * c;
  if (p.a2 <= c2) {
    return not_applicable(kind, "a2 not strictly greater than (p1+1)^2");
  }
  if (p.a2 <= c2 * (1.0 + kBoundaryRelTol)) {
    return not_applicable(kind, "boundary");
  }
  const double gap = half_log2_ratio(-c / p.a2, -c2 / p.a2);
  return applicable(kind, mac_sum_rate(p, Receiver::One), gap);
}

BoundEvaluation bound_b(const ChannelParams& p) {
  validate(p);
  const BoundKind kind{BoundTag::B, Receiver::One};
  if (p.a2 < 1.0) {
    return not_applicable(kind, "a2 < 1");
  }
  const double q = p.a2 * p.p2 + 1.0;
  const double threshold = 1.0 / (q * q);
  if (p.b2 >= threshold) {
    return not_applicable(kind, "b2 >= 1/(a2*p2+1)^2");
  }
  if (p.b2 >= threshold * (1.0 - kBoundaryRelTol)) {
    return not_applicable(kind, "boundary");
  }
  const double gap = half_log2_ratio(-p.b2 * q, -p.b2 * q * q);
  return applicable(kind, mac_sum_rate(p, Receiver::One), gap);
}

BoundEvaluation bound_c(const ChannelParams& p) {
  validate(p);
  const BoundKind kind{BoundTag::C, Receiver::One};
  if (p.a2 < 1.0) {
    return not_applicable(kind, "a2 < 1");
  }
  const double gap = std::log1p(p.b2 * p.p1) * kHalfLn2;
  return applicable(kind, mac_sum_rate(p, Receiver::One), gap);
}

ChannelParams mirror(const ChannelParams& p) {
  validate(p);
  return ChannelParams{p.b2, p.a2, p.p2, p.p1};
}

std::array<BoundEvaluation, 3> evaluate_side(const ChannelParams& p,
                                             Receiver side) {
  validate(p);
  const ChannelParams& base = p;
  std::array<BoundEvaluation, 3> evals;
  if (side == Receiver::One) {
    evals = {bound_a(base), bound_b(base), bound_c(base)};
  } else {
    const ChannelParams m = mirror(base);
    evals = {bound_a(m), bound_b(m), bound_c(m)};
    for (auto& ev : evals) {
      ev.kind.side = Receiver::Two;
    }
  }
  return evals;
}

std::optional<std::pair<BoundKind, double>> best_bound(const ChannelParams& p,
                                                       Receiver side) {
  std::optional<std::pair<BoundKind, double>> best;
  for (const auto& ev : evaluate_side(p, side)) {
    if (!ev.applicable) continue;
    if (!best || *ev.value_bits < best->second) {
      best = {ev.kind, *ev.value_bits};
    }
  }
  return best;
}

double delta_threshold_a(double p1, double delta) {
  if (!std::isfinite(p1) || p1 < 0.0) {
    throw std::invalid_argument("p1 must be finite and nonnegative");
  }
  require_positive_delta(delta);
  const double c = p1 + 1.0;
  const double em1 = exp2m1_twice(delta);
  return c * c + c * p1 / em1;
}

double delta_threshold_b(double a2, double p2, double delta) {
  if (!std::isfinite(a2) || a2 < 1.0) {
    throw std::invalid_argument("a2 must be finite and at least 1");
  }
  if (!std::isfinite(p2) || p2 < 0.0) {
    throw std::invalid_argument("p2 must be finite and nonnegative");
  }
  require_positive_delta(delta);
  const double q = a2 * p2 + 1.0;
  const double em1 = exp2m1_twice(delta);
  return em1 / (q * (q * em1 + a2 * p2));
}

double delta_threshold_c(double p1, double delta) {
  if (!std::isfinite(p1) || p1 < 0.0) {
    throw std::invalid_argument("p1 must be finite and nonnegative");
  }
  require_positive_delta(delta);
  if (p1 == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return exp2m1_twice(delta) / p1;
}

DeltaCertificate in_r_delta(const ChannelParams& p, double delta,
                            Receiver side) {
  validate(p);
  require_positive_delta(delta);
  const ChannelParams q = side == Receiver::One ? p : mirror(p);

  DeltaCertificate cert;
  cert.delta = delta;
  if (q.b2 <= 1.0 && q.a2 > delta_threshold_a(q.p1, delta)) {
    cert.certifying_bounds.push_back({BoundTag::A, side});
  }
  if (q.a2 >= 1.0) {
    if (q.b2 < delta_threshold_b(q.a2, q.p2, delta)) {
      cert.certifying_bounds.push_back({BoundTag::B, side});
    }
    if (q.b2 < delta_threshold_c(q.p1, delta)) {
      cert.certifying_bounds.push_back({BoundTag::C, side});
    }
  }
  cert.member = !cert.certifying_bounds.empty();
  return cert;
}

DominancePredicates dominance_predicates(const ChannelParams& p) {
  validate(p);
  DominancePredicates out;
  const double c = p.p1 + 1.0;
  const double q = p.a2 * p.p2 + 1.0;

  // A < C: a2 > (p1+1)^2 + (p1+1)/b2. The threshold is infinite for b2 = 0
  // and the inequality degenerates to 0 < 0 for p1 = 0; both give false,
  // matching the direct value comparison.
  if (p.b2 > 0.0 && p.p1 > 0.0) {
    out.a_below_c = p.a2 > c * c + c / p.b2;
  } else {
    out.a_below_c = false;
    out.a_below_c_vacuous = p.b2 == 0.0;
  }

  // B < C and B < A, cross-multiplied so that the p1 = 0 and b2 = 0 limits
  // stay consistent with direct value comparison.
  out.b_below_c = p.b2 > 0.0 && p.b2 * p.p1 * q * q < p.p1 + q - q * q;
  out.b_below_a =
      p.b2 * q * (c * p.p1 + p.p2 * p.a2 * (p.a2 - c)) < c * p.p1;
  return out;
}

}  // namespace xcsum
