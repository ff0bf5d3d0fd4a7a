// Closed-form sum-capacity machinery for the two-user Gaussian X channel in
// standard form:
//
//   Y1 = X1 + a*X2 + Z1
//   Y2 = b*X1 + X2 + Z2
//
// with unit-variance noise and per-transmitter powers P1, P2. Everything here
// works on squared cross gains (a^2, b^2) and linear noise-normalized powers.
// All rates are in bits per channel use, computed with base-2 logarithms in
// double precision.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xcsum {

/// One X-channel instance: squared cross gains and linear powers.
struct ChannelParams {
  double a2 = 0.0;  ///< squared cross gain into receiver 1
  double b2 = 0.0;  ///< squared cross gain into receiver 2
  double p1 = 0.0;  ///< power constraint of transmitter 1 (linear)
  double p2 = 0.0;  ///< power constraint of transmitter 2 (linear)
};

/// Throws std::invalid_argument if any field is negative or non-finite.
void validate(const ChannelParams& params);

/// Which receiver the multiple-access strategy targets.
enum class Receiver { One, Two };

/// The three bound families, per side.
enum class BoundTag { A, B, C };

struct BoundKind {
  BoundTag tag = BoundTag::A;
  Receiver side = Receiver::One;

  friend bool operator==(const BoundKind&, const BoundKind&) = default;
};

/// Compact code such as "A1" or "C2".
std::string kind_code(const BoundKind& kind);

std::string_view to_string(Receiver side);
std::string_view to_string(BoundTag tag);

/// Outcome of evaluating one upper bound at one channel point.
///
/// value_bits and gap_bits are present exactly when the bound's validity
/// condition holds; otherwise `reason` says why not. When present,
/// value_bits == mac_sum_rate + gap_bits as computed, and gap_bits >= 0.
struct BoundEvaluation {
  BoundKind kind;
  bool applicable = false;
  std::string reason;  // nonempty iff !applicable
  std::optional<double> value_bits;
  std::optional<double> gap_bits;
};

/// Mixed-interference classification of a point in the (a^2, b^2) plane.
///
/// R1 = {a^2 >= 1, b^2 <= 1}, R2 = {a^2 <= 1, b^2 >= 1}. A point satisfying
/// both (a^2 = b^2 = 1) is labeled MixedR1 with boundary set. `boundary` is
/// true whenever a^2 or b^2 equals 1 to within 1e-12.
struct RegionLabel {
  enum class Tag { MixedR1, MixedR2, Outside };
  Tag tag = Tag::Outside;
  bool boundary = false;
};

RegionLabel classify_region(const ChannelParams& params);
std::string_view region_code(const RegionLabel& label);

/// Membership certificate for the delta-optimality region.
struct DeltaCertificate {
  double delta = 0.0;
  bool member = false;
  std::vector<BoundKind> certifying_bounds;  // nonempty iff member
};

/// Truth values of the three bound-dominance inequalities.
///
/// Each predicate is meaningful only where both compared bounds are
/// applicable; callers gate on applicability. The comparisons are evaluated
/// in cross-multiplied form, so they agree with direct value comparison even
/// at p1 = 0 or b2 = 0 where the textbook threshold expressions divide by
/// zero. a_below_c_vacuous marks the b2 = 0 case, where the A-vs-C threshold
/// on a^2 is infinite and the predicate is false for every finite a^2.
struct DominancePredicates {
  bool a_below_c = false;
  bool b_below_c = false;
  bool b_below_a = false;
  bool a_below_c_vacuous = false;
};

/// Sum rate of the multiple-access strategy at the given receiver:
/// receiver 1 -> (1/2) log2(1 + P1 + a^2 P2), receiver 2 mirrored.
double mac_sum_rate(const ChannelParams& params, Receiver receiver);

/// Genie-aided bound A at receiver 1.
/// Valid for b^2 <= 1 and a^2 strictly above (P1+1)^2; near that strict
/// boundary (within 1e-12 relative) the bound diverges and is reported
/// not applicable with reason "boundary".
BoundEvaluation bound_a(const ChannelParams& params);

/// Genie-aided bound B at receiver 1.
/// Valid for a^2 >= 1 and b^2 strictly below 1/(a^2 P2 + 1)^2, with the same
/// 1e-12 guard below the strict threshold.
BoundEvaluation bound_b(const ChannelParams& params);

/// Z-channel bound C at receiver 1: valid for a^2 >= 1, adds
/// (1/2) log2(1 + b^2 P1) on top of the MAC sum rate.
BoundEvaluation bound_c(const ChannelParams& params);

/// Swaps the roles of the two sides: (a2, b2, p1, p2) -> (b2, a2, p2, p1).
ChannelParams mirror(const ChannelParams& params);

/// Evaluates bounds A, B, C for one side, in that order. Side Two applies
/// the receiver-1 bounds to mirror(params) and relabels, which reproduces
/// the mirrored-bound statements exactly.
std::array<BoundEvaluation, 3> evaluate_side(const ChannelParams& params,
                                             Receiver side);

/// Minimum applicable bound for a side, if any. Ties keep the earliest kind
/// in the fixed order A, B, C.
std::optional<std::pair<BoundKind, double>> best_bound(
    const ChannelParams& params, Receiver side);

/// a^2 threshold above which bound A certifies a gap below delta
/// (with b^2 <= 1). Rejects delta <= 0.
double delta_threshold_a(double p1, double delta);

/// b^2 threshold below which bound B certifies a gap below delta.
/// Requires a2 >= 1; rejects delta <= 0.
double delta_threshold_b(double a2, double p2, double delta);

/// b^2 threshold below which bound C certifies a gap below delta.
/// Returns +infinity for p1 = 0, where the gap is identically zero.
double delta_threshold_c(double p1, double delta);

/// Delta-region membership via the closed-form per-bound conditions
/// (side Two evaluates them at mirror(params)).
DeltaCertificate in_r_delta(const ChannelParams& params, double delta,
                            Receiver side);

/// Dominance inequalities A<C, B<C, B<A at receiver 1.
DominancePredicates dominance_predicates(const ChannelParams& params);

}  // namespace xcsum
