// Covariance-level verification engine for the genie-aided bounds.
//
// Builds the joint Gaussian law of (X1, X2, Z1, W, Y1, S1), where W is the
// genie noise correlated with Z1 and S1 is the side information handed to
// receiver 1, then evaluates conditional mutual informations from covariance
// determinants. This gives an independent numerical route to the closed-form
// gap expressions in bounds.hpp.

#pragma once

#include <Eigen/Core>

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "xcsum/bounds.hpp"

namespace xcsum {

/// Which side-information construction the genie uses. The BoundA genie
/// hands receiver 1 the cross input, S1 = X2 + eta*W; the BoundB genie hands
/// it the far receiver's view of the direct input, S1 = b*X1 + eta*W.
enum class GenieFlavor { BoundA, BoundB };

std::string_view to_string(GenieFlavor flavor);

/// Genie parameters. The side information is admissible (decodable from the
/// far receiver's signal) only for eta^2 <= 1; configs violating that are
/// constructible but flagged.
struct GenieConfig {
  double rho = 0.0;  ///< correlation between genie noise W and Z1
  double eta = 0.0;  ///< scale of W inside S1
  GenieFlavor flavor = GenieFlavor::BoundA;

  bool admissible() const { return eta * eta <= 1.0; }
  double eta_rho() const { return eta * rho; }
};

/// The jointly Gaussian variables tracked by the oracle.
enum class Var : int { X1 = 0, X2 = 1, Z1 = 2, W = 3, Y1 = 4, S1 = 5 };
inline constexpr int kVarCount = 6;

std::string_view to_string(Var v);
std::optional<Var> parse_var(std::string_view name);

/// Joint covariance of the six variables, zero mean. Constructed via
/// build_system; construction checks symmetry and positive semidefiniteness
/// (minimum eigenvalue >= -1e-10).
class GaussianSystem {
 public:
  explicit GaussianSystem(const Eigen::Matrix<double, 6, 6>& covariance);

  const Eigen::Matrix<double, 6, 6>& matrix() const { return cov_; }
  double covariance(Var i, Var j) const {
    return cov_(static_cast<int>(i), static_cast<int>(j));
  }
  double variance(Var v) const { return covariance(v, v); }
  double min_eigenvalue() const;

 private:
  Eigen::Matrix<double, 6, 6> cov_;
};

/// Assembles the joint covariance for the channel plus genie, taking the
/// nonnegative roots a = sqrt(a2), b = sqrt(b2). Rejects |rho| > 1.
GaussianSystem build_system(const ChannelParams& params,
                            const GenieConfig& genie);

/// Conditional mutual information I(A; B | C) in bits, from the determinant
/// identity for Gaussian vectors. A, B, C must be disjoint. Variables with
/// (near-)zero variance are constants and are dropped from the determinant
/// blocks; if A or B becomes empty the result is 0 by convention. A singular
/// required submatrix raises std::runtime_error naming the degenerate subset.
double conditional_mi(const GaussianSystem& system, std::span<const Var> a,
                      std::span<const Var> b, std::span<const Var> c);

double conditional_mi(const GaussianSystem& system,
                      std::initializer_list<Var> a,
                      std::initializer_list<Var> b,
                      std::initializer_list<Var> c);

/// Gap-minimizing genie for the flavor: the smallest admissible rho^2, which
/// forces eta = 1. Rejects parameters outside the flavor's validity region,
/// naming the violated condition.
GenieConfig optimal_genie(const ChannelParams& params, GenieFlavor flavor);

/// The closed-form gap as a function of rho^2:
/// (1/2) log2((1 - rho2/(P1+1)) / (1 - rho2)) for BoundA, and with
/// a^2 P2 + 1 in place of P1 + 1 for BoundB. Requires rho2 < 1.
double closed_form_gap(GenieFlavor flavor, const ChannelParams& params,
                       double rho2);

/// The conditional MI that the eta*rho condition is meant to null:
/// I(X2; S1 | Y1) for BoundA, I(X1; S1 | Y1) for BoundB. Near zero exactly when
/// the genie satisfies the flavor's eta*rho constraint.
double verify_zero_term(const ChannelParams& params, const GenieConfig& genie);

struct GapCheck {
  double oracle_bits = 0.0;       // determinant-based conditional MI
  double closed_form_bits = 0.0;  // closed-form gap at the genie's rho^2
};

/// Cross-checks the residual gap term against its closed form:
/// I(X1; S1 | Y1, X2) for BoundA, I(X2; S1 | Y1, X1) for BoundB.
/// Rejects rho^2 within 1e-12 of 1 (singular conditioning).
GapCheck verify_gap_formula(const ChannelParams& params,
                            const GenieConfig& genie);

/// True iff the closed-form gap is nondecreasing along the given ascending
/// grid of rho^2 values (each in [0, 1)).
bool gap_monotone_in_rho(const ChannelParams& params, GenieFlavor flavor,
                         std::span<const double> rho2_grid);

}  // namespace xcsum
