// Seeded randomized cross-verification of the closed-form bounds against the
// covariance oracle: gap-formula equivalence, the eta*rho nulling condition,
// the MAC mutual-information identity, the chain-rule decomposition, PSD of
// every built system, gap nonnegativity, and the logarithmic sandwich bounds
// on the gap. Deterministic for a fixed seed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xcsum {

struct VerifyOptions {
  int trials = 1000;          ///< random draws per genie flavor
  std::uint64_t seed = 7;
  double tolerance = 1e-9;    ///< bits, for oracle and zero-term residuals
  /// Fault injection: offset in [0, 2] subtracted from eta*rho, which must
  /// make the zero-term suite fail. 0 disables it.
  double perturb_eta_rho = 0.0;
};

struct VerifyCheck {
  std::string name;
  double residual = 0.0;   // worst observed
  double threshold = 0.0;  // pass iff residual < threshold
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool pass = false;
  double min_gap_bits = 0.0;      // smallest applicable gap seen in the draws
  std::string first_failure;      // parameters of the first failing draw
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace xcsum
