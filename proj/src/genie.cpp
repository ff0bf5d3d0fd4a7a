#include "xcsum/genie.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace xcsum {

namespace {

constexpr double kDegenerateVariance = 1e-30;  // variables below this are constants
constexpr double kLogSingularDet = -69.07755278982137;  // ln(1e-30)
constexpr double kPsdSlack = -1e-10;

using Mask = unsigned;

std::string subset_names(Mask mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < kVarCount; ++i) {
    if (mask & (1u << i)) {
      if (!first) out += ", ";
      out += to_string(static_cast<Var>(i));
      first = false;
    }
  }
  out += "}";
  return out;
}

Mask to_mask(std::span<const Var> vars) {
  Mask mask = 0;
  for (Var v : vars) mask |= 1u << static_cast<int>(v);
  return mask;
}

// Natural log determinant of the covariance submatrix selected by mask,
// via symmetric eigendecomposition. Empty subset has determinant 1.
//
// The submatrix is first rescaled to unit diagonal. Mutual informations are
// invariant under per-variable scaling (the scale terms cancel exactly
// across the determinant ratio), and the equilibrated eigenproblem stays
// accurate when variances differ by orders of magnitude.
double log_det(const Eigen::Matrix<double, 6, 6>& cov, Mask mask) {
  std::vector<int> idx;
  for (int i = 0; i < kVarCount; ++i) {
    if (mask & (1u << i)) idx.push_back(i);
  }
  if (idx.empty()) return 0.0;

  const int n = static_cast<int>(idx.size());
  std::vector<double> scale(idx.size());
  double scale_log_det = 0.0;
  for (int r = 0; r < n; ++r) {
    const double variance = cov(idx[r], idx[r]);
    if (!(variance > kDegenerateVariance)) {
      throw std::runtime_error("singular covariance over subset " +
                               subset_names(mask));
    }
    scale[r] = std::sqrt(variance);
    scale_log_det += std::log(variance);
  }

  Eigen::MatrixXd corr(n, n);
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      corr(r, col) = cov(idx[r], idx[col]) / (scale[r] * scale[col]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(corr,
                                                    Eigen::EigenvaluesOnly);
  const auto& lambda = es.eigenvalues();
  const double lambda_min = lambda(0);
  const double lambda_max = lambda(n - 1);
  if (lambda_min <=
      lambda_max * 8.0 * std::numeric_limits<double>::epsilon()) {
    throw std::runtime_error("singular covariance over subset " +
                             subset_names(mask));
  }
  double ld = scale_log_det;
  for (int i = 0; i < n; ++i) ld += std::log(lambda(i));
  if (ld < kLogSingularDet) {
    throw std::runtime_error("singular covariance over subset " +
                             subset_names(mask));
  }
  return ld;
}

}  // namespace

std::string_view to_string(GenieFlavor flavor) {
  return flavor == GenieFlavor::BoundA ? "A" : "B";
}

std::string_view to_string(Var v) {
  switch (v) {
    case Var::X1: return "X1";
    case Var::X2: return "X2";
    case Var::Z1: return "Z1";
    case Var::W:  return "W";
    case Var::Y1: return "Y1";
    case Var::S1: return "S1";
  }
  return "?";
}

std::optional<Var> parse_var(std::string_view name) {
  for (int i = 0; i < kVarCount; ++i) {
    if (name == to_string(static_cast<Var>(i))) return static_cast<Var>(i);
  }
  return std::nullopt;
}

GaussianSystem::GaussianSystem(const Eigen::Matrix<double, 6, 6>& covariance)
    : cov_(covariance) {
  cov_ = 0.5 * (cov_ + cov_.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(
      cov_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < kPsdSlack) {
    std::ostringstream msg;
    msg << "covariance is not positive semidefinite (min eigenvalue "
        << es.eigenvalues()(0) << ")";
    throw std::invalid_argument(msg.str());
  }
}

double GaussianSystem::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(
      cov_, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

GaussianSystem build_system(const ChannelParams& params,
                            const GenieConfig& genie) {
  validate(params);
  if (!(std::fabs(genie.rho) <= 1.0)) {
    throw std::invalid_argument("|rho| must be at most 1");
  }
  if (!std::isfinite(genie.eta)) {
    throw std::invalid_argument("eta must be finite");
  }
  const double a = std::sqrt(params.a2);
  const double b = std::sqrt(params.b2);

  // Base covariance over (X1, X2, Z1, W).
  Eigen::Matrix<double, 4, 4> base = Eigen::Matrix<double, 4, 4>::Zero();
  base(0, 0) = params.p1;
  base(1, 1) = params.p2;
  base(2, 2) = 1.0;
  base(3, 3) = 1.0;
  base(2, 3) = base(3, 2) = genie.rho;

  // Rows of the linear map from base variables to all six variables.
  Eigen::Matrix<double, 6, 4> map = Eigen::Matrix<double, 6, 4>::Zero();
  map(0, 0) = 1.0;                       // X1
  map(1, 1) = 1.0;                       // X2
  map(2, 2) = 1.0;                       // Z1
  map(3, 3) = 1.0;                       // W
  map(4, 0) = 1.0;                       // Y1 = X1 + a X2 + Z1
  map(4, 1) = a;
  map(4, 2) = 1.0;
  if (genie.flavor == GenieFlavor::BoundA) {
    map(5, 1) = 1.0;                     // S1 = X2 + eta W
  } else {
    map(5, 0) = b;                       // S1 = b X1 + eta W
  }
  map(5, 3) = genie.eta;

  return GaussianSystem((map * base * map.transpose()).eval());
}

double conditional_mi(const GaussianSystem& system, std::span<const Var> a,
                      std::span<const Var> b, std::span<const Var> c) {
  Mask ma = to_mask(a);
  Mask mb = to_mask(b);
  Mask mc = to_mask(c);
  if ((ma & mb) || (ma & mc) || (mb & mc)) {
    throw std::invalid_argument("variable sets must be disjoint");
  }

  // Zero-variance variables are constants; drop them.
  Mask live = 0;
  for (int i = 0; i < kVarCount; ++i) {
    if (system.variance(static_cast<Var>(i)) > kDegenerateVariance) {
      live |= 1u << i;
    }
  }
  ma &= live;
  mb &= live;
  mc &= live;
  if (ma == 0 || mb == 0) return 0.0;

  const auto& cov = system.matrix();
  const double nats = 0.5 * (log_det(cov, ma | mc) + log_det(cov, mb | mc) -
                             log_det(cov, mc) - log_det(cov, ma | mb | mc));
  return std::max(nats / M_LN2, 0.0);
}

double conditional_mi(const GaussianSystem& system,
                      std::initializer_list<Var> a,
                      std::initializer_list<Var> b,
                      std::initializer_list<Var> c) {
  return conditional_mi(system, std::span<const Var>(a.begin(), a.size()),
                        std::span<const Var>(b.begin(), b.size()),
                        std::span<const Var>(c.begin(), c.size()));
}

GenieConfig optimal_genie(const ChannelParams& params, GenieFlavor flavor) {
  validate(params);
  GenieConfig genie;
  genie.flavor = flavor;
  genie.eta = 1.0;
  if (flavor == GenieFlavor::BoundA) {
    const double c = params.p1 + 1.0;
    if (!(params.a2 > c * c)) {
      throw std::domain_error(
          "optimal bound-A genie requires a2 > (p1+1)^2; condition violated");
    }
    genie.rho = c / std::sqrt(params.a2);
  } else {
    const double q = params.a2 * params.p2 + 1.0;
    if (!(params.b2 * q * q < 1.0)) {
      throw std::domain_error(
          "optimal bound-B genie requires b2 < 1/(a2*p2+1)^2; condition violated");
    }
    genie.rho = std::sqrt(params.b2) * q;
  }
  return genie;
}

double closed_form_gap(GenieFlavor flavor, const ChannelParams& params,
                       double rho2) {
  validate(params);
  if (!(rho2 >= 0.0) || !(rho2 < 1.0)) {
    throw std::invalid_argument("rho2 must lie in [0, 1)");
  }
  const double denom_var = flavor == GenieFlavor::BoundA
                               ? params.p1 + 1.0
                               : params.a2 * params.p2 + 1.0;
  return (std::log1p(-rho2 / denom_var) - std::log1p(-rho2)) * (0.5 / M_LN2);
}

double verify_zero_term(const ChannelParams& params, const GenieConfig& genie) {
  const GaussianSystem system = build_system(params, genie);
  if (genie.flavor == GenieFlavor::BoundA) {
    return conditional_mi(system, {Var::X2}, {Var::S1}, {Var::Y1});
  }
  return conditional_mi(system, {Var::X1}, {Var::S1}, {Var::Y1});
}

GapCheck verify_gap_formula(const ChannelParams& params,
                            const GenieConfig& genie) {
  const double rho2 = genie.rho * genie.rho;
  if (rho2 >= 1.0 - 1e-12) {
    throw std::domain_error("rho^2 too close to 1; conditioning is singular");
  }
  const GaussianSystem system = build_system(params, genie);
  GapCheck check;
  if (genie.flavor == GenieFlavor::BoundA) {
    check.oracle_bits =
        conditional_mi(system, {Var::X1}, {Var::S1}, {Var::Y1, Var::X2});
  } else {
    check.oracle_bits =
        conditional_mi(system, {Var::X2}, {Var::S1}, {Var::Y1, Var::X1});
  }
  check.closed_form_bits = closed_form_gap(genie.flavor, params, rho2);
  return check;
}

bool gap_monotone_in_rho(const ChannelParams& params, GenieFlavor flavor,
                         std::span<const double> rho2_grid) {
  for (std::size_t i = 0; i < rho2_grid.size(); ++i) {
    if (!(rho2_grid[i] >= 0.0) || !(rho2_grid[i] < 1.0)) {
      throw std::invalid_argument("rho2 grid values must lie in [0, 1)");
    }
    if (i > 0 && rho2_grid[i] < rho2_grid[i - 1]) {
      throw std::invalid_argument("rho2 grid must be ascending");
    }
  }
  double prev = -std::numeric_limits<double>::infinity();
  for (double rho2 : rho2_grid) {
    const double gap = closed_form_gap(flavor, params, rho2);
    if (gap + 1e-15 < prev) return false;
    prev = gap;
  }
  return true;
}

}  // namespace xcsum
