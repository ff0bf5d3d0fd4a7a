#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "xcsum/bounds.hpp"
#include "xcsum/csv.hpp"
#include "xcsum/genie.hpp"
#include "xcsum/sweep.hpp"
#include "xcsum/verify.hpp"

namespace py = pybind11;

namespace {

std::vector<xcsum::Var> to_vars(const std::vector<std::string>& names) {
  std::vector<xcsum::Var> vars;
  vars.reserve(names.size());
  for (const auto& name : names) {
    const auto var = xcsum::parse_var(name);
    if (!var) {
      throw std::invalid_argument("unknown variable '" + name +
                                  "' (expected X1, X2, Z1, W, Y1 or S1)");
    }
    vars.push_back(*var);
  }
  return vars;
}

xcsum::SweepConfig make_config(double p1, double p2, double a2_min,
                               double a2_max, int a2_count, double b2_min,
                               double b2_max, int b2_count,
                               std::optional<double> delta, bool log_spacing) {
  xcsum::SweepConfig config;
  config.a2_range = {a2_min, a2_max, a2_count};
  config.b2_range = {b2_min, b2_max, b2_count};
  config.p1 = p1;
  config.p2 = p2;
  config.delta = delta;
  config.spacing = log_spacing ? xcsum::Spacing::Log : xcsum::Spacing::Linear;
  return config;
}

}  // namespace

PYBIND11_MODULE(_xcsum, m) {
  using namespace xcsum;

  m.doc() = "Sum-capacity bounds for the two-user Gaussian X channel";

  py::enum_<Receiver>(m, "Receiver")
      .value("ONE", Receiver::One)
      .value("TWO", Receiver::Two);

  py::enum_<BoundTag>(m, "BoundTag")
      .value("A", BoundTag::A)
      .value("B", BoundTag::B)
      .value("C", BoundTag::C);

  py::class_<BoundKind>(m, "BoundKind")
      .def(py::init<BoundTag, Receiver>(), py::arg("tag"), py::arg("side"))
      .def_readwrite("tag", &BoundKind::tag)
      .def_readwrite("side", &BoundKind::side)
      .def("__eq__",
           [](const BoundKind& a, const BoundKind& b) { return a == b; })
      .def("__repr__",
           [](const BoundKind& k) { return "BoundKind(" + kind_code(k) + ")"; })
      .def("code", [](const BoundKind& k) { return kind_code(k); });

  py::class_<ChannelParams>(m, "ChannelParams")
      .def(py::init([](double a2, double b2, double p1, double p2) {
             ChannelParams p{a2, b2, p1, p2};
             validate(p);
             return p;
           }),
           py::arg("a2"), py::arg("b2"), py::arg("p1"), py::arg("p2"))
      .def_readwrite("a2", &ChannelParams::a2)
      .def_readwrite("b2", &ChannelParams::b2)
      .def_readwrite("p1", &ChannelParams::p1)
      .def_readwrite("p2", &ChannelParams::p2)
      .def("__repr__", [](const ChannelParams& p) {
        std::ostringstream out;
        out << "ChannelParams(a2=" << p.a2 << ", b2=" << p.b2 << ", p1=" << p.p1
            << ", p2=" << p.p2 << ")";
        return out.str();
      });

  py::class_<BoundEvaluation>(m, "BoundEvaluation")
      .def_readonly("kind", &BoundEvaluation::kind)
      .def_readonly("applicable", &BoundEvaluation::applicable)
      .def_readonly("reason", &BoundEvaluation::reason)
      .def_readonly("value_bits", &BoundEvaluation::value_bits)
      .def_readonly("gap_bits", &BoundEvaluation::gap_bits)
      .def("__repr__", [](const BoundEvaluation& ev) {
        std::ostringstream out;
        out << "BoundEvaluation(" << kind_code(ev.kind);
        if (ev.applicable) {
          out << ", value=" << *ev.value_bits << ", gap=" << *ev.gap_bits;
        } else {
          out << ", not applicable: " << ev.reason;
        }
        out << ")";
        return out.str();
      });

  py::enum_<RegionLabel::Tag>(m, "RegionTag")
      .value("MIXED_R1", RegionLabel::Tag::MixedR1)
      .value("MIXED_R2", RegionLabel::Tag::MixedR2)
      .value("OUTSIDE", RegionLabel::Tag::Outside);

  py::class_<RegionLabel>(m, "RegionLabel")
      .def_readonly("tag", &RegionLabel::tag)
      .def_readonly("boundary", &RegionLabel::boundary)
      .def("__repr__", [](const RegionLabel& label) {
        return "RegionLabel(" + std::string(region_code(label)) +
               (label.boundary ? ", boundary)" : ")");
      });

  py::class_<DeltaCertificate>(m, "DeltaCertificate")
      .def_readonly("delta", &DeltaCertificate::delta)
      .def_readonly("member", &DeltaCertificate::member)
      .def_readonly("certifying_bounds", &DeltaCertificate::certifying_bounds);

  py::class_<DominancePredicates>(m, "DominancePredicates")
      .def_readonly("a_below_c", &DominancePredicates::a_below_c)
      .def_readonly("b_below_c", &DominancePredicates::b_below_c)
      .def_readonly("b_below_a", &DominancePredicates::b_below_a)
      .def_readonly("a_below_c_vacuous",
                    &DominancePredicates::a_below_c_vacuous);

  m.def("mac_sum_rate", &mac_sum_rate, py::arg("params"), py::arg("receiver"));
  m.def("bound_a", &bound_a, py::arg("params"));
  m.def("bound_b", &bound_b, py::arg("params"));
  m.def("bound_c", &bound_c, py::arg("params"));
  m.def("mirror", &mirror, py::arg("params"));
  m.def("evaluate_side", &evaluate_side, py::arg("params"), py::arg("side"));
  m.def("best_bound", &best_bound, py::arg("params"), py::arg("side"));
  m.def("classify_region", &classify_region, py::arg("params"));
  m.def("delta_threshold_a", &delta_threshold_a, py::arg("p1"),
        py::arg("delta"));
  m.def("delta_threshold_b", &delta_threshold_b, py::arg("a2"), py::arg("p2"),
        py::arg("delta"));
  m.def("delta_threshold_c", &delta_threshold_c, py::arg("p1"),
        py::arg("delta"));
  m.def("in_r_delta", &in_r_delta, py::arg("params"), py::arg("delta"),
        py::arg("side"));
  m.def("dominance_predicates", &dominance_predicates, py::arg("params"));

  py::enum_<GenieFlavor>(m, "GenieFlavor")
      .value("BOUND_A", GenieFlavor::BoundA)
      .value("BOUND_B", GenieFlavor::BoundB);

  py::class_<GenieConfig>(m, "GenieConfig")
      .def(py::init([](double rho, double eta, GenieFlavor flavor) {
             return GenieConfig{rho, eta, flavor};
           }),
           py::arg("rho"), py::arg("eta"), py::arg("flavor"))
      .def_readwrite("rho", &GenieConfig::rho)
      .def_readwrite("eta", &GenieConfig::eta)
      .def_readwrite("flavor", &GenieConfig::flavor)
      .def("admissible", &GenieConfig::admissible)
      .def("eta_rho", &GenieConfig::eta_rho);

  py::class_<GaussianSystem>(m, "GaussianSystem")
      .def("covariance",
           [](const GaussianSystem& system, const std::string& i,
              const std::string& j) {
             const auto vi = parse_var(i);
             const auto vj = parse_var(j);
             if (!vi || !vj) throw std::invalid_argument("unknown variable");
             return system.covariance(*vi, *vj);
           },
           py::arg("i"), py::arg("j"))
      .def("matrix",
           [](const GaussianSystem& system) {
             std::vector<std::vector<double>> rows(6,
                                                   std::vector<double>(6, 0.0));
             for (int i = 0; i < 6; ++i) {
               for (int j = 0; j < 6; ++j) {
                 rows[i][j] = system.matrix()(i, j);
               }
             }
             return rows;
           })
      .def("min_eigenvalue", &GaussianSystem::min_eigenvalue)
      .def_property_readonly_static("names", [](py::object) {
        std::vector<std::string> names;
        for (int i = 0; i < kVarCount; ++i) {
          names.emplace_back(to_string(static_cast<Var>(i)));
        }
        return names;
      });

  m.def("build_system", &build_system, py::arg("params"), py::arg("genie"));
  m.def("conditional_mi",
        [](const GaussianSystem& system, const std::vector<std::string>& a,
           const std::vector<std::string>& b,
           const std::vector<std::string>& c) {
          const auto va = to_vars(a);
          const auto vb = to_vars(b);
          const auto vc = to_vars(c);
          return conditional_mi(system, va, vb, vc);
        },
        py::arg("system"), py::arg("a"), py::arg("b"), py::arg("c"),
        "Conditional mutual information I(A; B | C) in bits; arguments are "
        "lists of variable names.");
  m.def("optimal_genie", &optimal_genie, py::arg("params"), py::arg("flavor"));
  m.def("closed_form_gap", &closed_form_gap, py::arg("flavor"),
        py::arg("params"), py::arg("rho2"));
  m.def("verify_zero_term", &verify_zero_term, py::arg("params"),
        py::arg("genie"));
  m.def("verify_gap_formula",
        [](const ChannelParams& params, const GenieConfig& genie) {
          const GapCheck check = verify_gap_formula(params, genie);
          return py::make_tuple(check.oracle_bits, check.closed_form_bits);
        },
        py::arg("params"), py::arg("genie"),
        "Returns (oracle_bits, closed_form_bits).");
  m.def("gap_monotone_in_rho",
        [](const ChannelParams& params, GenieFlavor flavor,
           const std::vector<double>& rho2_grid) {
          return gap_monotone_in_rho(params, flavor, rho2_grid);
        },
        py::arg("params"), py::arg("flavor"), py::arg("rho2_grid"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("a2", &SweepRow::a2)
      .def_readonly("b2", &SweepRow::b2)
      .def_readonly("region", &SweepRow::region)
      .def_readonly("bounds", &SweepRow::bounds)
      .def_readonly("best_kind", &SweepRow::best_kind)
      .def_readonly("best_value_bits", &SweepRow::best_value_bits)
      .def_readonly("r_delta_member", &SweepRow::r_delta_member)
      .def_readonly("certifying_bounds", &SweepRow::certifying_bounds);

  m.def("evaluate_grid_point", &evaluate_grid_point, py::arg("a2"),
        py::arg("b2"), py::arg("p1"), py::arg("p2"),
        py::arg("delta") = std::nullopt);

  m.def("sweep_plane",
        [](double p1, double p2, double a2_min, double a2_max, int a2_count,
           double b2_min, double b2_max, int b2_count,
           std::optional<double> delta, bool log_spacing) {
          std::vector<SweepRow> rows;
          sweep_plane(make_config(p1, p2, a2_min, a2_max, a2_count, b2_min,
                                  b2_max, b2_count, delta, log_spacing),
                      [&](const SweepRow& row) { rows.push_back(row); });
          return rows;
        },
        py::arg("p1"), py::arg("p2"), py::arg("a2_min"), py::arg("a2_max"),
        py::arg("a2_count"), py::arg("b2_min"), py::arg("b2_max"),
        py::arg("b2_count"), py::arg("delta") = std::nullopt,
        py::arg("log_spacing") = false);

  m.def("sweep_plane_csv",
        [](double p1, double p2, double a2_min, double a2_max, int a2_count,
           double b2_min, double b2_max, int b2_count,
           std::optional<double> delta, bool log_spacing) {
          std::ostringstream out;
          csv::write_sweep(out, make_config(p1, p2, a2_min, a2_max, a2_count,
                                            b2_min, b2_max, b2_count, delta,
                                            log_spacing));
          return out.str();
        },
        py::arg("p1"), py::arg("p2"), py::arg("a2_min"), py::arg("a2_max"),
        py::arg("a2_count"), py::arg("b2_min"), py::arg("b2_max"),
        py::arg("b2_count"), py::arg("delta") = std::nullopt,
        py::arg("log_spacing") = false);

  m.def("curve_vs_a2",
        [](double p1, double p2, double b2, double a2_min, double a2_max,
           int a2_count, bool log_spacing) {
          std::vector<py::tuple> points;
          sweep_curve_vs_a2(
              p1, p2, b2, SweepRange{a2_min, a2_max, a2_count},
              log_spacing ? Spacing::Log : Spacing::Linear,
              [&](const CurvePoint& point) {
                points.push_back(py::make_tuple(point.a2, point.r_mac1,
                                                point.value_a, point.value_c,
                                                point.gap_a, point.gap_c));
              });
          return points;
        },
        py::arg("p1"), py::arg("p2"), py::arg("b2"), py::arg("a2_min"),
        py::arg("a2_max"), py::arg("a2_count"), py::arg("log_spacing") = false,
        "Rows of (a2, r_mac1, value_a, value_c, gap_a, gap_c).");

  m.def("threshold_curve_vs_p1",
        [](const std::vector<double>& deltas, double p1_min, double p1_max,
           int p1_count, bool log_spacing) {
          std::vector<py::tuple> points;
          threshold_curve_vs_p1(
              deltas, SweepRange{p1_min, p1_max, p1_count},
              log_spacing ? Spacing::Log : Spacing::Linear,
              [&](const ThresholdPoint& point) {
                points.push_back(py::make_tuple(point.p1, point.delta,
                                                point.a2_threshold));
              });
          return points;
        },
        py::arg("deltas"), py::arg("p1_min"), py::arg("p1_max"),
        py::arg("p1_count"), py::arg("log_spacing") = false,
        "Rows of (p1, delta, a2_threshold).");

  py::class_<VerifyCheck>(m, "VerifyCheck")
      .def_readonly("name", &VerifyCheck::name)
      .def_readonly("residual", &VerifyCheck::residual)
      .def_readonly("threshold", &VerifyCheck::threshold)
      .def_readonly("pass_", &VerifyCheck::pass);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("checks", &VerifyReport::checks)
      .def_readonly("pass_", &VerifyReport::pass)
      .def_readonly("min_gap_bits", &VerifyReport::min_gap_bits)
      .def_readonly("first_failure", &VerifyReport::first_failure);

  m.def("run_verification",
        [](int trials, std::uint64_t seed, double tolerance,
           double perturb_eta_rho) {
          VerifyOptions options;
          options.trials = trials;
          options.seed = seed;
          options.tolerance = tolerance;
          options.perturb_eta_rho = perturb_eta_rho;
          return run_verification(options);
        },
        py::arg("trials") = 1000, py::arg("seed") = 7,
        py::arg("tolerance") = 1e-9, py::arg("perturb_eta_rho") = 0.0);

  m.attr("__version__") = "0.1.0";
}
