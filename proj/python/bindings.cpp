#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqs/bec.hpp"
#include "pqs/bound.hpp"
#include "pqs/entanglement.hpp"
#include "pqs/interferometer.hpp"
#include "pqs/spin.hpp"

namespace py = pybind11;
using namespace pqs;

namespace {

SpinQuantumNumber as_spin(double j) { return SpinQuantumNumber::from_j(j); }

}  // namespace

PYBIND11_MODULE(planarsq, m) {
    m.doc() = "Planar spin squeezing toolkit: the planar variance bound C_J, the "
              "squeezed states attaining it, double-well BEC ground states, "
              "interferometric phase noise and collective-spin entanglement witnesses.";

    py::register_exception<NonConvergenceError>(m, "NonConvergenceError");
    py::register_exception<DegenerateGroundError>(m, "DegenerateGroundError");
    py::register_exception<InsensitivePointError>(m, "InsensitivePointError");
    py::register_exception<CovarianceAssumptionError>(m, "CovarianceAssumptionError");
    py::register_exception<DimensionTooLargeError>(m, "DimensionTooLargeError");

    py::class_<SpinQuantumNumber>(m, "SpinQuantumNumber")
        .def(py::init(&SpinQuantumNumber::from_j), py::arg("j"))
        .def_static("from_two_j", &SpinQuantumNumber::from_two_j)
        .def_readonly("two_j", &SpinQuantumNumber::two_j)
        .def_property_readonly("j", &SpinQuantumNumber::j)
        .def_property_readonly("dimension", &SpinQuantumNumber::dimension)
        .def("casimir", &SpinQuantumNumber::casimir)
        .def("__repr__", [](const SpinQuantumNumber& s) {
            return "SpinQuantumNumber(j=" + std::to_string(s.j()) + ")";
        });

    py::class_<SpinState>(m, "SpinState")
        .def(py::init([](double j, const Eigen::VectorXcd& amp) {
                 return SpinState(as_spin(j), amp);
             }),
             py::arg("j"), py::arg("amplitudes"))
        .def_static(
            "basis_state",
            [](double j, double mval) { return SpinState::basis_state(as_spin(j), mval); },
            py::arg("j"), py::arg("m"))
        .def_property_readonly("j", [](const SpinState& s) { return s.j().j(); })
        .def_property_readonly("two_j", [](const SpinState& s) { return s.j().two_j; })
        .def_property_readonly("amplitudes",
                               [](const SpinState& s) { return s.amplitudes(); });

    py::class_<SpinMoments>(m, "SpinMoments")
        .def_readonly("mean", &SpinMoments::mean)
        .def_readonly("second", &SpinMoments::second)
        .def_readonly("variances", &SpinMoments::variances)
        .def_readonly("planar_sum", &SpinMoments::planar_sum)
        .def("covariance", &SpinMoments::covariance);

    py::class_<SpinOperatorSet>(m, "SpinOperatorSet")
        .def_readonly("jz_diagonal", &SpinOperatorSet::jz_diagonal)
        .def_readonly("ladder_superdiagonal", &SpinOperatorSet::ladder_superdiagonal)
        .def("jx", &SpinOperatorSet::jx)
        .def("jy", &SpinOperatorSet::jy)
        .def("jz", &SpinOperatorSet::jz);

    m.def("build_operator_set", [](double j) { return build_operator_set(as_spin(j)); },
          py::arg("j"));
    m.def("moments", &moments, py::arg("state"));
    m.def("rotate_about_z", &rotate_about_z, py::arg("state"), py::arg("angle"));

    py::class_<BoundResult>(m, "BoundResult")
        .def_property_readonly("j", [](const BoundResult& r) { return r.j.j(); })
        .def_readonly("c_exact", &BoundResult::c_exact)
        .def_property_readonly(
            "c_direct",
            [](const BoundResult& r) { return r.c_direct ? py::cast(*r.c_direct) : py::none(); })
        .def_readonly("c_asymptotic", &BoundResult::c_asymptotic)
        .def_readonly("lambda_star", &BoundResult::lambda_star)
        .def_readonly("optimal_state", &BoundResult::optimal_state)
        .def_readonly("optimal_moments", &BoundResult::optimal_moments);

    m.def("cj_exact", [](double j, double tol) { return cj_exact(as_spin(j), tol); },
          py::arg("j"), py::arg("tol") = 1e-10);
    m.def("cj_direct",
          [](double j, int restarts, std::uint64_t seed) {
              return cj_direct(as_spin(j), restarts, seed);
          },
          py::arg("j"), py::arg("restarts") = 8, py::arg("seed") = 20120613u);
    m.def("cj_asymptotic", &cj_asymptotic, py::arg("j"));
    m.def("solve_bound",
          [](double j, double tol, int restarts, std::uint64_t seed) {
              return solve_bound(as_spin(j), tol, restarts, seed);
          },
          py::arg("j"), py::arg("tol") = 1e-10, py::arg("restarts") = 8,
          py::arg("seed") = 20120613u);
    m.def("variational_gaussian_state",
          [](double j) { return variational_gaussian_state(as_spin(j)); }, py::arg("j"));
    m.def("gaussian_sigma", &gaussian_sigma, py::arg("j"));

    py::class_<AsymptoticMoments>(m, "AsymptoticMoments")
        .def_readonly("mean_x", &AsymptoticMoments::mean_x)
        .def_readonly("var_x", &AsymptoticMoments::var_x)
        .def_readonly("var_y", &AsymptoticMoments::var_y)
        .def_readonly("var_z", &AsymptoticMoments::var_z);
    m.def("asymptotic_moments", &asymptotic_moments, py::arg("j"));

    // --- double-well condensate ---
    py::class_<BecScanPoint>(m, "BecScanPoint")
        .def_readonly("ratio", &BecScanPoint::ratio)
        .def_readonly("var_x", &BecScanPoint::var_x)
        .def_readonly("var_y", &BecScanPoint::var_y)
        .def_readonly("var_z", &BecScanPoint::var_z)
        .def_readonly("planar_sum", &BecScanPoint::planar_sum)
        .def_readonly("mean_x", &BecScanPoint::mean_x)
        .def_readonly("degenerate", &BecScanPoint::degenerate);

    m.def("bec_hamiltonian",
          [](int n_atoms, double g, double kappa) {
              const auto h = build_hamiltonian(BecParams{n_atoms, g, kappa});
              return py::make_tuple(h.diag, h.offdiag);
          },
          py::arg("n_atoms"), py::arg("g"), py::arg("kappa"),
          "Tridiagonal (diagonal, off-diagonal) of 2 kappa J_X + g J_Z^2");
    m.def("bec_ground_state",
          [](int n_atoms, double g, double kappa) {
              return ground_state(BecParams{n_atoms, g, kappa});
          },
          py::arg("n_atoms"), py::arg("g"), py::arg("kappa"));
    m.def("variance_scan", &variance_scan, py::arg("n_atoms"), py::arg("ratio_min"),
          py::arg("ratio_max"), py::arg("steps"), py::arg("threads") = 1);
    m.def("critical_coupling",
          [](int n_atoms, double tol) {
              const auto c = critical_coupling(n_atoms, tol);
              return py::make_tuple(c.ratio, c.planar_sum);
          },
          py::arg("n_atoms"), py::arg("tol") = 1e-8);

    // --- interferometer ---
    py::class_<OutputDistribution>(m, "OutputDistribution")
        .def_readonly("outcomes", &OutputDistribution::outcomes)
        .def_readonly("probabilities", &OutputDistribution::probabilities)
        .def("mean", &OutputDistribution::mean)
        .def("variance", &OutputDistribution::variance);

    m.def("phase_uncertainty", &phase_uncertainty, py::arg("moments"), py::arg("alpha"));
    m.def("noise_bound", &noise_bound, py::arg("moments"));
    m.def("output_distribution",
          [](const SpinState& state, double phi, double theta) {
              return output_distribution(state, PhaseSetting{phi, theta});
          },
          py::arg("state"), py::arg("phi"), py::arg("theta") = 0.0);

    py::class_<ScalingFit>(m, "ScalingFit")
        .def_readonly("slope", &ScalingFit::slope)
        .def_readonly("intercept", &ScalingFit::intercept)
        .def_readonly("j_values", &ScalingFit::j_values)
        .def_readonly("delta_phi", &ScalingFit::delta_phi);
    m.def("scaling_study",
          [](const std::vector<double>& js, const std::string& family) {
              const auto probe = family == "coherent" ? ProbeFamily::Coherent
                                                      : ProbeFamily::OptimalPlanar;
              return scaling_study(js, probe);
          },
          py::arg("j_values"), py::arg("family") = "optimal");
    m.def("asymptotic_phase_floor", &asymptotic_phase_floor, py::arg("j"));

    // --- entanglement ---
    py::class_<SignConfig>(m, "SignConfig")
        .def(py::init([](std::vector<int> x, std::vector<int> y) {
                 SignConfig s;
                 s.x = std::move(x);
                 s.y = std::move(y);
                 return s;
             }),
             py::arg("x"), py::arg("y"))
        .def_static("all_plus", &SignConfig::all_plus)
        .def_readonly("x", &SignConfig::x)
        .def_readonly("y", &SignConfig::y);

    py::class_<MultiSiteState>(m, "MultiSiteState")
        .def_static(
            "pure",
            [](double j, int n_sites, const Eigen::VectorXcd& amp) {
                return MultiSiteState::pure(as_spin(j), n_sites, amp);
            },
            py::arg("j"), py::arg("n_sites"), py::arg("amplitudes"))
        .def_static(
            "density",
            [](double j, int n_sites, const Eigen::MatrixXcd& rho) {
                return MultiSiteState::density(as_spin(j), n_sites, rho);
            },
            py::arg("j"), py::arg("n_sites"), py::arg("rho"))
        .def_property_readonly("j", [](const MultiSiteState& s) { return s.site_spin().j(); })
        .def_property_readonly("n_sites", &MultiSiteState::n_sites)
        .def_property_readonly("dimension", &MultiSiteState::dimension)
        .def_property_readonly("is_density", &MultiSiteState::is_density);

    m.def("s2", &s2, py::arg("state"), py::arg("signs"));
    m.def("collective_mean",
          [](const MultiSiteState& s, int axis, std::optional<std::vector<int>> signs) {
              return signs ? collective_mean(s, axis, *signs) : collective_mean(s, axis);
          },
          py::arg("state"), py::arg("axis"), py::arg("signs") = py::none());
    m.def("collective_variance",
          [](const MultiSiteState& s, int axis, std::optional<std::vector<int>> signs) {
              return signs ? collective_variance(s, axis, *signs)
                           : collective_variance(s, axis);
          },
          py::arg("state"), py::arg("axis"), py::arg("signs") = py::none());
    m.def("maximally_entangled_state",
          [](double j, int n_sites) { return maximally_entangled_state(as_spin(j), n_sites); },
          py::arg("j"), py::arg("n_sites"));
    m.def("singlet_state", [](double j) { return singlet_state(as_spin(j)); }, py::arg("j"));
    m.def("product_state",
          [](const std::vector<SpinState>& sites) {
              return product_state(std::span<const SpinState>(sites.data(), sites.size()));
          },
          py::arg("sites"));
    m.def("werner_state",
          [](double j, int n_sites, double p_n) {
              return werner_state(WernerParams{as_spin(j), n_sites, p_n});
          },
          py::arg("j"), py::arg("n_sites"), py::arg("p_n"));
    m.def("werner_s2_closed",
          [](double j, int n_sites, double p_n) {
              return werner_s2_closed(WernerParams{as_spin(j), n_sites, p_n});
          },
          py::arg("j"), py::arg("n_sites"), py::arg("p_n"));
    m.def("noise_threshold",
          [](double j) { return noise_threshold(as_spin(j)); }, py::arg("j"));
    m.def("witness",
          [](double s2_value, int n_sites, double j) {
              return witness(s2_value, n_sites, as_spin(j)) == Verdict::Entangled
                         ? "Entangled"
                         : "NotDetected";
          },
          py::arg("s2"), py::arg("n_sites"), py::arg("j"));
}
