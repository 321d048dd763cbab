#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qecb/ad41.hpp"
#include "qecb/channel.hpp"
#include "qecb/diamond.hpp"
#include "qecb/fidelity.hpp"
#include "qecb/io.hpp"
#include "qecb/multicycle.hpp"
#include "qecb/recovery.hpp"
#include "qecb/spectator.hpp"
#include "qecb/twirl.hpp"
#include "qecb/verify.hpp"

namespace py = pybind11;
using namespace qecb;

PYBIND11_MODULE(_qecbounds, m) {
  m.doc() = "Channel-level bounds on real-time quantum memories";

  py::class_<QuantumChannel>(m, "Channel")
      .def(py::init([](int d_in, int d_out, const std::vector<CMat>& kraus) {
             return QuantumChannel{d_in, d_out, kraus};
           }),
           py::arg("d_in"), py::arg("d_out"), py::arg("kraus"))
      .def_readonly("d_in", &QuantumChannel::d_in)
      .def_readonly("d_out", &QuantumChannel::d_out)
      .def_readonly("kraus", &QuantumChannel::kraus)
      .def("__repr__", [](const QuantumChannel& ch) {
        return "Channel(d_in=" + std::to_string(ch.d_in) +
               ", d_out=" + std::to_string(ch.d_out) +
               ", n_kraus=" + std::to_string(ch.kraus.size()) + ")";
      });

  py::class_<CptpReport>(m, "CptpReport")
      .def_readonly("tp_residual", &CptpReport::tp_residual)
      .def_readonly("psd_min_eigenvalue", &CptpReport::psd_min_eigenvalue)
      .def_readonly("pass_", &CptpReport::pass);

  m.def("identity_channel", &identity_channel, py::arg("d"));
  m.def("unitary_channel", &unitary_channel, py::arg("u"));
  m.def("depolarizing", &depolarizing, py::arg("d"), py::arg("p"));
  m.def("amplitude_damping", &amplitude_damping, py::arg("theta"));
  m.def("random_channel", &random_channel, py::arg("d_in"), py::arg("d_out"),
        py::arg("n_kraus"), py::arg("seed"));
  m.def("apply", &apply, py::arg("channel"), py::arg("rho"));
  m.def("compose", &compose, py::arg("second"), py::arg("first"));
  m.def("tensor", &tensor, py::arg("a"), py::arg("b"));
  m.def("tensor_power", &tensor_power, py::arg("channel"), py::arg("n"));
  m.def("adjoint_channel", &adjoint_channel, py::arg("channel"));
  m.def("validate_cptp", &validate_cptp, py::arg("channel"),
        py::arg("tol") = kTolCptp);
  m.def("choi_matrix",
        [](const QuantumChannel& ch) { return kraus_to_choi(ch).mat; },
        py::arg("channel"));
  m.def("channel_from_choi",
        [](int d_in, int d_out, const CMat& mat) {
          return choi_to_kraus({d_in, d_out, mat});
        },
        py::arg("d_in"), py::arg("d_out"), py::arg("choi"));
  m.def("choi_distance", &choi_distance, py::arg("a"), py::arg("b"));

  m.def("state_fidelity", &state_fidelity, py::arg("rho"), py::arg("sigma"));
  m.def("trace_distance", &trace_distance, py::arg("rho"), py::arg("sigma"));
  m.def("entanglement_fidelity", &entanglement_fidelity, py::arg("channel"));
  m.def("average_fidelity", &average_fidelity, py::arg("channel"));
  m.def("error_angle", &error_angle, py::arg("channel"));
  m.def("error_angle_of_fe", &error_angle_of_fe, py::arg("fe"));
  m.def("chi00", &chi00, py::arg("channel"));

  m.def("pauli_twirl",
        [](const QuantumChannel& ch, int n_qubits) {
          return twirl_discrete(ch, pauli_ensemble(n_qubits));
        },
        py::arg("channel"), py::arg("n_qubits") = 1);
  m.def("clifford_twirl_1q",
        [](const QuantumChannel& ch) {
          return twirl_discrete(ch, clifford_ensemble_1q());
        },
        py::arg("channel"));
  m.def("haar_twirl_analytic", &haar_twirl_analytic, py::arg("channel"));

  m.def("diamond_lower_estimate",
        [](const QuantumChannel& q, const QuantumChannel& s, int starts,
           std::uint64_t seed) {
          DiamondOptions opts;
          opts.starts = starts;
          opts.seed = seed;
          auto est = diamond_lower_estimate(q, s, opts);
          return py::make_tuple(est.value, est.achieving_state, est.converged);
        },
        py::arg("q"), py::arg("s"), py::arg("starts") = 32, py::arg("seed") = 1);
  m.def("diamond_upper_choi", &diamond_upper_choi, py::arg("q"), py::arg("s"));
  m.def("diamond_depolarizing_exact", &diamond_depolarizing_exact,
        py::arg("p1"), py::arg("p2"), py::arg("d"));
  m.def("kappa", &kappa, py::arg("d"));
  m.def("fe_lower_bound", &fe_lower_bound, py::arg("q"), py::arg("s"));

  m.def("optimize_recovery",
        [](const QuantumChannel& noise, int starts, std::uint64_t seed) {
          RecoveryOptions opts;
          opts.starts = starts;
          opts.seed = seed;
          auto sol = optimize_recovery(noise, opts);
          return py::make_tuple(sol.recovery, sol.fe_achieved, sol.converged);
        },
        py::arg("noise"), py::arg("starts") = 8, py::arg("seed") = 1);

  m.def("encode_isometry", &encode_isometry);
  m.def("logical_noise", &logical_noise, py::arg("theta"));
  m.def("fe_family",
        [](double alpha_abs, double psi, double phi, double theta) {
          return fe_family({alpha_abs, psi, phi}, theta);
        },
        py::arg("alpha_abs"), py::arg("psi"), py::arg("phi"), py::arg("theta"));
  m.def("alpha_opt", &alpha_opt, py::arg("theta"));
  m.def("fe_optimal", &fe_optimal, py::arg("theta"));
  m.def("fe_best_guess", &fe_best_guess, py::arg("theta"), py::arg("theta_hat"));
  m.def("h_func", &h_func, py::arg("theta"));
  m.def("series_reference", &series_reference, py::arg("name"));

  m.def("f_gamma", &f_gamma, py::arg("theta"), py::arg("gamma"));
  m.def("qfi_spectator",
        [](double theta, double gamma, int m_qubits) {
          return qfi_spectator(theta, {gamma, m_qubits});
        },
        py::arg("theta"), py::arg("gamma") = 1.0, py::arg("m_qubits") = 1);
  m.def("qcrb_variance",
        [](double theta, double gamma, int m_qubits) {
          return qcrb_variance(theta, {gamma, m_qubits});
        },
        py::arg("theta"), py::arg("gamma") = 1.0, py::arg("m_qubits") = 1);
  m.def("mean_delta_fe",
        [](double theta, double gamma, int m_qubits) {
          return mean_delta_fe(theta, {gamma, m_qubits});
        },
        py::arg("theta"), py::arg("gamma") = 1.0, py::arg("m_qubits") = 1);

  m.def("recurrence_upper", &recurrence_upper, py::arg("fe_prev"),
        py::arg("fe_n"));
  m.def("delta_shift", &delta_shift, py::arg("fe"), py::arg("delta_fe"));
  m.def("spectator_multicycle_term",
        [](double theta_n, double fe_prev, double gamma, int m_qubits) {
          return spectator_multicycle_term(theta_n, fe_prev, {gamma, m_qubits});
        },
        py::arg("theta_n"), py::arg("fe_prev"), py::arg("gamma") = 1.0,
        py::arg("m_qubits") = 1);

  m.def("channel_to_json", &channel_to_json, py::arg("channel"));
  m.def("channel_from_json", &channel_from_json, py::arg("text"));

  m.def("run_verify",
        [](const std::string& filter, std::uint64_t seed) {
          py::list out;
          for (const auto& r : run_verify(filter, seed))
            out.append(py::make_tuple(r.name, r.lhs, r.rhs, r.margin, r.pass));
          return out;
        },
        py::arg("filter") = "", py::arg("seed") = 1);
}
