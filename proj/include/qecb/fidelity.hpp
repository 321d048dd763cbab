#pragma once

#include <string>
#include <vector>

#include "qecb/channel.hpp"

namespace qecb {

/// Channel expansion coefficients in an orthonormal operator basis with
/// B_0 = I/sqrt(d). basis_id is "pauli" (Hermitian Pauli strings, d = 2^n)
/// or "weyl" (shift/clock operators, any d).
struct ChiMatrix {
  int d = 0;
  std::string basis_id;
  CMat mat;
};

/// Per-Kraus polar data Q_i = q_i (cos(phi_i) B_0 + sin(phi_i) sum_k v_ik B_k)
/// after the phase gauge making <B_0, Q_i> real nonnegative.
struct KrausAngleDecomposition {
  std::vector<double> q;
  std::vector<double> phi;
  std::vector<CVec> v;  // length d^2-1 each, unit norm (zero when phi == 0)
};

double state_fidelity(const CMat& rho, const CMat& sigma);
double trace_distance(const CMat& rho, const CMat& sigma);

/// F_e of a square channel; computed from the Choi overlap and cross-checked
/// against the Kraus-trace form.
double entanglement_fidelity(const QuantumChannel& ch);
double average_fidelity(const QuantumChannel& ch);

/// arccos(sqrt(F_e)), in [0, pi/2].
double error_angle(const QuantumChannel& ch);
double error_angle_of_fe(double fe);

/// Orthonormal operator basis for dimension d, B_0 = I/sqrt(d).
/// Pauli strings when d is a power of two, Weyl operators otherwise.
std::vector<CMat> operator_basis(int d);
std::vector<CMat> pauli_string_basis(int n_qubits);
std::vector<CMat> weyl_basis(int d);

ChiMatrix chi_matrix(const QuantumChannel& ch);
double chi00(const QuantumChannel& ch);

KrausAngleDecomposition kraus_angle_decomposition(const QuantumChannel& ch);

/// Rebuild Kraus operator i of the decomposition; used by consistency tests.
CMat reconstruct_kraus(const KrausAngleDecomposition& dec, int i, int d);

}  // namespace qecb
