#pragma once

#include <vector>

#include "qecb/channel.hpp"

namespace qecb {

struct UnitaryEnsemble {
  std::vector<CMat> unitaries;
  std::vector<double> weights;
};

struct TwirlDpiReport {
  double lhs = 0.0;  // distinguishability of the original pair
  double rhs = 0.0;  // distinguishability of the twirled pair
  bool holds = false;
};

/// sum_x p(x) U_x^dag ( Q ( U_x . U_x^dag ) ) U_x, in Kraus form with
/// near-zero operators pruned.
QuantumChannel twirl_discrete(const QuantumChannel& ch,
                              const UnitaryEnsemble& ensemble);

/// Uniform n-qubit Pauli strings (unitary 1-design). n <= 3.
UnitaryEnsemble pauli_ensemble(int n_qubits);

/// The 24 single-qubit Clifford unitaries, uniform weights (unitary 2-design).
UnitaryEnsemble clifford_ensemble_1q();

/// Haar twirl in closed form: depolarizing(d, p) with
/// p = d (1 - F_avg(ch)) / (d - 1).
QuantumChannel haar_twirl_analytic(const QuantumChannel& ch);

/// Data-processing check for the twirled pair: the diamond-distance estimate
/// of (Q, S) must dominate that of their twirls.
TwirlDpiReport check_twirl_dpi(const QuantumChannel& q, const QuantumChannel& s,
                               const UnitaryEnsemble& ensemble);

}  // namespace qecb
