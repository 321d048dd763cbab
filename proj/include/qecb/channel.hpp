#pragma once

#include <cstdint>
#include <vector>

#include "qecb/types.hpp"

namespace qecb {

/// CPTP map in Kraus form. Each Kraus operator is d_out x d_in.
/// Immutable after construction by convention; all free functions return
/// fresh values.
struct QuantumChannel {
  int d_in = 0;
  int d_out = 0;
  std::vector<CMat> kraus;

  bool square() const { return d_in == d_out; }
};

/// Unnormalized Choi matrix of a channel, size (d_in*d_out)^2.
/// Index convention: row (r, b) -> r*d_out + b with r the reference
/// (input copy) index and b the output index.
struct ChoiMatrix {
  int d_in = 0;
  int d_out = 0;
  CMat mat;
};

struct CptpReport {
  double tp_residual = 0.0;
  double psd_min_eigenvalue = 0.0;
  bool pass = false;
};

QuantumChannel identity_channel(int d);
QuantumChannel unitary_channel(const CMat& u);

/// rho -> (1-p) rho + p Tr[rho] I/d, built from the generalized Pauli
/// (Weyl) Kraus set, exact for any d >= 2.
QuantumChannel depolarizing(int d, double p);

/// Single-qubit amplitude damping, Kraus {diag(1, sqrt(1-theta)),
/// sqrt(theta)|0><1|}.
QuantumChannel amplitude_damping(double theta);

/// Deterministic random CPTP map: Gaussian block matrix orthonormalized
/// into a Stinespring isometry. Requires kraus_count*d_out >= d_in and
/// kraus_count <= d_in*d_out.
QuantumChannel random_channel(int d_in, int d_out, int kraus_count,
                              std::uint64_t seed);

CMat apply(const QuantumChannel& ch, const CMat& rho);
QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner);
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);
QuantumChannel tensor_power(const QuantumChannel& ch, int n);

/// Adjoint map w.r.t. the Hilbert-Schmidt inner product (daggered Kraus).
QuantumChannel adjoint_channel(const QuantumChannel& ch);

ChoiMatrix kraus_to_choi(const QuantumChannel& ch);
QuantumChannel choi_to_kraus(const ChoiMatrix& choi);

CptpReport validate_cptp(const QuantumChannel& ch, double tol = kTolCptp);

/// Drop Kraus operators with Frobenius norm below tol.
QuantumChannel prune_kraus(const QuantumChannel& ch, double tol = 1e-12);

/// Frobenius distance between the Choi matrices of two channels.
double choi_distance(const QuantumChannel& a, const QuantumChannel& b);

// Small dense helpers shared across modules.
CMat kron(const CMat& a, const CMat& b);
CMat dagger(const CMat& m);
bool is_density_matrix(const CMat& rho, double tol = 1e-8);

}  // namespace qecb
