#pragma once

#include <string>
#include <vector>

#include "qecb/channel.hpp"

namespace qecb {

/// (|alpha|, psi, phi) parameterization of the channel-adapted recovery
/// family for the four-qubit amplitude-damping code.
struct RecoveryParams {
  double alpha_abs = 0.0;
  double psi = 0.0;
  double phi = 0.0;
};

/// 16 x 2 isometry with columns |0_L> = (|0000> + |1111>)/sqrt(2) and
/// |1_L> = (|0011> + |1100>)/sqrt(2).
CMat encode_isometry();

/// Encoding followed by independent single-qubit damping on each physical
/// qubit: a 2 -> 16 channel.
QuantumChannel logical_noise(double theta);

/// Analytic entanglement fidelity of the recovery family, as a function of
/// the recovery parameters and the damping probability (tau = 1 - theta):
/// 1/4 + (sqrt(2)/4)|a| tau cos(psi) + 2 tau^2
///     + (sqrt(2(1-|a|^2)) cos(phi) - 8) tau^3 / 4 + tau^4 / 4.
/// Valid as a fidelity only near the optimal manifold; can leave [0,1]
/// far off it and is never clamped.
double fe_family(const RecoveryParams& params, double theta);

/// 1 / sqrt(1 + (1-theta)^4), the optimal |alpha| (with psi = phi = 0).
double alpha_opt(double theta);

/// Closed form at the optimum:
/// (1/4) [1 + tau sqrt(2 (1 + tau^4)) + tau^2 (8 - 8 tau + tau^2)].
double fe_optimal(double theta);

/// fe_family evaluated at the parameters optimal for theta_hat but under the
/// true damping theta.
double fe_best_guess(double theta, double theta_hat);

/// Leading-order sensitivity of the best-guess fidelity to estimate error:
/// (1-theta)^3 / (sqrt(2) (1 + (1-theta)^4)^{3/2}).
double h_func(double theta);

/// Reference small-theta series, coefficients [c0, c1, c2] of c0 + c1 theta
/// + c2 theta^2. Names: leung, channel_adapted, sdp, incomplete.
std::vector<double> series_reference(const std::string& name);

}  // namespace qecb
