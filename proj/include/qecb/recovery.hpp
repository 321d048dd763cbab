#pragma once

#include <cstdint>
#include <functional>

#include "qecb/channel.hpp"

namespace qecb {

struct RecoveryOptions {
  int env_dim = 0;  // 0 = full d_logical * d_noise_out
  int starts = 8;
  int max_iters = 300;
  double tol = 1e-10;
  std::uint64_t seed = 0;
};

struct RecoverySolution {
  QuantumChannel recovery;  // d_noise_out -> d_logical
  double fe_achieved = 0.0;
  int iterations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
};

/// Maximizes F_e(R o noise) over CPTP maps R: d_out -> d_in by gradient
/// ascent on the Stinespring isometry of R with polar retraction. The first
/// start is warm-started from the daggered noise Kraus operators.
RecoverySolution optimize_recovery(const QuantumChannel& noise,
                                   const RecoveryOptions& opts = {});

/// Objective F_e(R_V o noise) and its Wirtinger gradient dF/d(conj V) for an
/// isometry V: C^D -> C^(d*env_dim); exposed so the analytic gradient can be
/// checked against finite differences.
double recovery_objective(const CMat& v, const QuantumChannel& noise,
                          int env_dim);
CMat recovery_gradient(const CMat& v, const QuantumChannel& noise, int env_dim);

using NoiseFamily = std::function<QuantumChannel(double)>;

/// Recovery tuned to the estimated parameter: optimize_recovery on
/// noise_family(theta_hat). The caller composes it with the true channel.
RecoverySolution recovery_for_estimate(const NoiseFamily& noise_family,
                                       double theta_hat,
                                       const RecoveryOptions& opts = {});

}  // namespace qecb
