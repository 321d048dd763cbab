#pragma once

#include <cstdint>
#include <vector>

#include "qecb/channel.hpp"

namespace qecb {

struct DiamondOptions {
  int starts = 32;
  int max_iters = 500;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

/// Best value found by the multistart ascent; a certified lower bound on the
/// diamond distance, achieved by `achieving_state` on reference (x) input.
struct DiamondEstimate {
  double value = 0.0;
  CVec achieving_state;
  int starts_used = 0;
  bool converged = false;
};

struct UpperBoundReport {
  double epsilon_theta = 0.0;  // sum of recovery-mismatch terms
  double channel_gap = 0.0;    // sum of noise-gap terms
  double total = 0.0;
  std::vector<double> per_cycle;
};

/// Maximizes the trace distance of (id (x) Q) vs (id (x) S) over pure
/// bipartite states by projected gradient ascent; the maximally entangled
/// state is always start #0. Deterministic per seed.
DiamondEstimate diamond_lower_estimate(const QuantumChannel& q,
                                       const QuantumChannel& s,
                                       const DiamondOptions& opts = {});

/// Half the trace norm of the unnormalized Choi difference; a standard upper
/// bound on the diamond distance.
double diamond_upper_choi(const QuantumChannel& q, const QuantumChannel& s);

/// Exact diamond distance between depolarizing(d, p1) and depolarizing(d, p2):
/// ((d^2-1)/d^2) |p1 - p2|.
double diamond_depolarizing_exact(double p1, double p2, int d);

/// (d^2-1)/d^2.
double kappa(int d);

/// |F_e(Q) - F_e(S)|; a lower bound on the diamond distance for square
/// channels.
double fe_lower_bound(const QuantumChannel& q, const QuantumChannel& s);

struct SpectatorGapBound {
  double lower = 0.0;  // multistart estimate
  double upper = 0.0;  // Choi trace-norm bound
};

/// Diamond-distance sandwich for a pair of recovery maps; consumers assert
/// their entanglement-fidelity gap against `upper`.
SpectatorGapBound spectator_gap_bound(const QuantumChannel& r_opt,
                                      const QuantumChannel& r_guess,
                                      const DiamondOptions& opts = {});

double chaining_upper_single(double noise_gap, double eps_guess);
UpperBoundReport chaining_upper_multi(const std::vector<double>& gaps,
                                      const std::vector<double>& eps);

}  // namespace qecb
