#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qecb/types.hpp"

namespace qecb {

struct SpectatorConfig {
  double gamma = 1.0;  // spectator-to-memory damping speed ratio, >= 1
  int m_qubits = 1;
};

/// Truncated-normal estimator distribution for theta_hat on [0,1], with
/// pre-truncation mean theta and variance `variance`.
struct EstimateModel {
  double theta = 0.0;
  double variance = 0.0;
};

struct Fig3Row {
  double theta = 0.0;
  double gamma = 0.0;
  int m = 0;
  double fe_perfect = 0.0;
  double gap = 0.0;
  double fe_incomplete = 0.0;
};

/// Spectator damping probability 1 - (1-theta)^gamma.
double f_gamma(double theta, double gamma);

/// M / (f_gamma (1 - f_gamma)); diverges at the endpoints.
double qfi_spectator(double theta, const SpectatorConfig& cfg);

/// QCRB-saturating estimator variance 1 / qfi_spectator.
double qcrb_variance(double theta, const SpectatorConfig& cfg);

/// Curvature of the fidelity gap: -1/2 times the central second difference
/// of theta_hat -> fe(theta, theta_hat) at theta_hat = theta.
double g_numeric(const std::function<double(double, double)>& fe,
                 double theta, double step = 1e-4);

/// Mean entanglement-fidelity loss from estimate noise at QCRB saturation:
/// h(theta) * qcrb_variance(theta).
double mean_delta_fe(double theta, const SpectatorConfig& cfg);

/// Inverse-CDF draw from the truncated normal on [0,1].
double sample_estimate(const EstimateModel& model, std::mt19937_64& rng);

std::vector<Fig3Row> fig3_data(const std::vector<double>& gammas,
                               const std::vector<double>& theta_grid, int m);

}  // namespace qecb
