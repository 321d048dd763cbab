#include "qecb/ad41.hpp"

#include <cmath>
#include <stdexcept>

namespace qecb {

namespace {

void check_theta(double theta) {
  if (theta < 0.0 || theta > 1.0)
    throw std::invalid_argument("theta outside [0,1]");
}

}  // namespace

CMat encode_isometry() {
  CMat c = CMat::Zero(16, 2);
  const double a = 1.0 / std::sqrt(2.0);
  c(0b0000, 0) = a;   // |0000>
  c(0b1111, 0) = a;   // |1111>
  c(0b0011, 1) = a;   // |0011>
  c(0b1100, 1) = a;   // |1100>
  return c;
}

QuantumChannel logical_noise(double theta) {
  check_theta(theta);
  QuantumChannel enc{2, 16, {encode_isometry()}};
  return compose(tensor_power(amplitude_damping(theta), 4), enc);
}

double fe_family(const RecoveryParams& p, double theta) {
  check_theta(theta);
  if (p.alpha_abs < 0.0 || p.alpha_abs > 1.0)
    throw std::invalid_argument("alpha_abs outside [0,1]");
  const double tau = 1.0 - theta;
  const double beta = std::sqrt(1.0 - p.alpha_abs * p.alpha_abs);
  return 0.25 + (std::sqrt(2.0) / 4.0) * p.alpha_abs * tau * std::cos(p.psi) +
         2.0 * tau * tau +
         (std::sqrt(2.0) * beta * std::cos(p.phi) - 8.0) * tau * tau * tau / 4.0 +
         tau * tau * tau * tau / 4.0;
}

double alpha_opt(double theta) {
  check_theta(theta);
  const double tau = 1.0 - theta;
  return 1.0 / std::sqrt(1.0 + tau * tau * tau * tau);
}

double fe_optimal(double theta) {
  check_theta(theta);
  const double tau = 1.0 - theta;
  const double t4 = tau * tau * tau * tau;
  return 0.25 * (1.0 + tau * std::sqrt(2.0 * (1.0 + t4)) +
                 tau * tau * (8.0 - 8.0 * tau + tau * tau));
}

double fe_best_guess(double theta, double theta_hat) {
  check_theta(theta_hat);
  return fe_family({alpha_opt(theta_hat), 0.0, 0.0}, theta);
}

double h_func(double theta) {
  check_theta(theta);
  const double tau = 1.0 - theta;
  const double t4 = tau * tau * tau * tau;
  return tau * tau * tau / (std::sqrt(2.0) * std::pow(1.0 + t4, 1.5));
}

std::vector<double> series_reference(const std::string& name) {
  if (name == "leung") return {1.0, 0.0, -2.75};
  if (name == "channel_adapted") return {1.0, 0.0, -1.5};
  if (name == "sdp") return {1.0, 0.0, -1.25};
  if (name == "incomplete") return {1.0, -0.25, -1.25};
  throw std::invalid_argument("unknown series name: " + name);
}

}  // namespace qecb
