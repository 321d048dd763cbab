#include "qecb/spectator.hpp"

#include <cmath>
#include <stdexcept>

#include "qecb/ad41.hpp"

namespace qecb {

namespace {

void check_cfg(const SpectatorConfig& cfg) {
  if (cfg.gamma < 1.0)
    throw std::invalid_argument("gamma must be >= 1 (spectator no slower than memory)");
  if (cfg.m_qubits < 1) throw std::invalid_argument("m_qubits must be >= 1");
}

double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Acklam's rational approximation of the standard normal quantile, sharpened
// by one Halley step; good to ~1e-15 over (0,1).
double std_normal_quantile(double p) {
  if (p <= 0.0 || p >= 1.0)
    throw std::invalid_argument("quantile argument outside (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = std_normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  return x - u / (1.0 + x * u / 2.0);
}

}  // namespace

double f_gamma(double theta, double gamma) {
  if (theta < 0.0 || theta > 1.0)
    throw std::invalid_argument("theta outside [0,1]");
  if (gamma < 1.0) throw std::invalid_argument("gamma must be >= 1");
  return 1.0 - std::pow(1.0 - theta, gamma);
}

double qfi_spectator(double theta, const SpectatorConfig& cfg) {
  check_cfg(cfg);
  const double f = f_gamma(theta, cfg.gamma);
  if (f <= 0.0 || f >= 1.0)
    throw std::domain_error("QFI diverges: f_gamma(theta) is at an endpoint");
  return cfg.m_qubits / (f * (1.0 - f));
}

double qcrb_variance(double theta, const SpectatorConfig& cfg) {
  return 1.0 / qfi_spectator(theta, cfg);
}

double g_numeric(const std::function<double(double, double)>& fe, double theta,
                 double step) {
  if (step <= 0.0) throw std::invalid_argument("step must be positive");
  const double fp = fe(theta, theta + step);
  const double f0 = fe(theta, theta);
  const double fm = fe(theta, theta - step);
  const double second = (fp - 2.0 * f0 + fm) / (step * step);
  if (!std::isfinite(second))
    throw std::invalid_argument("non-finite values in second difference");
  return -0.5 * second;
}

double mean_delta_fe(double theta, const SpectatorConfig& cfg) {
  return h_func(theta) * qcrb_variance(theta, cfg);
}

double sample_estimate(const EstimateModel& model, std::mt19937_64& rng) {
  if (model.variance < 0.0) throw std::invalid_argument("negative variance");
  if (model.variance == 0.0) return model.theta;
  const double sigma = std::sqrt(model.variance);
  const double lo = std_normal_cdf((0.0 - model.theta) / sigma);
  const double hi = std_normal_cdf((1.0 - model.theta) / sigma);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = lo + (hi - lo) * unif(rng);
  u = std::min(std::max(u, 1e-16), 1.0 - 1e-16);
  double x = model.theta + sigma * std_normal_quantile(u);
  return std::min(std::max(x, 0.0), 1.0);
}

std::vector<Fig3Row> fig3_data(const std::vector<double>& gammas,
                               const std::vector<double>& theta_grid, int m) {
  std::vector<Fig3Row> rows;
  rows.reserve(gammas.size() * theta_grid.size());
  for (double gamma : gammas) {
    SpectatorConfig cfg{gamma, m};
    for (double theta : theta_grid) {
      Fig3Row r;
      r.theta = theta;
      r.gamma = gamma;
      r.m = m;
      r.fe_perfect = fe_optimal(theta);
      r.gap = mean_delta_fe(theta, cfg);
      r.fe_incomplete = r.fe_perfect - r.gap;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace qecb
