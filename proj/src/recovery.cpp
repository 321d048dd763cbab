#include "qecb/recovery.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qecb/fidelity.hpp"

namespace qecb {

namespace {

// Isometry V: C^D -> C^(d*E), row index s*E + e (s = logical, e = env).
// Recovery Kraus R_e(s, t) = V(s*E + e, t).

CMat polar_isometry(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

// F_e(R o N) = (1/d^2) sum_{i,e} |c_ie|^2 with
// c_ie = sum_{s,t} V(s*E+e, t) N_i(t, s).
double objective(const CMat& v, const std::vector<CMat>& noise, int d, int E) {
  const int D = static_cast<int>(v.cols());
  double acc = 0.0;
  for (const auto& n : noise) {
    for (int e = 0; e < E; ++e) {
      Complex c = 0.0;
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < D; ++t) c += v(s * E + e, t) * n(t, s);
      acc += std::norm(c);
    }
  }
  return acc / (static_cast<double>(d) * d);
}

// Wirtinger gradient dF/d(conj V): G(s*E+e, t) = (1/d^2) sum_i c_ie conj(N_i(t,s)).
CMat euclidean_gradient(const CMat& v, const std::vector<CMat>& noise, int d,
                        int E) {
  const int D = static_cast<int>(v.cols());
  CMat g = CMat::Zero(v.rows(), v.cols());
  for (const auto& n : noise) {
    for (int e = 0; e < E; ++e) {
      Complex c = 0.0;
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < D; ++t) c += v(s * E + e, t) * n(t, s);
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < D; ++t) g(s * E + e, t) += c * std::conj(n(t, s));
    }
  }
  return g / (static_cast<double>(d) * d);
}

QuantumChannel isometry_to_channel(const CMat& v, int d, int E) {
  const int D = static_cast<int>(v.cols());
  std::vector<CMat> kraus;
  kraus.reserve(static_cast<std::size_t>(E));
  for (int e = 0; e < E; ++e) {
    CMat r(d, D);
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < D; ++t) r(s, t) = v(s * E + e, t);
    kraus.push_back(std::move(r));
  }
  return prune_kraus({D, d, std::move(kraus)});
}

}  // namespace

double recovery_objective(const CMat& v, const QuantumChannel& noise,
                          int env_dim) {
  return objective(v, noise.kraus, noise.d_in, env_dim);
}

CMat recovery_gradient(const CMat& v, const QuantumChannel& noise,
                       int env_dim) {
  return euclidean_gradient(v, noise.kraus, noise.d_in, env_dim);
}

RecoverySolution optimize_recovery(const QuantumChannel& noise,
                                   const RecoveryOptions& opts) {
  const int d = noise.d_in;
  const int D = noise.d_out;
  if (d * D > kDimCap)
    throw std::invalid_argument("optimize_recovery: dimension cap exceeded");
  const int E = opts.env_dim > 0 ? opts.env_dim : d * D;
  if (d * E < D)
    throw std::invalid_argument("optimize_recovery: env_dim too small for an isometry");
  if (opts.starts < 1)
    throw std::invalid_argument("optimize_recovery: starts >= 1");

  CMat best_v;
  double best_f = -1.0;
  int best_iters = 0;
  bool best_converged = false;

  for (int start = 0; start < opts.starts; ++start) {
    CMat v0(d * E, D);
    if (start == 0) {
      // Warm start: recovery Kraus = daggered noise Kraus, projected onto
      // the isometry manifold.
      v0.setZero();
      const int m = std::min<int>(static_cast<int>(noise.kraus.size()), E);
      for (int e = 0; e < m; ++e)
        for (int s = 0; s < d; ++s)
          for (int t = 0; t < D; ++t)
            v0(s * E + e, t) = std::conj(noise.kraus[static_cast<std::size_t>(e)](t, s));
      // Guard against a rank-deficient stack (e.g. zero Kraus operators).
      std::mt19937_64 rng(opts.seed);
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (Eigen::Index i = 0; i < v0.rows(); ++i)
        for (Eigen::Index j = 0; j < v0.cols(); ++j)
          v0(i, j) += 1e-6 * Complex(gauss(rng), gauss(rng));
    } else {
      std::mt19937_64 rng(opts.seed ^ static_cast<std::uint64_t>(start));
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (Eigen::Index i = 0; i < v0.rows(); ++i)
        for (Eigen::Index j = 0; j < v0.cols(); ++j)
          v0(i, j) = Complex(gauss(rng), gauss(rng));
    }
    CMat v = polar_isometry(v0);

    double f = objective(v, noise.kraus, d, E);
    double step = 1.0;
    int it = 0;
    bool converged = false;
    for (; it < opts.max_iters; ++it) {
      CMat g = euclidean_gradient(v, noise.kraus, d, E);
      // Tangent projection at V: G - V herm(V^dag G).
      CMat vg = v.adjoint() * g;
      CMat g_tan = g - v * (0.5 * (vg + vg.adjoint()));
      const double gnorm2 = g_tan.squaredNorm();
      if (gnorm2 < opts.tol) {
        converged = true;
        break;
      }
      bool improved = false;
      for (int bt = 0; bt < 40; ++bt) {
        CMat cand = polar_isometry(v + step * g_tan);
        const double fc = objective(cand, noise.kraus, d, E);
        if (fc >= f + 1e-4 * step * gnorm2) {
          if (fc - f < opts.tol) converged = true;
          v = std::move(cand);
          f = fc;
          improved = true;
          step *= 1.3;
          break;
        }
        step *= 0.5;
      }
      if (!improved || converged) {
        converged = true;
        break;
      }
    }
    if (f > best_f) {
      best_f = f;
      best_v = v;
      best_iters = it;
      best_converged = converged;
    }
  }

  RecoverySolution sol;
  sol.recovery = isometry_to_channel(best_v, d, E);
  sol.fe_achieved = entanglement_fidelity(compose(sol.recovery, noise));
  sol.iterations = best_iters;
  sol.converged = best_converged;
  sol.seed = opts.seed;
  return sol;
}

RecoverySolution recovery_for_estimate(const NoiseFamily& noise_family,
                                       double theta_hat,
                                       const RecoveryOptions& opts) {
  return optimize_recovery(noise_family(theta_hat), opts);
}

}  // namespace qecb
