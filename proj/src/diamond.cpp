#include "qecb/diamond.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qecb/fidelity.hpp"

namespace qecb {

namespace {

// Reshape psi (index r*d + c, r = reference, c = input) into the d x d
// matrix Psi; then (id (x) K)|psi> corresponds to Psi K^T.
CMat reshape_state(const CVec& psi, int d) {
  CMat m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = psi(r * d + c);
  return m;
}

CMat output_state(const CVec& psi, const QuantumChannel& ch) {
  const int d = ch.d_in;
  const int n = d * ch.d_out;
  const CMat m = reshape_state(psi, d);
  CMat rho = CMat::Zero(n, n);
  for (const auto& k : ch.kraus) {
    CMat out = m * k.transpose();  // d x d_out
    CVec v(n);
    for (int r = 0; r < d; ++r)
      for (int b = 0; b < ch.d_out; ++b) v(r * ch.d_out + b) = out(r, b);
    rho += v * v.adjoint();
  }
  return rho;
}

struct ObjectiveEval {
  double value = 0.0;
  CMat w;  // sign(Delta), the trace-norm subgradient direction
};

ObjectiveEval evaluate(const CVec& psi, const QuantumChannel& q,
                       const QuantumChannel& s) {
  CMat delta = output_state(psi, q) - output_state(psi, s);
  Eigen::SelfAdjointEigenSolver<CMat> es(delta);
  ObjectiveEval ev;
  ev.value = 0.5 * es.eigenvalues().cwiseAbs().sum();
  CVec sign(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < sign.size(); ++i)
    sign(i) = es.eigenvalues()(i) >= 0.0 ? 1.0 : -1.0;
  ev.w = es.eigenvectors() * sign.asDiagonal() * es.eigenvectors().adjoint();
  return ev;
}

// Euclidean gradient of psi -> (1/2) Tr[W (rho_Q - rho_S)] at fixed W:
// A psi with A = sum_i (id(x)K_i)^dag W (id(x)K_i) - (S terms).
CVec gradient(const CVec& psi, const QuantumChannel& q, const QuantumChannel& s,
              const CMat& w) {
  const int d = q.d_in;
  const int D = q.d_out;
  const CMat m = reshape_state(psi, d);
  CMat acc = CMat::Zero(d, d);  // gradient reshaped like Psi
  auto add_channel = [&](const QuantumChannel& ch, double sgn) {
    for (const auto& k : ch.kraus) {
      CMat out = m * k.transpose();  // d x D
      // (W vec(out)) reshaped, then mapped back through K^*.
      CMat wv(d, D);
      for (int r = 0; r < d; ++r)
        for (int b = 0; b < D; ++b) {
          Complex acc2 = 0.0;
          for (int r2 = 0; r2 < d; ++r2)
            for (int b2 = 0; b2 < D; ++b2)
              acc2 += w(r * D + b, r2 * D + b2) * out(r2, b2);
          wv(r, b) = acc2;
        }
      acc += sgn * wv * k.conjugate();
    }
  };
  add_channel(q, 1.0);
  add_channel(s, -1.0);
  CVec g(d * d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r * d + c) = acc(r, c);
  return g;
}

CVec maximally_entangled(int d) {
  CVec psi = CVec::Zero(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r) psi(r * d + r) = a;
  return psi;
}

}  // namespace

DiamondEstimate diamond_lower_estimate(const QuantumChannel& q,
                                       const QuantumChannel& s,
                                       const DiamondOptions& opts) {
  if (q.d_in != s.d_in || q.d_out != s.d_out)
    throw std::invalid_argument("diamond: dimension mismatch");
  const int d = q.d_in;
  if (d * q.d_out > kDimCap)
    throw std::invalid_argument("diamond: dimension cap exceeded");
  if (opts.starts < 1) throw std::invalid_argument("diamond: starts >= 1");

  DiamondEstimate best;
  best.achieving_state = maximally_entangled(d);

  for (int start = 0; start < opts.starts; ++start) {
    CVec psi;
    if (start == 0) {
      psi = maximally_entangled(d);
    } else {
      std::mt19937_64 rng(opts.seed ^ static_cast<std::uint64_t>(start));
      std::normal_distribution<double> gauss(0.0, 1.0);
      psi.resize(d * d);
      for (int i = 0; i < d * d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
      psi.normalize();
    }

    ObjectiveEval ev = evaluate(psi, q, s);
    double step = 0.5;
    bool converged = false;
    for (int it = 0; it < opts.max_iters; ++it) {
      CVec g = gradient(psi, q, s, ev.w);
      // Project out the radial component; the objective is scale-invariant
      // only after renormalization.
      g -= (psi.adjoint() * g)(0, 0).real() * psi;
      const double gnorm = g.norm();
      if (gnorm < opts.tol) {
        converged = true;
        break;
      }
      bool improved = false;
      for (int bt = 0; bt < 30; ++bt) {
        CVec cand = (psi + step * g).normalized();
        ObjectiveEval cev = evaluate(cand, q, s);
        if (cev.value > ev.value + 1e-15) {
          const double gain = cev.value - ev.value;
          psi = std::move(cand);
          ev = std::move(cev);
          improved = true;
          step *= 1.5;
          if (gain < opts.tol) converged = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) {
        converged = true;
        break;
      }
      if (converged) break;
    }
    if (ev.value > best.value) {
      best.value = ev.value;
      best.achieving_state = psi;
      best.converged = converged;
    } else if (best.value == 0.0 && start == 0) {
      best.converged = converged;
    }
    ++best.starts_used;
  }
  return best;
}

double diamond_upper_choi(const QuantumChannel& q, const QuantumChannel& s) {
  if (q.d_in != s.d_in || q.d_out != s.d_out)
    throw std::invalid_argument("diamond: dimension mismatch");
  CMat diff = kraus_to_choi(q).mat - kraus_to_choi(s).mat;
  Eigen::SelfAdjointEigenSolver<CMat> es(diff, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double kappa(int d) {
  if (d < 2) throw std::invalid_argument("kappa: d >= 2");
  return (static_cast<double>(d) * d - 1.0) / (static_cast<double>(d) * d);
}

double diamond_depolarizing_exact(double p1, double p2, int d) {
  if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0)
    throw std::invalid_argument("depolarizing parameters outside [0,1]");
  return kappa(d) * std::abs(p1 - p2);
}

double fe_lower_bound(const QuantumChannel& q, const QuantumChannel& s) {
  if (q.d_in != s.d_in || q.d_out != s.d_out || !q.square())
    throw std::invalid_argument("fe_lower_bound: same square dims required");
  return std::abs(entanglement_fidelity(q) - entanglement_fidelity(s));
}

SpectatorGapBound spectator_gap_bound(const QuantumChannel& r_opt,
                                      const QuantumChannel& r_guess,
                                      const DiamondOptions& opts) {
  SpectatorGapBound b;
  b.lower = diamond_lower_estimate(r_opt, r_guess, opts).value;
  b.upper = diamond_upper_choi(r_opt, r_guess);
  return b;
}

double chaining_upper_single(double noise_gap, double eps_guess) {
  if (noise_gap < 0.0 || eps_guess < 0.0)
    throw std::invalid_argument("chaining: nonnegative terms required");
  return noise_gap + eps_guess;
}

UpperBoundReport chaining_upper_multi(const std::vector<double>& gaps,
                                      const std::vector<double>& eps) {
  if (gaps.size() != eps.size())
    throw std::invalid_argument("chaining: list length mismatch");
  UpperBoundReport r;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    r.per_cycle.push_back(chaining_upper_single(gaps[i], eps[i]));
    r.channel_gap += gaps[i];
    r.epsilon_theta += eps[i];
    r.total += r.per_cycle.back();
  }
  return r;
}

}  // namespace qecb
