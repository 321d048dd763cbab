#include "qecb/twirl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qecb/diamond.hpp"
#include "qecb/fidelity.hpp"

namespace qecb {

namespace {

void check_ensemble(const UnitaryEnsemble& e, int d) {
  if (e.unitaries.size() != e.weights.size() || e.unitaries.empty())
    throw std::invalid_argument("ensemble: unitaries/weights size mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < e.unitaries.size(); ++i) {
    const CMat& u = e.unitaries[i];
    if (u.rows() != d || u.cols() != d)
      throw std::invalid_argument("ensemble: unitary dimension mismatch");
    if ((u.adjoint() * u - CMat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("ensemble: element is not unitary");
    if (e.weights[i] < 0.0)
      throw std::invalid_argument("ensemble: negative weight");
    total += e.weights[i];
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("ensemble: weights do not sum to 1");
}

// Fix the global phase so the first nonzero entry (row-major scan) is real
// positive; lets us deduplicate unitaries that differ only by phase.
CMat canonical_phase(const CMat& u) {
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index c = 0; c < u.cols(); ++c)
      if (std::abs(u(r, c)) > 1e-9)
        return u * std::polar(1.0, -std::arg(u(r, c)));
  return u;
}

bool contains(const std::vector<CMat>& set, const CMat& u) {
  for (const auto& v : set)
    if ((v - u).cwiseAbs().maxCoeff() < 1e-8) return true;
  return false;
}

}  // namespace

QuantumChannel twirl_discrete(const QuantumChannel& ch,
                              const UnitaryEnsemble& ensemble) {
  if (!ch.square()) throw std::invalid_argument("twirl: square channel required");
  check_ensemble(ensemble, ch.d_in);
  std::vector<CMat> kraus;
  kraus.reserve(ensemble.unitaries.size() * ch.kraus.size());
  for (std::size_t x = 0; x < ensemble.unitaries.size(); ++x) {
    const CMat& u = ensemble.unitaries[x];
    const double w = std::sqrt(ensemble.weights[x]);
    for (const auto& k : ch.kraus) kraus.push_back(w * u.adjoint() * k * u);
  }
  return prune_kraus({ch.d_in, ch.d_out, std::move(kraus)});
}

UnitaryEnsemble pauli_ensemble(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3)
    throw std::invalid_argument("pauli_ensemble: n_qubits must be 1..3");
  const int d = 1 << n_qubits;
  auto basis = pauli_string_basis(n_qubits);  // normalized by 1/sqrt(d)
  UnitaryEnsemble e;
  const double scale = std::sqrt(static_cast<double>(d));
  for (auto& b : basis) e.unitaries.push_back(scale * b);
  e.weights.assign(e.unitaries.size(), 1.0 / static_cast<double>(d * d));
  return e;
}

UnitaryEnsemble clifford_ensemble_1q() {
  CMat h(2, 2), s(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  s << 1, 0, 0, Complex(0, 1);

  // Closure of <H, S> modulo global phase is the 24-element Clifford group.
  std::vector<CMat> group{canonical_phase(CMat::Identity(2, 2))};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CMat> next = group;
    for (const auto& g : group) {
      for (const CMat* gen : {&h, &s}) {
        CMat cand = canonical_phase(*gen * g);
        if (!contains(next, cand)) {
          next.push_back(std::move(cand));
          grew = true;
        }
      }
    }
    group = std::move(next);
  }
  if (group.size() != 24)
    throw std::logic_error("clifford closure produced wrong element count");

  UnitaryEnsemble e;
  e.unitaries = std::move(group);
  e.weights.assign(24, 1.0 / 24.0);
  return e;
}

QuantumChannel haar_twirl_analytic(const QuantumChannel& ch) {
  if (!ch.square()) throw std::invalid_argument("twirl: square channel required");
  const int d = ch.d_in;
  const double favg = average_fidelity(ch);
  // p ranges over [0, d^2/(d^2-1)]: twirls of generic channels overshoot
  // p = 1 while staying completely positive.
  const double p_max = static_cast<double>(d) * d / (static_cast<double>(d) * d - 1.0);
  const double p = std::clamp(d * (1.0 - favg) / (d - 1.0), 0.0, p_max);
  if (p <= 1.0) return depolarizing(d, p);
  // Beyond p = 1 the Kraus construction in depolarizing() breaks down;
  // build the map (1-p) rho + p I/d from its Choi matrix instead.
  const int n = d * d;
  CMat choi = (p / d) * CMat::Identity(n, n);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) choi(r * d + r, c * d + c) += 1.0 - p;
  return choi_to_kraus({d, d, std::move(choi)});
}

TwirlDpiReport check_twirl_dpi(const QuantumChannel& q, const QuantumChannel& s,
                               const UnitaryEnsemble& ensemble) {
  DiamondOptions opts;
  TwirlDpiReport r;
  r.lhs = diamond_lower_estimate(q, s, opts).value;
  r.rhs = diamond_lower_estimate(twirl_discrete(q, ensemble),
                                 twirl_discrete(s, ensemble), opts)
              .value;
  r.holds = r.lhs >= r.rhs - kTolReport;
  return r;
}

}  // namespace qecb
