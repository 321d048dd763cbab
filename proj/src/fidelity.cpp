#include "qecb/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qecb {

namespace {

CMat matrix_sqrt_psd(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m);
  if (es.eigenvalues().minCoeff() < -kTolPsd)
    throw std::invalid_argument("matrix is not PSD within tolerance");
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal().toDenseMatrix().cast<Complex>() *
         es.eigenvectors().adjoint();
}

void check_same_dim(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("states must be square with equal dimensions");
}

void check_square(const QuantumChannel& ch) {
  if (!ch.square())
    throw std::invalid_argument("operation requires a square channel");
}

bool is_power_of_two(int d) { return d > 0 && (d & (d - 1)) == 0; }

// Unnormalized maximally entangled vector |Gamma> = sum_r |r>|r>, in the
// Choi index convention row (r, b) -> r*d + b.
CVec gamma_vector(int d) {
  CVec g = CVec::Zero(d * d);
  for (int r = 0; r < d; ++r) g(r * d + r) = 1.0;
  return g;
}

}  // namespace

double state_fidelity(const CMat& rho, const CMat& sigma) {
  check_same_dim(rho, sigma);
  CMat sr = matrix_sqrt_psd(rho);
  // ||sqrt(rho) sqrt(sigma)||_1^2 = (sum_k sqrt(eig_k(sr sigma sr)))^2
  CMat inner = sr * sigma * sr;
  Eigen::SelfAdjointEigenSolver<CMat> es(inner, Eigen::EigenvaluesOnly);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    acc += std::sqrt(std::max(0.0, es.eigenvalues()(k)));
  return std::min(1.0, acc * acc);
}

double trace_distance(const CMat& rho, const CMat& sigma) {
  check_same_dim(rho, sigma);
  Eigen::SelfAdjointEigenSolver<CMat> es(rho - sigma, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double entanglement_fidelity(const QuantumChannel& ch) {
  check_square(ch);
  const int d = ch.d_in;
  const CVec g = gamma_vector(d);
  const CMat choi = kraus_to_choi(ch).mat;
  const double fe_choi = (g.adjoint() * choi * g).real()(0, 0) / (d * d);
  double fe_kraus = 0.0;
  for (const auto& k : ch.kraus) fe_kraus += std::norm(k.trace());
  fe_kraus /= static_cast<double>(d) * d;
  if (std::abs(fe_choi - fe_kraus) > 1e-11)
    throw std::runtime_error("entanglement fidelity route mismatch");
  return std::clamp(fe_choi, 0.0, 1.0);
}

double average_fidelity(const QuantumChannel& ch) {
  const int d = ch.d_in;
  return (d * entanglement_fidelity(ch) + 1.0) / (d + 1.0);
}

double error_angle_of_fe(double fe) {
  return std::acos(std::sqrt(std::clamp(fe, 0.0, 1.0)));
}

double error_angle(const QuantumChannel& ch) {
  return error_angle_of_fe(entanglement_fidelity(ch));
}

std::vector<CMat> pauli_string_basis(int n_qubits) {
  if (n_qubits < 1 || (1 << n_qubits) > kDimCap)
    throw std::invalid_argument("n_qubits out of range");
  CMat sx(2, 2), sy(2, 2), sz(2, 2), id = CMat::Identity(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  const CMat single[4] = {id, sx, sy, sz};

  const int d = 1 << n_qubits;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<CMat> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int idx = 0; idx < d * d; ++idx) {
    CMat op = CMat::Identity(1, 1);
    int rem = idx;
    // Most significant base-4 digit acts on qubit 0 so that idx=0 is I/sqrt(d).
    for (int q = n_qubits - 1; q >= 0; --q) {
      int digit = (rem >> (2 * q)) & 3;
      op = kron(op, single[digit]);
    }
    basis.push_back(norm * op);
  }
  return basis;
}

std::vector<CMat> weyl_basis(int d) {
  if (d < 2 || d > kDimCap) throw std::invalid_argument("d out of range");
  CMat shift = CMat::Zero(d, d);
  for (int j = 0; j < d; ++j) shift((j + 1) % d, j) = 1.0;
  CMat clock = CMat::Zero(d, d);
  for (int j = 0; j < d; ++j) clock(j, j) = std::polar(1.0, 2.0 * M_PI * j / d);

  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<CMat> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  CMat xa = CMat::Identity(d, d);
  for (int a = 0; a < d; ++a) {
    CMat op = xa;
    for (int b = 0; b < d; ++b) {
      basis.push_back(norm * op);
      op = op * clock;
    }
    xa = shift * xa;
  }
  return basis;
}

std::vector<CMat> operator_basis(int d) {
  if (is_power_of_two(d)) {
    int n = 0;
    while ((1 << n) < d) ++n;
    return pauli_string_basis(n);
  }
  return weyl_basis(d);
}

ChiMatrix chi_matrix(const QuantumChannel& ch) {
  check_square(ch);
  const int d = ch.d_in;
  const auto basis = operator_basis(d);
  const int n = d * d;

  ChiMatrix chi;
  chi.d = d;
  chi.basis_id = is_power_of_two(d) ? "pauli" : "weyl";
  chi.mat = CMat::Zero(n, n);
  CVec c(n);
  for (const auto& q : ch.kraus) {
    for (int k = 0; k < n; ++k) c(k) = (basis[k].adjoint() * q).trace();
    chi.mat += c * c.adjoint();
  }
  return chi;
}

double chi00(const QuantumChannel& ch) {
  check_square(ch);
  double acc = 0.0;
  for (const auto& k : ch.kraus) acc += std::norm(k.trace());
  return acc / ch.d_in;
}

KrausAngleDecomposition kraus_angle_decomposition(const QuantumChannel& ch) {
  check_square(ch);
  const int d = ch.d_in;
  const auto basis = operator_basis(d);
  const int n = d * d;

  KrausAngleDecomposition dec;
  for (const auto& op : ch.kraus) {
    CVec c(n);
    for (int k = 0; k < n; ++k) c(k) = (basis[k].adjoint() * op).trace();
    const double q = c.norm();
    if (q < 1e-14) {
      dec.q.push_back(0.0);
      dec.phi.push_back(0.0);
      dec.v.push_back(CVec::Zero(n - 1));
      continue;
    }
    // Gauge: rotate the global phase so <B_0, Q> is real nonnegative.
    if (std::abs(c(0)) > 1e-14) c *= std::polar(1.0, -std::arg(c(0)));
    const double cos_phi = std::clamp(c(0).real() / q, 0.0, 1.0);
    const double phi = std::acos(cos_phi);
    CVec v = CVec::Zero(n - 1);
    const double sin_phi = std::sin(phi);
    if (sin_phi > 1e-14) v = c.tail(n - 1) / (q * sin_phi);
    dec.q.push_back(q);
    dec.phi.push_back(phi);
    dec.v.push_back(std::move(v));
  }
  return dec;
}

CMat reconstruct_kraus(const KrausAngleDecomposition& dec, int i, int d) {
  const auto basis = operator_basis(d);
  const int n = d * d;
  const double q = dec.q.at(static_cast<std::size_t>(i));
  const double phi = dec.phi.at(static_cast<std::size_t>(i));
  const CVec& v = dec.v.at(static_cast<std::size_t>(i));
  CMat out = q * std::cos(phi) * basis[0];
  for (int k = 1; k < n; ++k) out += q * std::sin(phi) * v(k - 1) * basis[k];
  return out;
}

}  // namespace qecb
