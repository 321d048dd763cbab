#include "qecb/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qecb {

namespace {

void check_dim(int d) {
  if (d < 1 || d > kDimCap) {
    throw std::invalid_argument("dimension out of range [1, " +
                                std::to_string(kDimCap) + "]: " +
                                std::to_string(d));
  }
}

void check_finite(const CMat& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("matrix has non-finite entries");
  }
}

}  // namespace

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMat dagger(const CMat& m) { return m.adjoint(); }

bool is_density_matrix(const CMat& rho, double tol) {
  if (rho.rows() != rho.cols()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    return false;
  Eigen::SelfAdjointEigenSolver<CMat> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > -tol;
}

QuantumChannel identity_channel(int d) {
  check_dim(d);
  return {d, d, {CMat::Identity(d, d)}};
}

QuantumChannel unitary_channel(const CMat& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitary must be square");
  check_dim(static_cast<int>(u.rows()));
  if ((u.adjoint() * u - CMat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() >
      1e-10) {
    throw std::invalid_argument("matrix is not unitary");
  }
  return {static_cast<int>(u.rows()), static_cast<int>(u.rows()), {u}};
}

QuantumChannel depolarizing(int d, double p) {
  check_dim(d);
  if (d < 2) throw std::invalid_argument("depolarizing requires d >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");

  // Weyl shift/clock operators: the uniform average over all d^2 of them
  // is the completely depolarizing map.
  CMat shift = CMat::Zero(d, d);
  for (int j = 0; j < d; ++j) shift((j + 1) % d, j) = 1.0;
  CMat clock = CMat::Zero(d, d);
  const double two_pi = 2.0 * M_PI;
  for (int j = 0; j < d; ++j)
    clock(j, j) = std::polar(1.0, two_pi * j / d);

  std::vector<CMat> kraus;
  kraus.reserve(static_cast<std::size_t>(d) * d);
  kraus.push_back(std::sqrt(1.0 - p + p / (d * d)) * CMat::Identity(d, d));
  const double w = std::sqrt(p) / d;
  if (p > 0.0) {
    CMat xa = CMat::Identity(d, d);
    for (int a = 0; a < d; ++a) {
      CMat op = xa;
      for (int b = 0; b < d; ++b) {
        if (a != 0 || b != 0) kraus.push_back(w * op);
        op = op * clock;
      }
      xa = shift * xa;
    }
  }
  return {d, d, std::move(kraus)};
}

QuantumChannel amplitude_damping(double theta) {
  if (theta < 0.0 || theta > 1.0)
    throw std::invalid_argument("theta outside [0,1]");
  CMat n0 = CMat::Zero(2, 2);
  n0(0, 0) = 1.0;
  n0(1, 1) = std::sqrt(1.0 - theta);
  CMat n1 = CMat::Zero(2, 2);
  n1(0, 1) = std::sqrt(theta);
  return {2, 2, {n0, n1}};
}

QuantumChannel random_channel(int d_in, int d_out, int kraus_count,
                              std::uint64_t seed) {
  check_dim(d_in);
  check_dim(d_out);
  if (kraus_count < 1 || kraus_count > d_in * d_out)
    throw std::invalid_argument("kraus_count outside [1, d_in*d_out]");
  if (kraus_count * d_out < d_in)
    throw std::invalid_argument("kraus_count*d_out < d_in: no isometry exists");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat block(kraus_count * d_out, d_in);
  for (Eigen::Index i = 0; i < block.rows(); ++i)
    for (Eigen::Index j = 0; j < block.cols(); ++j)
      block(i, j) = Complex(gauss(rng), gauss(rng));

  Eigen::HouseholderQR<CMat> qr(block);
  CMat q = qr.householderQ() * CMat::Identity(block.rows(), d_in);
  std::vector<CMat> kraus(static_cast<std::size_t>(kraus_count));
  for (int k = 0; k < kraus_count; ++k)
    kraus[static_cast<std::size_t>(k)] = q.block(k * d_out, 0, d_out, d_in);
  return {d_in, d_out, std::move(kraus)};
}

CMat apply(const QuantumChannel& ch, const CMat& rho) {
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in)
    throw std::invalid_argument("state dimension does not match channel input");
  check_finite(rho);
  CMat out = CMat::Zero(ch.d_out, ch.d_out);
  for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

QuantumChannel compose(const QuantumChannel& outer, const QuantumChannel& inner) {
  if (inner.d_out != outer.d_in)
    throw std::invalid_argument("compose: inner output != outer input");
  std::vector<CMat> kraus;
  kraus.reserve(outer.kraus.size() * inner.kraus.size());
  for (const auto& s : outer.kraus)
    for (const auto& q : inner.kraus) kraus.push_back(s * q);
  return {inner.d_in, outer.d_out, std::move(kraus)};
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.d_in * b.d_in > kDimCap || a.d_out * b.d_out > kDimCap)
    throw std::invalid_argument("tensor: dimension cap exceeded");
  std::vector<CMat> kraus;
  kraus.reserve(a.kraus.size() * b.kraus.size());
  for (const auto& ka : a.kraus)
    for (const auto& kb : b.kraus) kraus.push_back(kron(ka, kb));
  return {a.d_in * b.d_in, a.d_out * b.d_out, std::move(kraus)};
}

QuantumChannel tensor_power(const QuantumChannel& ch, int n) {
  if (n < 1) throw std::invalid_argument("tensor_power: n >= 1 required");
  QuantumChannel out = ch;
  for (int i = 1; i < n; ++i) out = tensor(out, ch);
  return out;
}

QuantumChannel adjoint_channel(const QuantumChannel& ch) {
  std::vector<CMat> kraus;
  kraus.reserve(ch.kraus.size());
  for (const auto& k : ch.kraus) kraus.push_back(k.adjoint());
  return {ch.d_out, ch.d_in, std::move(kraus)};
}

ChoiMatrix kraus_to_choi(const QuantumChannel& ch) {
  const int n = ch.d_in * ch.d_out;
  CMat choi = CMat::Zero(n, n);
  CVec v(n);
  for (const auto& k : ch.kraus) {
    // v[(r,b)] = <b|K|r>, i.e. (I (x) K)|Gamma>.
    for (int r = 0; r < ch.d_in; ++r)
      for (int b = 0; b < ch.d_out; ++b) v(r * ch.d_out + b) = k(b, r);
    choi += v * v.adjoint();
  }
  return {ch.d_in, ch.d_out, std::move(choi)};
}

QuantumChannel choi_to_kraus(const ChoiMatrix& choi) {
  const int n = choi.d_in * choi.d_out;
  if (choi.mat.rows() != n || choi.mat.cols() != n)
    throw std::invalid_argument("choi matrix size mismatch");
  Eigen::SelfAdjointEigenSolver<CMat> es(choi.mat);
  if (es.eigenvalues().minCoeff() < -kTolPsd)
    throw std::invalid_argument("choi matrix is not PSD within tolerance");
  std::vector<CMat> kraus;
  for (int idx = 0; idx < n; ++idx) {
    const double lam = es.eigenvalues()(idx);
    if (lam <= kTolPsd) continue;
    const double s = std::sqrt(lam);
    CMat k(choi.d_out, choi.d_in);
    for (int r = 0; r < choi.d_in; ++r)
      for (int b = 0; b < choi.d_out; ++b)
        k(b, r) = s * es.eigenvectors()(r * choi.d_out + b, idx);
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) kraus.push_back(CMat::Zero(choi.d_out, choi.d_in));
  return {choi.d_in, choi.d_out, std::move(kraus)};
}

CptpReport validate_cptp(const QuantumChannel& ch, double tol) {
  CMat acc = CMat::Zero(ch.d_in, ch.d_in);
  for (const auto& k : ch.kraus) {
    check_finite(k);
    acc += k.adjoint() * k;
  }
  CptpReport report;
  report.tp_residual = (acc - CMat::Identity(ch.d_in, ch.d_in)).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<CMat> es(kraus_to_choi(ch).mat,
                                         Eigen::EigenvaluesOnly);
  report.psd_min_eigenvalue = es.eigenvalues().minCoeff();
  report.pass = report.tp_residual <= tol && report.psd_min_eigenvalue >= -kTolPsd;
  return report;
}

QuantumChannel prune_kraus(const QuantumChannel& ch, double tol) {
  std::vector<CMat> kept;
  for (const auto& k : ch.kraus)
    if (k.norm() >= tol) kept.push_back(k);
  if (kept.empty()) kept.push_back(CMat::Zero(ch.d_out, ch.d_in));
  return {ch.d_in, ch.d_out, std::move(kept)};
}

double choi_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.d_in != b.d_in || a.d_out != b.d_out)
    throw std::invalid_argument("choi_distance: dimension mismatch");
  return (kraus_to_choi(a).mat - kraus_to_choi(b).mat).norm();
}

}  // namespace qecb
