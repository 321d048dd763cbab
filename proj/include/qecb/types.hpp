#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace qecb {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Largest Hilbert-space dimension the library will touch (4 qubits plus
/// headroom for recovery environments).
inline constexpr int kDimCap = 64;

/// Tolerance on the trace-preservation residual ||sum K_i^dag K_i - I||_inf.
inline constexpr double kTolCptp = 1e-9;

/// Eigenvalues above -kTolPsd count as nonnegative.
inline constexpr double kTolPsd = 1e-9;

/// Slack used when asserting analytic inequalities on estimated quantities;
/// separates float noise from genuine violations.
inline constexpr double kTolReport = 1e-6;

}  // namespace qecb
