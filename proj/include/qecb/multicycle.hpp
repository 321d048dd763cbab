#pragma once

#include <functional>
#include <vector>

#include "qecb/channel.hpp"
#include "qecb/spectator.hpp"

namespace qecb {

struct CycleTrace {
  std::vector<double> thetas;
  std::vector<double> theta_hats;
};

struct BoundSeries {
  std::vector<double> fe_upper;
  std::vector<double> delta_lower;  // error-angle lower bounds, fe = cos^2
};

struct CompositeCheck {
  double bound = 0.0;
  double actual = 0.0;
  bool holds = false;
};

struct Fig4Row {
  double fe_prev = 0.0;
  double theta_n = 0.0;
  double bound_perfect = 0.0;
  double bound_incomplete = 0.0;  // clipped at 1
  double bound_incomplete_raw = 0.0;
  bool advantage = false;
};

/// Recurrence bound cos^2(arccos sqrt(fe_prev) - arccos sqrt(fe_n));
/// symmetric in its arguments.
double recurrence_upper(double fe_prev, double fe_n);

/// F_e(S o Q) <= recurrence_upper(F_e(Q), F_e(S)).
CompositeCheck composite_chi00_check(const QuantumChannel& q,
                                     const QuantumChannel& s);

/// First-order angle shift delta_fe / (2 sqrt(fe (1 - fe))).
double delta_shift(double fe, double delta_fe);

/// Signed estimate-noise correction to the n-cycle bound:
/// g(theta_n) sin(2 delta_prev - 2 delta_n) / (2 sqrt(fe_n (1 - fe_n)))
/// times the QCRB variance. Sign encodes constructive vs destructive
/// interference of the error angles.
double spectator_multicycle_term(double theta_n, double fe_prev,
                                 const SpectatorConfig& cfg);

std::vector<Fig4Row> fig4_data(const std::vector<double>& fe_prev_list,
                               const std::vector<double>& theta_grid,
                               const SpectatorConfig& cfg);

/// Propagates the recurrence over a cycle trace. fe_single gives the
/// perfect-knowledge single-cycle fidelity at theta; gap the fidelity loss
/// from recovering with theta_hat instead.
BoundSeries iterate_bounds(const CycleTrace& trace,
                           const std::function<double(double)>& fe_single,
                           const std::function<double(double, double)>& gap);

}  // namespace qecb
