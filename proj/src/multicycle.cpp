#include "qecb/multicycle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qecb/ad41.hpp"
#include "qecb/fidelity.hpp"

namespace qecb {

double recurrence_upper(double fe_prev, double fe_n) {
  if (fe_prev < 0.0 || fe_prev > 1.0 || fe_n < 0.0 || fe_n > 1.0)
    throw std::invalid_argument("fidelities outside [0,1]");
  const double c = std::cos(error_angle_of_fe(fe_prev) - error_angle_of_fe(fe_n));
  return c * c;
}

CompositeCheck composite_chi00_check(const QuantumChannel& q,
                                     const QuantumChannel& s) {
  if (!q.square() || !s.square() || q.d_in != s.d_in)
    throw std::invalid_argument("composite check: matching square channels required");
  CompositeCheck r;
  r.actual = entanglement_fidelity(compose(s, q));
  r.bound = recurrence_upper(entanglement_fidelity(q), entanglement_fidelity(s));
  r.holds = r.actual <= r.bound + 1e-10;
  return r;
}

double delta_shift(double fe, double delta_fe) {
  if (fe <= 0.0 || fe >= 1.0)
    throw std::invalid_argument("delta_shift: fe must be interior to (0,1)");
  if (delta_fe < 0.0) throw std::invalid_argument("delta_shift: delta_fe >= 0");
  return delta_fe / (2.0 * std::sqrt(fe * (1.0 - fe)));
}

double spectator_multicycle_term(double theta_n, double fe_prev,
                                 const SpectatorConfig& cfg) {
  if (fe_prev <= 0.0 || fe_prev >= 1.0)
    throw std::invalid_argument("fe_prev must be interior to (0,1)");
  const double fe_n = fe_optimal(theta_n);
  if (fe_n <= 0.0 || fe_n >= 1.0)
    throw std::invalid_argument("single-cycle fidelity degenerate at this theta");
  const double delta_prev = error_angle_of_fe(fe_prev);
  const double delta_n = error_angle_of_fe(fe_n);
  const double g = h_func(theta_n);
  return g * std::sin(2.0 * (delta_prev - delta_n)) /
         (2.0 * std::sqrt(fe_n * (1.0 - fe_n))) * qcrb_variance(theta_n, cfg);
}

std::vector<Fig4Row> fig4_data(const std::vector<double>& fe_prev_list,
                               const std::vector<double>& theta_grid,
                               const SpectatorConfig& cfg) {
  std::vector<Fig4Row> rows;
  rows.reserve(fe_prev_list.size() * theta_grid.size());
  for (double fe_prev : fe_prev_list) {
    for (double theta : theta_grid) {
      Fig4Row r;
      r.fe_prev = fe_prev;
      r.theta_n = theta;
      r.bound_perfect = recurrence_upper(fe_prev, fe_optimal(theta));
      r.bound_incomplete_raw =
          r.bound_perfect + spectator_multicycle_term(theta, fe_prev, cfg);
      r.bound_incomplete = std::min(1.0, r.bound_incomplete_raw);
      r.advantage = r.bound_incomplete_raw > r.bound_perfect;
      rows.push_back(r);
    }
  }
  return rows;
}

BoundSeries iterate_bounds(const CycleTrace& trace,
                           const std::function<double(double)>& fe_single,
                           const std::function<double(double, double)>& gap) {
  if (trace.thetas.empty() || trace.thetas.size() != trace.theta_hats.size())
    throw std::invalid_argument("trace: nonempty equal-length lists required");
  BoundSeries out;
  double l = 0.0;
  for (std::size_t k = 0; k < trace.thetas.size(); ++k) {
    const double fe_k = std::clamp(
        fe_single(trace.thetas[k]) - gap(trace.thetas[k], trace.theta_hats[k]),
        0.0, 1.0);
    const double delta_k = error_angle_of_fe(fe_k);
    // The recurrence lets a new cycle's error angle cancel accumulated error;
    // the residual lower bound can never go negative.
    l = k == 0 ? delta_k : std::max(0.0, l - delta_k);
    out.delta_lower.push_back(l);
    out.fe_upper.push_back(std::cos(l) * std::cos(l));
  }
  return out;
}

}  // namespace qecb
