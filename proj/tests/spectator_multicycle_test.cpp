#include <doctest.h>

#include <cmath>
#include <random>

#include "qecb/ad41.hpp"
#include "qecb/channel.hpp"
#include "qecb/fidelity.hpp"
#include "qecb/multicycle.hpp"
#include "qecb/spectator.hpp"

using namespace qecb;

TEST_CASE("spectator damping probability") {
  CHECK(f_gamma(0.1, 1.0) == doctest::Approx(0.1));
  CHECK(f_gamma(0.1, 2.0) == doctest::Approx(0.19));
  CHECK(f_gamma(0.0, 3.0) == doctest::Approx(0.0));
  CHECK(f_gamma(1.0, 3.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(f_gamma(-0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(f_gamma(0.5, 0.5), std::invalid_argument);
}

TEST_CASE("quantum fisher information and QCRB variance") {
  SpectatorConfig cfg{1.0, 1};
  CHECK(qfi_spectator(0.1, cfg) == doctest::Approx(1.0 / 0.09));
  CHECK(qcrb_variance(0.1, cfg) == doctest::Approx(0.09));

  SpectatorConfig cfg4{1.0, 4};
  CHECK(qcrb_variance(0.1, cfg4) == doctest::Approx(0.09 / 4.0));

  CHECK_THROWS_AS(qfi_spectator(0.0, cfg), std::domain_error);
  CHECK_THROWS_AS(qfi_spectator(1.0, cfg), std::domain_error);
  CHECK_THROWS_AS(qfi_spectator(0.1, SpectatorConfig{0.5, 1}),
                  std::invalid_argument);
}

TEST_CASE("numeric curvature matches the analytic sensitivity") {
  auto fe = [](double theta, double theta_hat) {
    return fe_best_guess(theta, theta_hat);
  };
  for (double theta : {0.05, 0.1, 0.3})
    CHECK(g_numeric(fe, theta) == doctest::Approx(h_func(theta)).epsilon(1e-4));
  CHECK_THROWS_AS(g_numeric(fe, 0.1, -1.0), std::invalid_argument);
}

TEST_CASE("mean fidelity loss: frozen value and scaling") {
  SpectatorConfig cfg{1.0, 1};
  CHECK(mean_delta_fe(0.1, cfg) == doctest::Approx(0.02176833459).epsilon(1e-8));
  // Loss shrinks like 1/M as the spectator register grows.
  CHECK(mean_delta_fe(0.1, SpectatorConfig{1.0, 8}) ==
        doctest::Approx(mean_delta_fe(0.1, cfg) / 8.0).epsilon(1e-12));
}

TEST_CASE("truncated-normal sampler: support, determinism, moments") {
  EstimateModel model{0.3, 0.0025};
  std::mt19937_64 rng(11);
  double sum = 0.0, sumsq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = sample_estimate(model, rng);
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  // Far from the edges the truncation is negligible.
  CHECK(mean == doctest::Approx(0.3).epsilon(2e-3));
  CHECK(var == doctest::Approx(0.0025).epsilon(5e-2));

  std::mt19937_64 r1(5), r2(5);
  CHECK(sample_estimate(model, r1) == sample_estimate(model, r2));
  CHECK(sample_estimate(EstimateModel{0.4, 0.0}, r1) == 0.4);
  CHECK_THROWS_AS(sample_estimate(EstimateModel{0.4, -1.0}, r1),
                  std::invalid_argument);
}

TEST_CASE("fig3 rows are consistent") {
  auto rows = fig3_data({1.0, 2.0}, {0.05, 0.1, 0.2}, 1);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.fe_perfect == doctest::Approx(fe_optimal(r.theta)).epsilon(1e-12));
    CHECK(r.fe_incomplete == doctest::Approx(r.fe_perfect - r.gap).epsilon(1e-12));
    CHECK(r.gap > 0.0);
  }
  // At small theta a faster spectator sits at larger f, where the Fisher
  // information M/(f(1-f)) is lower, so the gap grows with gamma.
  CHECK(rows[3].gap > rows[0].gap);
}

TEST_CASE("recurrence bound: frozen value, symmetry, endpoints") {
  CHECK(recurrence_upper(0.99, 0.95) == doctest::Approx(0.98431).epsilon(1e-4));
  CHECK(recurrence_upper(0.99, 0.95) ==
        doctest::Approx(recurrence_upper(0.95, 0.99)).epsilon(1e-14));
  CHECK(recurrence_upper(1.0, 0.9) == doctest::Approx(0.9));
  CHECK(recurrence_upper(0.7, 0.7) == doctest::Approx(1.0));
  CHECK_THROWS_AS(recurrence_upper(1.2, 0.5), std::invalid_argument);
}

TEST_CASE("composite fidelity obeys the recurrence bound") {
  for (std::uint64_t seed : {4u, 19u, 33u}) {
    auto q = random_channel(2, 2, 3, seed);
    auto s = random_channel(2, 2, 3, seed + 50);
    auto chk = composite_chi00_check(q, s);
    CHECK(chk.holds);
    CHECK(chk.actual <= chk.bound + 1e-10);
  }
  // Two rotations about the same axis saturate the bound.
  auto rot = [](double a) {
    CMat v(2, 2);
    v << std::polar(1.0, a), 0.0, 0.0, std::polar(1.0, -a);
    return unitary_channel(v);
  };
  auto chk = composite_chi00_check(rot(0.2), rot(-0.1));
  CHECK(chk.actual == doctest::Approx(chk.bound).epsilon(1e-10));
}

TEST_CASE("angle shift from a fidelity perturbation") {
  CHECK(delta_shift(0.96, 0.01) == doctest::Approx(0.025516).epsilon(1e-4));
  // Matches the actual change of error angle to first order.
  const double fe = 0.9, dfe = 1e-5;
  const double actual = error_angle_of_fe(fe - dfe) - error_angle_of_fe(fe);
  CHECK(delta_shift(fe, dfe) == doctest::Approx(actual).epsilon(1e-4));
  CHECK_THROWS_AS(delta_shift(1.0, 0.01), std::invalid_argument);
}

TEST_CASE("estimate-noise correction term") {
  SpectatorConfig cfg{1.0, 1};
  CHECK(spectator_multicycle_term(0.1, 0.97, cfg) ==
        doctest::Approx(0.00977).epsilon(2e-3));
  // Sign flips with the ordering of the two error angles.
  const double fe_n = fe_optimal(0.1);
  CHECK(spectator_multicycle_term(0.1, fe_n - 0.01, cfg) > 0.0);
  CHECK(spectator_multicycle_term(0.1, fe_n + 0.005, cfg) < 0.0);
  CHECK_THROWS_AS(spectator_multicycle_term(0.1, 1.0, cfg),
                  std::invalid_argument);
}

TEST_CASE("fig4 rows: clipping and advantage flag") {
  SpectatorConfig cfg{1.0, 1};
  auto rows = fig4_data({0.99, 0.95}, {0.05, 0.1, 0.15}, cfg);
  REQUIRE(rows.size() == 6);
  bool saw_advantage = false;
  for (const auto& r : rows) {
    CHECK(r.bound_incomplete <= 1.0);
    CHECK(r.bound_incomplete <= r.bound_incomplete_raw + 1e-15);
    CHECK(r.advantage == (r.bound_incomplete_raw > r.bound_perfect));
    saw_advantage = saw_advantage || r.advantage;
  }
  CHECK(saw_advantage);
}

TEST_CASE("iterated bounds over a cycle trace") {
  // Perfect estimates and a fixed single-cycle fidelity: angles cancel and
  // the bound returns to 1 after the second cycle.
  CycleTrace trace{{0.1, 0.1, 0.1}, {0.1, 0.1, 0.1}};
  auto fe_single = [](double) { return 0.99; };
  auto gap = [](double, double) { return 0.0; };
  auto series = iterate_bounds(trace, fe_single, gap);
  REQUIRE(series.fe_upper.size() == 3);
  CHECK(series.fe_upper[0] == doctest::Approx(0.99));
  CHECK(series.fe_upper[1] == doctest::Approx(1.0));
  CHECK(series.fe_upper[2] == doctest::Approx(1.0));
  CHECK(series.delta_lower[1] == doctest::Approx(0.0));

  // With an estimate gap every cycle is strictly lossier.
  auto lossy = iterate_bounds(trace, fe_single, [](double, double) { return 0.05; });
  CHECK(lossy.fe_upper[0] < series.fe_upper[0]);

  CHECK_THROWS_AS(iterate_bounds(CycleTrace{{0.1}, {}}, fe_single, gap),
                  std::invalid_argument);
}
