#include <doctest.h>

#include <cmath>

#include "qecb/channel.hpp"
#include "qecb/diamond.hpp"
#include "qecb/fidelity.hpp"
#include "qecb/twirl.hpp"

using namespace qecb;

TEST_CASE("pauli twirl produces a Pauli channel with unchanged fe") {
  auto q = random_channel(2, 2, 3, 9);
  auto t = twirl_discrete(q, pauli_ensemble(1));

  CHECK(entanglement_fidelity(t) ==
        doctest::Approx(entanglement_fidelity(q)).epsilon(1e-12));
  CHECK(validate_cptp(t).pass);

  auto chi = chi_matrix(t);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(chi.mat(i, j)) < 1e-10);
}

TEST_CASE("twirling the identity with any ensemble is the identity") {
  for (const auto& e : {pauli_ensemble(1), clifford_ensemble_1q()})
    CHECK(choi_distance(twirl_discrete(identity_channel(2), e),
                        identity_channel(2)) < 1e-10);
}

TEST_CASE("depolarizing is a fixed point of the clifford twirl") {
  auto dep = depolarizing(2, 0.3);
  CHECK(choi_distance(twirl_discrete(dep, clifford_ensemble_1q()), dep) < 1e-10);
}

TEST_CASE("clifford twirl matches the analytic haar twirl") {
  for (std::uint64_t seed : {2u, 6u}) {
    auto q = random_channel(2, 2, 4, seed);
    CHECK(choi_distance(twirl_discrete(q, clifford_ensemble_1q()),
                        haar_twirl_analytic(q)) < 1e-9);
  }
  CHECK(choi_distance(haar_twirl_analytic(amplitude_damping(0.1)),
                      depolarizing(2, 0.06754446796632412)) < 1e-10);
}

TEST_CASE("haar twirl handles p beyond 1") {
  CMat x(2, 2);
  x << 0, 1, 1, 0;
  auto t = haar_twirl_analytic(unitary_channel(x));  // F_avg = 1/3, p = 4/3
  CHECK(validate_cptp(t).pass);
  CHECK(average_fidelity(t) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("ensemble validation") {
  UnitaryEnsemble bad;
  bad.unitaries = {CMat::Identity(2, 2)};
  bad.weights = {0.5};
  CHECK_THROWS_AS(twirl_discrete(identity_channel(2), bad),
                  std::invalid_argument);
  bad.weights = {1.0};
  bad.unitaries = {2.0 * CMat::Identity(2, 2)};
  CHECK_THROWS_AS(twirl_discrete(identity_channel(2), bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(pauli_ensemble(4), std::invalid_argument);
}

TEST_CASE("twirl does not increase distinguishability") {
  auto rep = check_twirl_dpi(amplitude_damping(0.3), amplitude_damping(0.1),
                             clifford_ensemble_1q());
  CHECK(rep.holds);
  CHECK(rep.lhs >= rep.rhs - 1e-6);
}

TEST_CASE("diamond estimate: identical channels and depolarizing pairs") {
  auto est0 = diamond_lower_estimate(depolarizing(2, 0.3), depolarizing(2, 0.3));
  CHECK(est0.value == doctest::Approx(0.0).epsilon(1e-10));

  for (auto [p1, p2] : {std::pair{0.0, 1.0}, {0.2, 0.5}, {0.9, 0.3}}) {
    auto est = diamond_lower_estimate(depolarizing(2, p1), depolarizing(2, p2));
    const double exact = diamond_depolarizing_exact(p1, p2, 2);
    CHECK(est.value == doctest::Approx(exact).epsilon(1e-7));
    CHECK(est.value <= exact + 1e-9);
    CHECK(est.converged);
  }
}

TEST_CASE("diamond estimate is deterministic per seed") {
  auto q = random_channel(2, 2, 3, 21);
  auto s = random_channel(2, 2, 3, 22);
  DiamondOptions opts;
  opts.seed = 5;
  auto a = diamond_lower_estimate(q, s, opts);
  auto b = diamond_lower_estimate(q, s, opts);
  CHECK(a.value == b.value);
  CHECK((a.achieving_state - b.achieving_state).norm() == 0.0);
}

TEST_CASE("diamond sandwich: fe bound <= estimate <= choi upper") {
  for (std::uint64_t seed : {3u, 8u, 15u}) {
    auto q = random_channel(2, 2, 2, seed);
    auto s = random_channel(2, 2, 2, seed + 100);
    const double lo = fe_lower_bound(q, s);
    const double est = diamond_lower_estimate(q, s).value;
    const double hi = diamond_upper_choi(q, s);
    CHECK(lo <= est + 1e-6);
    CHECK(est <= hi + 1e-9);
  }
}

TEST_CASE("depolarizing exact formula and kappa") {
  CHECK(kappa(2) == doctest::Approx(0.75));
  CHECK(kappa(4) == doctest::Approx(15.0 / 16.0));
  CHECK(diamond_depolarizing_exact(0.0, 1.0, 2) == doctest::Approx(0.75));
  CHECK(diamond_depolarizing_exact(0.3, 0.3, 3) == doctest::Approx(0.0));
  CHECK_THROWS_AS(diamond_depolarizing_exact(-0.1, 0.5, 2), std::invalid_argument);
}

TEST_CASE("choi upper bound on identical channels is zero") {
  auto q = random_channel(3, 3, 4, 17);
  CHECK(diamond_upper_choi(q, q) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spectator gap bound brackets the estimate") {
  auto r1 = amplitude_damping(0.05);
  auto r2 = amplitude_damping(0.08);
  auto gap = spectator_gap_bound(r1, r2);
  CHECK(gap.lower <= gap.upper + 1e-9);
  CHECK(gap.lower > 0.0);
  const double fe_gap = std::abs(entanglement_fidelity(r1) - entanglement_fidelity(r2));
  CHECK(fe_gap <= gap.upper + 1e-9);
}

TEST_CASE("chaining bounds") {
  CHECK(chaining_upper_single(0.1, 0.02) == doctest::Approx(0.12));
  auto rep = chaining_upper_multi({0.1, 0.2}, {0.01, 0.03});
  CHECK(rep.channel_gap == doctest::Approx(0.3));
  CHECK(rep.epsilon_theta == doctest::Approx(0.04));
  CHECK(rep.total == doctest::Approx(0.34));
  REQUIRE(rep.per_cycle.size() == 2);
  CHECK(rep.per_cycle[0] == doctest::Approx(0.11));
  CHECK(rep.per_cycle[1] == doctest::Approx(0.23));
  CHECK_THROWS_AS(chaining_upper_multi({0.1}, {0.1, 0.2}), std::invalid_argument);
}
