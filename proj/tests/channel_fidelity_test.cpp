#include <doctest.h>

#include <cmath>

#include "qecb/channel.hpp"
#include "qecb/fidelity.hpp"

using namespace qecb;

namespace {

CMat ketbra(int i, int j, int d) {
  CMat m = CMat::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("apply: identity, full depolarization, amplitude damping") {
  CMat rho = ketbra(0, 0, 2);
  CHECK((qecb::apply(identity_channel(2), rho) - rho).norm() == doctest::Approx(0.0));

  CMat out = qecb::apply(depolarizing(2, 1.0), rho);
  CHECK((out - CMat::Identity(2, 2) / 2.0).norm() == doctest::Approx(0.0).epsilon(1e-12));

  CMat damped = qecb::apply(amplitude_damping(0.1), ketbra(1, 1, 2));
  CHECK(damped(0, 0).real() == doctest::Approx(0.1));
  CHECK(damped(1, 1).real() == doctest::Approx(0.9));
  CHECK(std::abs(damped(0, 1)) == doctest::Approx(0.0));
}

TEST_CASE("apply rejects mismatched dimensions") {
  CHECK_THROWS_AS(qecb::apply(identity_channel(2), CMat::Identity(3, 3) / 3.0),
                  std::invalid_argument);
}

TEST_CASE("compose: identity neutral, AD and depolarizing parameter laws") {
  auto q = random_channel(2, 2, 3, 11);
  CHECK(choi_distance(compose(identity_channel(2), q), q) < 1e-12);

  for (double t1 : {0.1, 0.4, 0.9})
    for (double t2 : {0.0, 0.25, 0.8}) {
      auto lhs = compose(amplitude_damping(t2), amplitude_damping(t1));
      auto rhs = amplitude_damping(1.0 - (1.0 - t1) * (1.0 - t2));
      CHECK(choi_distance(lhs, rhs) < 1e-12);
    }
  auto lhs = compose(depolarizing(2, 0.5), depolarizing(2, 0.2));
  CHECK(choi_distance(lhs, depolarizing(2, 0.2 + 0.5 - 0.1)) < 1e-12);
}

TEST_CASE("tensor powers") {
  CHECK(choi_distance(tensor_power(identity_channel(2), 4), identity_channel(16)) <
        1e-12);
  CHECK(choi_distance(tensor_power(amplitude_damping(0.3), 1),
                      amplitude_damping(0.3)) < 1e-12);

  // All four qubits decaying from |1111> to |0000> has probability theta^4.
  auto n4 = tensor_power(amplitude_damping(0.1), 4);
  CMat rho = CMat::Zero(16, 16);
  rho(15, 15) = 1.0;
  CMat out = qecb::apply(n4, rho);
  CHECK(out.trace().real() == doctest::Approx(1.0));
  CHECK(out(0, 0).real() == doctest::Approx(1e-4));

  CHECK_THROWS_AS(tensor_power(identity_channel(16), 2), std::invalid_argument);
}

TEST_CASE("choi conversions") {
  auto choi_id = kraus_to_choi(identity_channel(2));
  CHECK(choi_id.mat.trace().real() == doctest::Approx(2.0));
  Eigen::SelfAdjointEigenSolver<CMat> es(choi_id.mat, Eigen::EigenvaluesOnly);
  int rank = 0;
  for (int i = 0; i < 4; ++i)
    if (es.eigenvalues()(i) > 1e-12) ++rank;
  CHECK(rank == 1);

  CHECK((kraus_to_choi(depolarizing(2, 1.0)).mat - CMat::Identity(4, 4) / 2.0)
            .norm() < 1e-12);

  auto ad = amplitude_damping(0.1);
  CHECK(choi_distance(ad, choi_to_kraus(kraus_to_choi(ad))) < 1e-12);
  CHECK(static_cast<int>(choi_to_kraus(kraus_to_choi(ad)).kraus.size()) <= 4);
}

TEST_CASE("validate_cptp") {
  CHECK(validate_cptp(identity_channel(2)).pass);
  CHECK(validate_cptp(identity_channel(2)).tp_residual == doctest::Approx(0.0));

  QuantumChannel half{2, 2, {0.5 * CMat::Identity(2, 2)}};
  auto rep = validate_cptp(half);
  CHECK(rep.tp_residual == doctest::Approx(0.75));
  CHECK_FALSE(rep.pass);

  CHECK(validate_cptp(amplitude_damping(0.3)).pass);
}

TEST_CASE("depolarizing constructor") {
  CHECK(choi_distance(depolarizing(2, 0.0), identity_channel(2)) < 1e-12);
  CHECK(entanglement_fidelity(depolarizing(2, 0.2)) == doctest::Approx(0.85));
  CHECK_THROWS_AS(depolarizing(2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(depolarizing(1, 0.5), std::invalid_argument);
}

TEST_CASE("amplitude damping endpoints") {
  CHECK(choi_distance(amplitude_damping(0.0), identity_channel(2)) < 1e-12);
  CMat out = qecb::apply(amplitude_damping(1.0), CMat::Identity(2, 2) / 2.0);
  CHECK(out(0, 0).real() == doctest::Approx(1.0));
  CHECK(entanglement_fidelity(amplitude_damping(0.1)) ==
        doctest::Approx(0.9493416490).epsilon(1e-9));
  CHECK_THROWS_AS(amplitude_damping(-0.1), std::invalid_argument);
}

TEST_CASE("random channels: determinism, CPTP, unitary case") {
  auto a = random_channel(2, 2, 4, 42);
  auto b = random_channel(2, 2, 4, 42);
  for (std::size_t i = 0; i < a.kraus.size(); ++i)
    CHECK((a.kraus[i] - b.kraus[i]).norm() == 0.0);

  for (std::uint64_t seed : {1u, 2u, 3u})
    CHECK(validate_cptp(random_channel(3, 3, 5, seed), 1e-10).pass);

  auto u = random_channel(2, 2, 1, 7);
  const double fe = entanglement_fidelity(u);
  CHECK(fe == doctest::Approx(std::norm(u.kraus[0].trace()) / 4.0).epsilon(1e-12));

  CHECK_THROWS_AS(random_channel(2, 2, 5, 1), std::invalid_argument);
}

TEST_CASE("state fidelity and trace distance") {
  CMat rho = ketbra(0, 0, 2);
  CMat sigma = ketbra(1, 1, 2);
  CMat mixed = CMat::Identity(2, 2) / 2.0;
  CHECK(state_fidelity(rho, rho) == doctest::Approx(1.0));
  CHECK(state_fidelity(rho, sigma) == doctest::Approx(0.0));
  CHECK(state_fidelity(rho, mixed) == doctest::Approx(0.5));
  CHECK(trace_distance(rho, rho) == doctest::Approx(0.0));
  CHECK(trace_distance(rho, sigma) == doctest::Approx(1.0));
  CHECK(trace_distance(rho, mixed) == doctest::Approx(0.5));
}

TEST_CASE("entanglement and average fidelity") {
  CHECK(entanglement_fidelity(identity_channel(3)) == doctest::Approx(1.0));
  CHECK(average_fidelity(identity_channel(2)) == doctest::Approx(1.0));
  CHECK(average_fidelity(depolarizing(2, 0.2)) == doctest::Approx(0.9));

  // Unitary X has zero trace: F_e = 0, so F_avg hits the 1/3 endpoint.
  CMat x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(entanglement_fidelity(unitary_channel(x)) == doctest::Approx(0.0));
  CHECK(average_fidelity(unitary_channel(x)) == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS_AS(entanglement_fidelity(QuantumChannel{2, 4, {CMat::Zero(4, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("error angle") {
  CHECK(error_angle(identity_channel(2)) == doctest::Approx(0.0));
  CHECK(error_angle_of_fe(0.85) == doctest::Approx(0.3976994).epsilon(1e-6));
  CHECK(error_angle_of_fe(0.0) == doctest::Approx(M_PI / 2));
}

TEST_CASE("chi matrix") {
  CHECK(chi00(identity_channel(2)) == doctest::Approx(2.0));
  CHECK(chi00(amplitude_damping(0.1)) / 2.0 ==
        doctest::Approx(entanglement_fidelity(amplitude_damping(0.1))).epsilon(1e-12));

  // Pauli channels have diagonal chi in the Pauli basis.
  auto chi = chi_matrix(depolarizing(2, 0.2));
  CHECK(chi.basis_id == "pauli");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(chi.mat(i, j)) < 1e-12);
  CHECK(chi.mat(0, 0).real() / 2.0 == doctest::Approx(0.85));
}

TEST_CASE("kraus angle decomposition") {
  auto dec_id = kraus_angle_decomposition(identity_channel(2));
  CHECK(dec_id.q[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(dec_id.phi[0] == doctest::Approx(0.0));

  auto dec_ad = kraus_angle_decomposition(amplitude_damping(0.3));
  CHECK(dec_ad.phi[1] == doctest::Approx(M_PI / 2));  // N1 is traceless

  auto q = random_channel(3, 3, 4, 5);
  auto dec = kraus_angle_decomposition(q);
  double acc = 0.0, qsum = 0.0;
  QuantumChannel rebuilt{3, 3, {}};
  for (std::size_t i = 0; i < dec.q.size(); ++i) {
    acc += dec.q[i] * dec.q[i] * std::cos(dec.phi[i]) * std::cos(dec.phi[i]);
    qsum += dec.q[i] * dec.q[i];
    rebuilt.kraus.push_back(reconstruct_kraus(dec, static_cast<int>(i), 3));
  }
  CHECK(acc == doctest::Approx(chi00(q)).epsilon(1e-12));
  CHECK(qsum == doctest::Approx(3.0).epsilon(1e-12));  // sum q_i^2 = d
  CHECK(choi_distance(q, rebuilt) < 1e-10);
}

TEST_CASE("weyl basis is orthonormal for non-power-of-two dims") {
  auto basis = weyl_basis(3);
  REQUIRE(basis.size() == 9);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex ip = (basis[i].adjoint() * basis[j]).trace();
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  CHECK((operator_basis(3)[0] - CMat::Identity(3, 3) / std::sqrt(3.0)).norm() <
        1e-12);
}
