#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpair/evolution.hpp"
#include "qpair/measures.hpp"
#include "test_helpers.hpp"

using namespace qpair;
using qtest::expm_taylor;
using qtest::random_state;

namespace {

const CouplingParams kTrio{kAlphaDefault, kAlphaDefault, kAlphaDefault};

CouplingParams random_params(std::mt19937_64& g) {
  return {qtest::uniform(g, -3, 3), qtest::uniform(g, -3, 3), qtest::uniform(g, -3, 3)};
}

TwoQubitBloch class2_state() {
  return product_state({BlochVec{1, 0, 0}}, {BlochVec{-1, 0, 0}});
}

}  // namespace

TEST_CASE("gammas at t = 0 and for zero coupling") {
  std::mt19937_64 g(301);
  for (int n = 0; n < 10; ++n) {
    const UnitaryGamma at0 = gammas(random_params(g), 0.0);
    CHECK(at0.g1 == Complex{1.0});
    CHECK(at0.g2 == Complex{1.0});
    CHECK(std::abs(at0.g3) == 0.0);
    CHECK(std::abs(at0.g4) == 0.0);

    const UnitaryGamma off = gammas({0, 0, 0}, qtest::uniform(g, -9, 9));
    CHECK(off.g1 == Complex{1.0});
    CHECK(off.g2 == Complex{1.0});
    CHECK(std::abs(off.g3) == 0.0);
    CHECK(std::abs(off.g4) == 0.0);
  }
}

TEST_CASE("gammas at the swap point of the pi/6 trio") {
  const UnitaryGamma gm = gammas(kTrio, 1.5);
  const Complex eighth = std::polar(1.0, -0.25 * std::acos(-1.0));  // e^{-i pi/4}
  CHECK(std::abs(gm.g1 - eighth) <= 1e-15);
  CHECK(std::abs(gm.g2) <= 1e-15);
  CHECK(std::abs(gm.g3 - eighth) <= 1e-15);
  CHECK(std::abs(gm.g4) <= 1e-15);
}

TEST_CASE("gamma block-unitarity invariants") {
  std::mt19937_64 g(302);
  for (int n = 0; n < 200; ++n) {
    const UnitaryGamma gm = gammas(random_params(g), qtest::uniform(g, -5, 5));
    CHECK(std::norm(gm.g1) + std::norm(gm.g4) == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::norm(gm.g2) + std::norm(gm.g3) == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::abs(gm.g1 * std::conj(gm.g4) + gm.g4 * std::conj(gm.g1)) <= 1e-12);
    CHECK(std::abs(gm.g2 * std::conj(gm.g3) + gm.g3 * std::conj(gm.g2)) <= 1e-12);
  }
}

TEST_CASE("unitary special values") {
  std::mt19937_64 g(303);
  CHECK(max_abs_diff(unitary(random_params(g), 0.0), CMat4::identity()) == 0.0);

  // pi/6 trio at t = 3: a global phase, U = -i I
  const CMat4 u3 = unitary(kTrio, 3.0);
  CHECK(max_abs_diff(u3, Complex{0.0, -1.0} * CMat4::identity()) <= 1e-15);

  // and at t = 1.5: e^{-i pi/4} times the swap permutation
  const CMat4 u15 = unitary(kTrio, 1.5);
  const Complex eighth = std::polar(1.0, -0.25 * std::acos(-1.0));
  CMat4 swap;
  swap(0, 0) = 1;
  swap(1, 2) = 1;
  swap(2, 1) = 1;
  swap(3, 3) = 1;
  CHECK(max_abs_diff(u15, eighth * swap) <= 1e-15);
}

TEST_CASE("unitarity over random couplings") {
  std::mt19937_64 g(304);
  for (int n = 0; n < 200; ++n) {
    const CMat4 u = unitary(random_params(g), qtest::uniform(g, -5, 5));
    CHECK(max_abs_diff(adjoint(u) * u, CMat4::identity()) <= 1e-12);
  }
}

TEST_CASE("unitary_oracle on a diagonal Hamiltonian") {
  std::mt19937_64 g(305);
  CHECK(max_abs_diff(unitary_oracle(random_params(g), 0.0), CMat4::identity()) <= 1e-12);

  const double a3 = 0.8, t = 1.7;
  const CMat4 u = unitary_oracle({0, 0, a3}, t);
  CMat4 expect;
  expect(0, 0) = std::polar(1.0, -a3 * t);
  expect(1, 1) = std::polar(1.0, a3 * t);
  expect(2, 2) = std::polar(1.0, a3 * t);
  expect(3, 3) = std::polar(1.0, -a3 * t);
  CHECK(max_abs_diff(u, expect) <= 1e-12);
}

TEST_CASE("closed form, eigendecomposition oracle and Taylor series agree") {
  std::mt19937_64 g(306);
  for (int n = 0; n < 200; ++n) {
    const CouplingParams p = random_params(g);
    const double t = qtest::uniform(g, -5, 5);
    const CMat4 u = unitary(p, t);
    CHECK(max_abs_diff(u, unitary_oracle(p, t)) <= 1e-9);
    CHECK(max_abs_diff(u, expm_taylor(Complex{0.0, -t} * coupling_hamiltonian(p))) <= 1e-10);
  }
}

TEST_CASE("group property") {
  std::mt19937_64 g(307);
  for (int n = 0; n < 100; ++n) {
    const CouplingParams p = random_params(g);
    const double t1 = qtest::uniform(g, -4, 4), t2 = qtest::uniform(g, -4, 4);
    CHECK(max_abs_diff(unitary(p, t1 + t2), unitary(p, t1) * unitary(p, t2)) <= 1e-10);
  }
}

TEST_CASE("evolve fixes t = 0 and swaps the second product class at t = 1.5") {
  std::mt19937_64 g(308);
  const TwoQubitBloch st = random_state(g);
  const TwoQubitBloch same = evolve(st, random_params(g), 0.0);
  CHECK(max_abs_diff(st.s, same.s) <= 1e-14);
  CHECK(max_abs_diff(st.t, same.t) <= 1e-14);
  CHECK(max_abs_diff(st.c, same.c) <= 1e-14);

  const TwoQubitBloch swapped = evolve(class2_state(), kTrio, 1.5);
  CHECK(swapped.s.x == Catch::Approx(-1.0).margin(1e-12));
  CHECK(std::abs(swapped.s.y) + std::abs(swapped.s.z) <= 1e-12);
  CHECK(swapped.t.x == Catch::Approx(1.0).margin(1e-12));
  CHECK(max_abs_diff(swapped.c, outer(swapped.s, swapped.t)) <= 1e-12);  // still a product
}

TEST_CASE("period-3 recurrence at the pi/6 trio") {
  std::mt19937_64 g(309);
  for (int n = 0; n < 20; ++n) {
    const TwoQubitBloch st = random_state(g);
    const double t = qtest::uniform(g, 0, 3);
    const TwoQubitBloch a = evolve(st, kTrio, t);
    const TwoQubitBloch b = evolve(st, kTrio, t + 3.0);
    CHECK(max_abs_diff(a.s, b.s) <= 1e-10);
    CHECK(max_abs_diff(a.t, b.t) <= 1e-10);
    CHECK(max_abs_diff(a.c, b.c) <= 1e-10);
  }
}

TEST_CASE("evolve conserves trace, hermiticity, spectrum and joint purity") {
  std::mt19937_64 g(310);
  for (int n = 0; n < 30; ++n) {
    const TwoQubitBloch st = random_state(g);
    const CMat4 m0 = to_matrix(st);
    const auto eig0 = eig_hermitian(m0);
    const double purity0 = trace(m0 * m0).real();

    const CMat4 mt = to_matrix(evolve(st, random_params(g), qtest::uniform(g, -5, 5)));
    CHECK(std::abs(trace(mt) - Complex{1.0}) <= 1e-10);
    CHECK(hermiticity_residual(mt) <= 1e-10);
    CHECK(trace(mt * mt).real() == Catch::Approx(purity0).margin(1e-12));
    const auto eigt = eig_hermitian(mt);
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(eigt.values[k] == Catch::Approx(eig0.values[k]).margin(1e-10));
  }
}

TEST_CASE("reduced_bloch_analytic reference points") {
  const TwoQubitBloch class1 = product_state({BlochVec{1, 0, 0}}, {BlochVec{}});
  const auto [sa0, tb0] = reduced_bloch_analytic(class1, kTrio, 0.0);
  CHECK(max_abs_diff(sa0.v, BlochVec{1, 0, 0}) <= 1e-15);
  CHECK(tb0.v.norm() <= 1e-15);

  const auto [sa, tb] = reduced_bloch_analytic(class1, kTrio, 1.5);
  CHECK(sa.v.norm() <= 1e-12);
  CHECK(max_abs_diff(tb.v, BlochVec{1, 0, 0}) <= 1e-12);

  const auto [sa2, tb2] = reduced_bloch_analytic(class2_state(), kTrio, 1.5);
  CHECK(max_abs_diff(sa2.v, BlochVec{-1, 0, 0}) <= 1e-12);
  CHECK(max_abs_diff(tb2.v, BlochVec{1, 0, 0}) <= 1e-12);
}

TEST_CASE("reduced_bloch_analytic matches evolve + partial trace") {
  std::mt19937_64 g(311);
  for (int n = 0; n < 60; ++n) {
    const TwoQubitBloch st = random_state(g);
    const CouplingParams p = random_params(g);  // asymmetric couplings included
    const double t = qtest::uniform(g, -5, 5);
    const TwoQubitBloch evolved = evolve(st, p, t);
    const auto [sa, tb] = reduced_bloch_analytic(st, p, t);
    CHECK(max_abs_diff(sa.v, evolved.s) <= 1e-9);
    CHECK(max_abs_diff(tb.v, evolved.t) <= 1e-9);
  }
}
