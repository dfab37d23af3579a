#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpair/smallmat.hpp"
#include "test_helpers.hpp"

using namespace qpair;
using qtest::random_hermitian;
using qtest::random_matrix;
using qtest::singlet_matrix;

TEST_CASE("matrix product") {
  const CMat4 id = CMat4::identity();
  CHECK(max_abs_diff(mat_mul(id, id), id) == 0.0);

  std::mt19937_64 g(101);
  const CMat4 a = random_hermitian<4>(g);
  CHECK(max_abs_diff(a * id, a) == 0.0);
  CHECK(max_abs_diff(id * a, a) == 0.0);

  // (sigma_x x I)(I x tau_x) multiplies out to sigma_x x tau_x.
  const CMat4 lhs = kron2(pauli(0), identity2()) * kron2(identity2(), pauli(0));
  CHECK(max_abs_diff(lhs, kron2(pauli(0), pauli(0))) == 0.0);
}

TEST_CASE("matrix product associativity") {
  std::mt19937_64 g(102);
  for (int n = 0; n < 50; ++n) {
    const CMat4 a = random_matrix<4>(g), b = random_matrix<4>(g), c = random_matrix<4>(g);
    const double scale = max_abs((a * b) * c);
    CHECK(max_abs_diff((a * b) * c, a * (b * c)) <= 1e-12 * std::max(scale, 1.0));
  }
}

TEST_CASE("adjoint") {
  const CMat4 id = CMat4::identity();
  CHECK(max_abs_diff(adjoint(id), id) == 0.0);

  std::mt19937_64 g(103);
  const CMat4 a = random_matrix<4>(g);
  CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);

  CMat4 d;
  d(0, 0) = Complex{0.0, 1.0};
  CMat4 expect;
  expect(0, 0) = Complex{0.0, -1.0};
  CHECK(max_abs_diff(adjoint(d), expect) == 0.0);
}

TEST_CASE("kron2 basics") {
  CHECK(max_abs_diff(kron2(identity2(), identity2()), CMat4::identity()) == 0.0);

  CMat4 zi;  // sigma_z x I = diag(1,1,-1,-1)
  zi(0, 0) = 1;
  zi(1, 1) = 1;
  zi(2, 2) = -1;
  zi(3, 3) = -1;
  CHECK(max_abs_diff(kron2(pauli(2), identity2()), zi) == 0.0);

  CMat4 xx;  // sigma_x x tau_x = antidiagonal ones
  xx(0, 3) = 1;
  xx(1, 2) = 1;
  xx(2, 1) = 1;
  xx(3, 0) = 1;
  CHECK(max_abs_diff(kron2(pauli(0), pauli(0)), xx) == 0.0);
}

TEST_CASE("kron2 mixed-product property") {
  std::mt19937_64 g(104);
  for (int n = 0; n < 50; ++n) {
    const CMat2 a = random_matrix<2>(g), b = random_matrix<2>(g);
    const CMat2 c = random_matrix<2>(g), d = random_matrix<2>(g);
    CHECK(max_abs_diff(kron2(a, b) * kron2(c, d), kron2(a * c, b * d)) <= 1e-12 * 16.0);
  }
}

TEST_CASE("trace") {
  CHECK(trace(CMat4::identity()) == Complex{4.0});
  CHECK(std::abs(trace(0.25 * CMat4::identity()) - Complex{1.0}) == 0.0);
  CHECK(std::abs(trace(singlet_matrix()) - Complex{1.0}) == 0.0);
}

TEST_CASE("eig_hermitian on diagonal input") {
  CMat4 d;
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  d(3, 3) = 4;
  const auto r = eig_hermitian(d);
  for (std::size_t k = 0; k < 4; ++k) CHECK(r.values[k] == Catch::Approx(k + 1.0).margin(1e-13));

  const auto m = eig_hermitian(0.25 * CMat4::identity());
  for (double v : m.values) CHECK(v == Catch::Approx(0.25).margin(1e-13));
}

TEST_CASE("eig_hermitian of the singlet partial transpose") {
  // Flipping the inner indices of the singlet projector leaves
  // diag(0, 1/2, 1/2, 0) and moves the -1/2 coherences to the corners; the
  // characteristic polynomial factors into (x - 1/2)^3 (x + 1/2).
  CMat4 pt;
  pt(1, 1) = 0.5;
  pt(2, 2) = 0.5;
  pt(0, 3) = -0.5;
  pt(3, 0) = -0.5;
  const auto r = eig_hermitian(pt);
  CHECK(r.values[0] == Catch::Approx(-0.5).margin(1e-12));
  CHECK(r.values[1] == Catch::Approx(0.5).margin(1e-12));
  CHECK(r.values[2] == Catch::Approx(0.5).margin(1e-12));
  CHECK(r.values[3] == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("eig_hermitian invariants on random Hermitian matrices") {
  std::mt19937_64 g(105);
  for (int n = 0; n < 60; ++n) {
    const CMat4 a = random_hermitian<4>(g, 2.0);
    const auto r = eig_hermitian(a);

    for (std::size_t k = 0; k + 1 < 4; ++k) CHECK(r.values[k] <= r.values[k + 1]);

    // eigenvalue sums against trace and trace of the square
    double sum = 0.0, sum2 = 0.0;
    for (double v : r.values) {
      sum += v;
      sum2 += v * v;
    }
    CHECK(sum == Catch::Approx(trace(a).real()).margin(1e-10));
    CHECK(sum2 == Catch::Approx(trace(a * a).real()).margin(1e-10));

    // reconstruction and orthonormality
    CMat4 lam;
    for (std::size_t k = 0; k < 4; ++k) lam(k, k) = r.values[k];
    CHECK(max_abs_diff(r.vectors * lam * adjoint(r.vectors), a) <= 1e-10);
    CHECK(max_abs_diff(adjoint(r.vectors) * r.vectors, CMat4::identity()) <= 1e-10);

    // per-column residual ||A v_k - lambda_k v_k||
    const double anorm = frobenius_norm(a);
    const CMat4 av = a * r.vectors;
    for (std::size_t k = 0; k < 4; ++k) {
      double res = 0.0;
      for (std::size_t i = 0; i < 4; ++i)
        res += std::norm(av(i, k) - r.values[k] * r.vectors(i, k));
      CHECK(std::sqrt(res) <= 1e-10 * std::max(anorm, 1.0));
    }
  }
}

TEST_CASE("eig_hermitian works on 2x2 blocks") {
  CMat2 m;
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  m(0, 1) = Complex{0.1, 0.2};
  m(1, 0) = Complex{0.1, -0.2};
  const auto r = eig_hermitian(m);
  CHECK(r.values[0] + r.values[1] == Catch::Approx(1.0).margin(1e-12));
  CMat2 lam;
  lam(0, 0) = r.values[0];
  lam(1, 1) = r.values[1];
  CHECK(max_abs_diff(r.vectors * lam * adjoint(r.vectors), m) <= 1e-12);
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  CMat4 m;
  m(0, 1) = Complex{1.0, 0.0};  // m(1,0) stays 0
  CHECK_THROWS_AS(eig_hermitian(m), NotHermitianError);
}
