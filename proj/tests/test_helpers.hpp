#pragma once

// Shared generators and comparison helpers for the unit suites. All
// randomness is seeded per test case so every run sees the same samples.

#include <cstddef>
#include <random>

#include "qpair/bloch.hpp"
#include "qpair/smallmat.hpp"

namespace qtest {

using qpair::BlochVec;
using qpair::CMat2;
using qpair::CMat4;
using qpair::Complex;
using qpair::TwoQubitBloch;

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Complex rand_complex(std::mt19937_64& g, double scale = 1.0) {
  return {uniform(g, -scale, scale), uniform(g, -scale, scale)};
}

template <std::size_t N>
inline qpair::SquareMatrix<Complex, N> random_matrix(std::mt19937_64& g, double scale = 1.0) {
  qpair::SquareMatrix<Complex, N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = rand_complex(g, scale);
  return m;
}

template <std::size_t N>
inline qpair::SquareMatrix<Complex, N> random_hermitian(std::mt19937_64& g, double scale = 1.0) {
  const auto m = random_matrix<N>(g, scale);
  qpair::SquareMatrix<Complex, N> h;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

// Random mixture of up to four random pure projectors: a generic valid
// density matrix with a full-rank tendency.
inline CMat4 random_density4(std::mt19937_64& g, int terms = 3) {
  CMat4 rho;
  double wsum = 0.0;
  for (int n = 0; n < terms; ++n) {
    Complex psi[4];
    double norm2 = 0.0;
    for (auto& amp : psi) {
      amp = rand_complex(g);
      norm2 += std::norm(amp);
    }
    const double w = uniform(g, 0.1, 1.0);
    wsum += w;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rho(i, j) += (w / norm2) * psi[i] * std::conj(psi[j]);
  }
  return (1.0 / wsum) * rho;
}

inline TwoQubitBloch random_state(std::mt19937_64& g, int terms = 3) {
  return qpair::from_matrix(random_density4(g, terms));
}

inline BlochVec random_bloch_in_ball(std::mt19937_64& g) {
  while (true) {
    BlochVec v{uniform(g, -1, 1), uniform(g, -1, 1), uniform(g, -1, 1)};
    if (v.norm() <= 1.0) return v;
  }
}

// Hard-coded singlet density matrix (|01> - |10>)/sqrt(2) as a projector.
inline CMat4 singlet_matrix() {
  CMat4 m;
  m(1, 1) = 0.5;
  m(2, 2) = 0.5;
  m(1, 2) = -0.5;
  m(2, 1) = -0.5;
  return m;
}

// Taylor-series matrix exponential with scaling and squaring; a third,
// fully independent route to exp(A) used to cross-check both unitary paths.
inline CMat4 expm_taylor(CMat4 a) {
  int squarings = 0;
  while (qpair::frobenius_norm(a) > 0.25 && squarings < 60) {
    a = 0.5 * a;
    ++squarings;
  }
  CMat4 sum = CMat4::identity();
  CMat4 term = CMat4::identity();
  for (int k = 1; k < 40; ++k) {
    term = term * a;
    term = (1.0 / k) * term;
    sum = sum + term;
    if (qpair::frobenius_norm(term) < 1e-20) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

}  // namespace qtest
