#pragma once

// Small dense matrix arithmetic for two-qubit work: 2x2 / 4x4 complex and
// 3x3 real fixed-size matrices with a cyclic-Jacobi Hermitian eigensolver.
// The complex basis order is |00>, |01>, |10>, |11> throughout (first label
// is qubit a); every conversion in the library respects it.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "qpair/constants.hpp"

namespace qpair {

using Complex = std::complex<double>;

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EigenConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T, std::size_t N>
class SquareMatrix {
 public:
  constexpr SquareMatrix() : e_{} {}
  constexpr SquareMatrix(std::initializer_list<T> entries) : e_{} {
    std::size_t i = 0;
    for (const T& v : entries) {
      if (i >= N * N) break;
      e_[i++] = v;
    }
  }

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T{1};
    return m;
  }

  constexpr T& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
  constexpr const T& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }

  static constexpr std::size_t size() { return N; }

  friend constexpr SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend constexpr SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend constexpr SquareMatrix operator*(const T& s, const SquareMatrix& a) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N * N; ++i) r.e_[i] = s * a.e_[i];
    return r;
  }
  friend constexpr SquareMatrix operator*(const SquareMatrix& a, const T& s) { return s * a; }

  friend constexpr SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

 private:
  std::array<T, N * N> e_;
};

using CMat2 = SquareMatrix<Complex, 2>;
using CMat4 = SquareMatrix<Complex, 4>;
using RMat3 = SquareMatrix<double, 3>;

template <typename T, std::size_t N>
constexpr SquareMatrix<T, N> mat_mul(const SquareMatrix<T, N>& a, const SquareMatrix<T, N>& b) {
  return a * b;
}

template <std::size_t N>
constexpr SquareMatrix<Complex, N> adjoint(const SquareMatrix<Complex, N>& a) {
  SquareMatrix<Complex, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

template <typename T, std::size_t N>
constexpr SquareMatrix<T, N> transpose(const SquareMatrix<T, N>& a) {
  SquareMatrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = a(j, i);
  return r;
}

template <typename T, std::size_t N>
constexpr T trace(const SquareMatrix<T, N>& a) {
  T t{};
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

// Kronecker product in the fixed basis order: out(2i+k, 2j+l) = a(i,j) b(k,l).
inline CMat4 kron2(const CMat2& a, const CMat2& b) {
  CMat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

template <std::size_t N>
inline double max_abs_diff(const SquareMatrix<Complex, N>& a, const SquareMatrix<Complex, N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double max_abs_diff(const RMat3& a, const RMat3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

template <std::size_t N>
inline double frobenius_norm(const SquareMatrix<Complex, N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

template <std::size_t N>
inline double max_abs(const SquareMatrix<Complex, N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

template <std::size_t N>
inline double hermiticity_residual(const SquareMatrix<Complex, N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

inline CMat2 identity2() { return CMat2::identity(); }

// Pauli basis, axis 0/1/2 = x/y/z.
inline CMat2 pauli(std::size_t axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case 0: return CMat2{0, 1, 1, 0};
    case 1: return CMat2{0, -i, i, 0};
    default: return CMat2{1, 0, 0, -1};
  }
}

template <std::size_t N>
struct EigenResult {
  std::array<double, N> values;          // ascending
  SquareMatrix<Complex, N> vectors;      // column k pairs with values[k]
};

using EigenResult4 = EigenResult<4>;

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi
/// rotations. Converges when the off-diagonal Frobenius norm drops below
/// tol::jacobi_offdiag; throws EigenConvergenceError after
/// tol::jacobi_max_sweeps full sweeps, and NotHermitianError when the input
/// fails the hermiticity gate. Eigenvalues come back ascending with the
/// matching orthonormal eigenvectors as columns.
template <std::size_t N>
EigenResult<N> eig_hermitian(const SquareMatrix<Complex, N>& a) {
  const double herm = hermiticity_residual(a);
  if (!(herm <= tol::hermiticity)) {
    throw NotHermitianError("eig_hermitian: input is not Hermitian (residual " +
                            std::to_string(herm) + ")");
  }

  // Iterate on the symmetrized copy so input roundoff cannot bias the sweep.
  SquareMatrix<Complex, N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  auto v = SquareMatrix<Complex, N>::identity();

  auto off_norm = [&m]() {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
  };

  bool converged = off_norm() < tol::jacobi_offdiag;
  for (int sweep = 0; sweep < tol::jacobi_max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double r = std::abs(m(p, q));
        if (r == 0.0) continue;
        const Complex u = m(p, q) / r;  // phase of the pivot
        const double tau = (m(p, p).real() - m(q, q).real()) / (2.0 * r);
        const double sgn = tau >= 0.0 ? 1.0 : -1.0;
        const double tt = sgn / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + tt * tt);
        const double s = tt * c;

        // Unitary rotation in the (p,q) plane: columns mix as
        //   col_p <- c col_p + s conj(u) col_q,  col_q <- -s u col_p + c col_q
        for (std::size_t k = 0; k < N; ++k) {  // rows (left multiply by J^dag)
          const Complex mp = m(p, k), mq = m(q, k);
          m(p, k) = c * mp + s * u * mq;
          m(q, k) = -s * std::conj(u) * mp + c * mq;
        }
        for (std::size_t k = 0; k < N; ++k) {  // columns (right multiply by J)
          const Complex mp = m(k, p), mq = m(k, q);
          m(k, p) = c * mp + s * std::conj(u) * mq;
          m(k, q) = -s * u * mp + c * mq;
          const Complex vp = v(k, p), vq = v(k, q);
          v(k, p) = c * vp + s * std::conj(u) * vq;
          v(k, q) = -s * u * vp + c * vq;
        }
      }
    }
    converged = off_norm() < tol::jacobi_offdiag;
  }
  if (!converged) {
    throw EigenConvergenceError("eig_hermitian: Jacobi sweep cap reached");
  }

  std::array<std::size_t, N> order{};
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  for (std::size_t i = 0; i + 1 < N; ++i)  // insertion sort, ascending diagonal
    for (std::size_t j = i + 1; j > 0 && m(order[j], order[j]).real() <
                                              m(order[j - 1], order[j - 1]).real();
         --j)
      std::swap(order[j], order[j - 1]);

  EigenResult<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = m(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace qpair
