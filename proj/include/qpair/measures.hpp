#pragma once

// Entanglement and information functionals: negativity via the partial
// transpose, purity tr(rho^2), and von Neumann entropy in nats.

#include <cmath>
#include <cstddef>
#include <string>

#include "qpair/bloch.hpp"
#include "qpair/constants.hpp"
#include "qpair/smallmat.hpp"

namespace qpair {

struct MeasureSet {
  double doe = 0.0;  // degree of entanglement (negativity), 0 separable .. 1 Bell
  double purity_joint = 0.0;
  double purity_a = 0.0;
  double purity_b = 0.0;
  double entropy_a = 0.0;  // nats
  double entropy_b = 0.0;
  double entropy_joint = 0.0;
};

namespace detail {

template <std::size_t N>
inline void require_state(const SquareMatrix<Complex, N>& m, const char* who) {
  const double herm = hermiticity_residual(m);
  if (!(herm <= tol::hermiticity)) {
    throw NotAStateError(std::string(who) + ": not Hermitian (residual " +
                         std::to_string(herm) + ")");
  }
  const double tr_res = std::abs(trace(m) - Complex{1.0});
  if (!(tr_res <= tol::unit_trace)) {
    throw NotAStateError(std::string(who) + ": trace differs from 1 by " +
                         std::to_string(tr_res));
  }
}

}  // namespace detail

inline CMat2 partial_trace_b(const CMat4& m) {
  detail::require_state(m, "partial_trace_b");
  CMat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j) r(i, k) += m(2 * i + j, 2 * k + j);
  return r;
}

inline CMat2 partial_trace_a(const CMat4& m) {
  detail::require_state(m, "partial_trace_a");
  CMat2 r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t i = 0; i < 2; ++i) r(j, l) += m(2 * i + j, 2 * i + l);
  return r;
}

// Transpose on qubit b only: ((i,j),(k,l)) -> ((i,l),(k,j)). In Bloch form
// this flips the sign of t_y and of column y of the dyadic.
inline CMat4 partial_transpose_b(const CMat4& m) {
  const double herm = hermiticity_residual(m);
  if (!(herm <= tol::hermiticity)) {
    throw NotHermitianError("partial_transpose_b: not Hermitian (residual " +
                            std::to_string(herm) + ")");
  }
  CMat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + l, 2 * k + j) = m(2 * i + j, 2 * k + l);
  return r;
}

/// Negativity: sum |lambda_j| - 1 over the partial-transpose spectrum,
/// clamped at 0 so separable states do not go negative by roundoff.
inline double degree_of_entanglement(const CMat4& m) {
  detail::require_state(m, "degree_of_entanglement");
  const EigenResult<4> eig = eig_hermitian(partial_transpose_b(m));
  double sum = 0.0;
  for (double lam : eig.values) sum += std::abs(lam);
  const double doe = sum - 1.0;
  return doe > 0.0 ? doe : 0.0;
}

template <std::size_t N>
inline double purity(const SquareMatrix<Complex, N>& m) {
  detail::require_state(m, "purity");
  return trace(m * m).real();
}

/// -sum lambda ln lambda with 0 ln 0 := 0. Eigenvalues within
/// tol::entropy_clamp of [0,1] are clamped; anything farther out is a
/// NotAStateError rather than a silently masked unphysical input.
template <std::size_t N>
inline double von_neumann_entropy(const SquareMatrix<Complex, N>& m) {
  detail::require_state(m, "von_neumann_entropy");
  const EigenResult<N> eig = eig_hermitian(m);
  double s = 0.0;
  for (double lam : eig.values) {
    if (lam < -tol::entropy_clamp || lam > 1.0 + tol::entropy_clamp) {
      throw NotAStateError("von_neumann_entropy: eigenvalue " + std::to_string(lam) +
                           " outside [0,1]");
    }
    const double clamped = lam < 0.0 ? 0.0 : (lam > 1.0 ? 1.0 : lam);
    if (clamped > 0.0) s -= clamped * std::log(clamped);
  }
  return s;
}

/// All per-sample observables in one pass: negativity of the joint state,
/// joint and reduced purities, joint and reduced entropies.
inline MeasureSet measure_all(const TwoQubitBloch& st) {
  const CMat4 m = to_matrix(st);
  const CMat2 ra = partial_trace_b(m);
  const CMat2 rb = partial_trace_a(m);
  MeasureSet out;
  out.doe = degree_of_entanglement(m);
  out.purity_joint = purity(m);
  out.purity_a = purity(ra);
  out.purity_b = purity(rb);
  out.entropy_a = von_neumann_entropy(ra);
  out.entropy_b = von_neumann_entropy(rb);
  out.entropy_joint = von_neumann_entropy(m);
  return out;
}

}  // namespace qpair
