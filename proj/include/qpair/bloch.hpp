#pragma once

// Bloch-vector state model. A two-qubit state is held as the pair of
// single-qubit Bloch vectors s (qubit a), t (qubit b) and the 3x3 cross
// dyadic c with c(i,j) = <sigma_i tau_j>; the density matrix form is
//   rho = 1/4 (I + sum_i s_i sigma_i x I + sum_j t_j I x tau_j
//              + sum_ij c_ij sigma_i x tau_j).

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "qpair/constants.hpp"
#include "qpair/smallmat.hpp"

namespace qpair {

class NotAStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidBlochError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BlochVec {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
  const double& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
};

inline double max_abs_diff(const BlochVec& a, const BlochVec& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

struct SingleQubitBloch {
  BlochVec v;
};

struct TwoQubitBloch {
  BlochVec s;  // qubit a marginal
  BlochVec t;  // qubit b marginal
  RMat3 c;     // c(i,j) = <sigma_i tau_j>
};

inline RMat3 outer(const BlochVec& a, const BlochVec& b) {
  RMat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

inline CMat2 to_matrix(const SingleQubitBloch& q) {
  CMat2 m = identity2();
  for (std::size_t i = 0; i < 3; ++i) m = m + q.v[i] * pauli(i);
  return 0.5 * m;
}

inline CMat4 to_matrix(const TwoQubitBloch& st) {
  CMat4 m = CMat4::identity();
  for (std::size_t i = 0; i < 3; ++i) {
    m = m + st.s[i] * kron2(pauli(i), identity2());
    m = m + st.t[i] * kron2(identity2(), pauli(i));
    for (std::size_t j = 0; j < 3; ++j)
      m = m + st.c(i, j) * kron2(pauli(i), pauli(j));
  }
  return 0.25 * m;
}

/// Tomographic inversion: s_i = tr(m sigma_i x I), t_j = tr(m I x tau_j),
/// c_ij = tr(m sigma_i x tau_j). Requires a Hermitian unit-trace input.
inline TwoQubitBloch from_matrix(const CMat4& m) {
  const double herm = hermiticity_residual(m);
  if (!(herm <= tol::hermiticity)) {
    throw NotAStateError("from_matrix: not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const double tr_res = std::abs(trace(m) - Complex{1.0});
  if (!(tr_res <= tol::unit_trace)) {
    throw NotAStateError("from_matrix: trace differs from 1 by " + std::to_string(tr_res));
  }
  TwoQubitBloch st;
  for (std::size_t i = 0; i < 3; ++i) {
    st.s[i] = trace(m * kron2(pauli(i), identity2())).real();
    st.t[i] = trace(m * kron2(identity2(), pauli(i))).real();
    for (std::size_t j = 0; j < 3; ++j)
      st.c(i, j) = trace(m * kron2(pauli(i), pauli(j))).real();
  }
  return st;
}

/// rho_a x rho_b in Bloch form: the dyadic of a product state is the outer
/// product of the marginals' Bloch vectors.
inline TwoQubitBloch product_state(const SingleQubitBloch& a, const SingleQubitBloch& b) {
  for (const auto* q : {&a, &b}) {
    if (!(q->v.norm() <= 1.0 + tol::bloch_norm_slack)) {
      throw InvalidBlochError("product_state: Bloch norm " + std::to_string(q->v.norm()) +
                              " exceeds 1");
    }
  }
  return TwoQubitBloch{a.v, b.v, outer(a.v, b.v)};
}

// tr(rho^2) for one qubit in closed form.
inline double purity_single(const SingleQubitBloch& q) {
  if (!(q.v.norm() <= 1.0 + tol::bloch_norm_slack)) {
    throw InvalidBlochError("purity_single: Bloch norm exceeds 1");
  }
  return 0.5 * (1.0 + q.v.norm2());
}

struct ValidityReport {
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool valid = false;
};

/// Report-style physicality check: a state is valid when its matrix form is
/// Hermitian, unit trace, and has no eigenvalue below tol::positivity.
/// Reported, not thrown, so long sweeps can log near-boundary drift.
inline ValidityReport validate(const TwoQubitBloch& st) {
  const CMat4 m = to_matrix(st);
  ValidityReport rep;
  rep.hermiticity_residual = hermiticity_residual(m);
  rep.trace_residual = std::abs(trace(m) - Complex{1.0});
  if (!(rep.hermiticity_residual <= tol::hermiticity)) {
    rep.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    rep.valid = false;
    return rep;
  }
  rep.min_eigenvalue = eig_hermitian(m).values[0];
  rep.valid = rep.min_eigenvalue >= tol::positivity &&
              rep.trace_residual <= tol::unit_trace;
  return rep;
}

}  // namespace qpair
