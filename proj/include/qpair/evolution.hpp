#pragma once

// Canonical two-qubit interaction dynamics. The coupling Hamiltonian is
//   H = a1 sigma_x tau_x + a2 sigma_y tau_y + a3 sigma_z tau_z
// and states evolve by conjugation with U(t) = exp(-i t H). U is block
// diagonal over {|00>,|11>} and {|01>,|10>} with four coefficients
//
//   G1 = e^{-i a3 t} cos((a1 - a2) t)    on |00><00| + |11><11|
//   G2 = e^{+i a3 t} cos((a1 + a2) t)    on |01><01| + |10><10|
//   G3 = -i e^{+i a3 t} sin((a1 + a2) t) on |10><01| + |01><10|
//   G4 = -i e^{-i a3 t} sin((a1 - a2) t) on |11><00| + |00><11|
//
// These phases differ from the published coefficient table, whose G3/G4
// break unitarity; see ERRATA.md. An independent eigendecomposition route
// (unitary_oracle) cross-checks the closed form.

#include <cmath>
#include <cstddef>
#include <utility>

#include "qpair/bloch.hpp"
#include "qpair/smallmat.hpp"

namespace qpair {

// pi/6, the coupling strength used by all reference figures.
inline constexpr double kAlphaDefault = 0.5235987755982988;

struct CouplingParams {
  double alpha1 = kAlphaDefault;  // radians per unit scaled time
  double alpha2 = kAlphaDefault;
  double alpha3 = kAlphaDefault;
};

struct UnitaryGamma {
  Complex g1, g2, g3, g4;
};

inline UnitaryGamma gammas(const CouplingParams& p, double t) {
  const Complex phase_minus = std::polar(1.0, -p.alpha3 * t);
  const Complex phase_plus = std::polar(1.0, p.alpha3 * t);
  const Complex mi{0.0, -1.0};
  return UnitaryGamma{
      phase_minus * std::cos((p.alpha1 - p.alpha2) * t),
      phase_plus * std::cos((p.alpha1 + p.alpha2) * t),
      mi * phase_plus * std::sin((p.alpha1 + p.alpha2) * t),
      mi * phase_minus * std::sin((p.alpha1 - p.alpha2) * t),
  };
}

inline CMat4 unitary(const CouplingParams& p, double t) {
  const UnitaryGamma g = gammas(p, t);
  CMat4 u;
  u(0, 0) = g.g1;
  u(3, 3) = g.g1;
  u(1, 1) = g.g2;
  u(2, 2) = g.g2;
  u(2, 1) = g.g3;
  u(1, 2) = g.g3;
  u(3, 0) = g.g4;
  u(0, 3) = g.g4;
  return u;
}

inline CMat4 coupling_hamiltonian(const CouplingParams& p) {
  return p.alpha1 * kron2(pauli(0), pauli(0)) + p.alpha2 * kron2(pauli(1), pauli(1)) +
         p.alpha3 * kron2(pauli(2), pauli(2));
}

/// Independent route to U(t): eigendecompose H and exponentiate the
/// spectrum, U = V e^{-i lambda t} V^dag. Kept deliberately separate from
/// the closed form so the two can cross-check each other.
inline CMat4 unitary_oracle(const CouplingParams& p, double t) {
  const EigenResult<4> eig = eig_hermitian(coupling_hamiltonian(p));
  CMat4 d;
  for (std::size_t k = 0; k < 4; ++k) d(k, k) = std::polar(1.0, -eig.values[k] * t);
  return eig.vectors * d * adjoint(eig.vectors);
}

/// Conjugation rho -> U rho U^dag, returned in Bloch form.
inline TwoQubitBloch evolve(const TwoQubitBloch& st, const CouplingParams& p, double t) {
  const CMat4 u = unitary(p, t);
  return from_matrix(u * to_matrix(st) * adjoint(u));
}

/// Closed-form reduced Bloch vectors of the evolved state. With
/// c_i = cos(2 t a_i), s_i = sin(2 t a_i) and (i,j,k) cyclic over (x,y,z):
///
///   s~_i = c_j c_k s_i - c_j s_k C_jk + s_j c_k C_kj + s_j s_k t_i
///   t~_i = c_j c_k t_i - c_j s_k C_kj + s_j c_k C_jk + s_j s_k s_i
///
/// derived by conjugating sigma_i x I and I x tau_i through the three
/// commuting factors of U. The published versions of these expressions
/// carry index and sign typos (see ERRATA.md); the forms above agree with
/// evolve + partial trace to solver precision for arbitrary couplings.
inline std::pair<SingleQubitBloch, SingleQubitBloch> reduced_bloch_analytic(
    const TwoQubitBloch& st0, const CouplingParams& p, double t) {
  const double alphas[3] = {p.alpha1, p.alpha2, p.alpha3};
  double c[3], s[3];
  for (std::size_t i = 0; i < 3; ++i) {
    c[i] = std::cos(2.0 * t * alphas[i]);
    s[i] = std::sin(2.0 * t * alphas[i]);
  }
  BlochVec sa, tb;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    sa[i] = c[j] * c[k] * st0.s[i] - c[j] * s[k] * st0.c(j, k) + s[j] * c[k] * st0.c(k, j) +
            s[j] * s[k] * st0.t[i];
    tb[i] = c[j] * c[k] * st0.t[i] - c[j] * s[k] * st0.c(k, j) + s[j] * c[k] * st0.c(j, k) +
            s[j] * s[k] * st0.s[i];
  }
  return {SingleQubitBloch{sa}, SingleQubitBloch{tb}};
}

}  // namespace qpair
