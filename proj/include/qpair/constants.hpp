#pragma once

// Central tolerance table. Every numerical gate in the library reads from
// here so calibration is a single edit; tests pin against the same values.

namespace qpair::tol {

// State preconditions
inline constexpr double hermiticity = 1e-10;  // max |a_ij - conj(a_ji)|
inline constexpr double unit_trace = 1e-10;   // |tr(rho) - 1|
inline constexpr double positivity = -1e-9;   // eigenvalue floor for a physical state
inline constexpr double bloch_norm_slack = 1e-9;  // |v| <= 1 + slack

// Eigensolver
inline constexpr double jacobi_offdiag = 1e-13;  // off-diagonal Frobenius norm at convergence
inline constexpr int jacobi_max_sweeps = 100;

// Measures
inline constexpr double entropy_clamp = 1e-9;  // eigenvalue clamp window around [0,1]
inline constexpr double doe_clamp = 1e-9;      // roundoff negatives mapped to 0

// Cross-validation
inline constexpr double oracle_match = 1e-9;     // canonical unitary vs Hamiltonian oracle
inline constexpr double unitarity = 1e-12;       // |U^dag U - I|
inline constexpr double group_property = 1e-10;  // U(t1+t2) vs U(t1) U(t2)
inline constexpr double analytic_match = 1e-9;   // closed-form reduced states vs partial trace
inline constexpr double conservation = 1e-10;    // invariants preserved under evolution
inline constexpr double recurrence = 1e-9;       // period-3 fieldwise agreement
inline constexpr double figure_claim = 1e-6;     // "equals zero at the printed time" probes
inline constexpr double doe_floor = 1e-3;        // entangled-class persistence threshold

}  // namespace qpair::tol
