#pragma once

// Planar spin-variance bound C_J = min over pure states of Var(J_X)+Var(J_Y),
// computed two independent ways, plus the large-J closed forms and the
// optimal (planar quantum squeezed) state itself.

#include <cstdint>
#include <optional>

#include "pqs/spin.hpp"
#include "pqs/tridiag.hpp"

namespace pqs {

struct BoundResult {
    SpinQuantumNumber j;
    double c_exact = 0.0;
    std::optional<double> c_direct;  // filled by solve_bound / cj_direct callers
    double c_asymptotic = 0.0;
    double lambda_star = 0.0;  // fixed point <J_X> of the optimal state
    SpinState optimal_state;
    SpinMoments optimal_moments;
};

/// Tridiagonal matrix of H(lambda) = (J(J+1) - J_Z^2) - 2 lambda J_X.
tridiag::SymmetricTridiagonal bound_hamiltonian(SpinQuantumNumber j, double lambda);

/// Exact bound via the lambda-parameterized ground-state construction:
/// C_J = min over lambda of [E0(lambda) + lambda^2], with the outer 1-D
/// minimum bracketed on [0, J] and polished to the fixed point
/// lambda = <J_X>(lambda).  tol bounds |lambda* - <J_X>(lambda*)|.
BoundResult cj_exact(SpinQuantumNumber j, double tol = 1e-10);

/// Direct quasi-Newton minimization of the variance sum over real symmetric
/// coefficients R_m = R_{-m}, best of `restarts` randomized starts seeded
/// from the Gaussian ansatz.  Never returns below the true bound.
double cj_direct(SpinQuantumNumber j, int restarts = 8, std::uint64_t seed = 20120613u);

/// Large-J analytic fit 0.595275 J^(2/3) - 0.1663 J^(1/3) + 0.0267.
double cj_asymptotic(double j);

/// Gaussian trial state R_m proportional to exp(-x^2/(4 sigma)) with
/// x = m/(J+1/2) and sigma = (2J)^(-2/3).  Requires J >= 1.
SpinState variational_gaussian_state(SpinQuantumNumber j);

/// Width sigma = (2J)^(-2/3) of the Gaussian trial state.
double gaussian_sigma(double j);

struct AsymptoticMoments {
    double mean_x = 0.0;  // J - (1/2)(J/4)^(1/3)
    double var_x = 0.0;   // (2J)^(2/3)/8
    double var_y = 0.0;   // (2J)^(2/3)/4
    double var_z = 0.0;   // (J^2/2)^(2/3)
};

/// Large-J closed forms for the optimal-state moments.  Requires J >= 1.
AsymptoticMoments asymptotic_moments(double j);

/// Convenience: cj_exact plus cj_direct in one result (used by the CLI).
BoundResult solve_bound(SpinQuantumNumber j, double tol = 1e-10, int restarts = 8,
                        std::uint64_t seed = 20120613u);

}  // namespace pqs
