#pragma once

// Two-mode (double-well) condensate in spin language: H = 2 kappa J_X + g J_Z^2
// up to conserved terms.  Ground states, coupling scans and the critical
// attractive coupling that minimizes the planar variance sum.

#include <vector>

#include "pqs/spin.hpp"
#include "pqs/tridiag.hpp"

namespace pqs {

struct BecParams {
    int n_atoms = 0;   // N = 2J
    double g = 0.0;    // intra-well interaction (sign-carrying)
    double kappa = 0.0;  // inter-well tunneling rate, > 0

    SpinQuantumNumber spin() const { return SpinQuantumNumber{n_atoms}; }
    void validate() const;
};

/// One row of a coupling scan (Ng/kappa on the x axis).
struct BecScanPoint {
    double ratio = 0.0;
    double var_x = 0.0;
    double var_y = 0.0;
    double var_z = 0.0;
    double planar_sum = 0.0;
    double mean_x = 0.0;
    bool degenerate = false;  // ground doublet unresolved at this point
};

/// Tridiagonal form: diagonal g*m^2, off-diagonal kappa*sqrt(J(J+1)-m(m+1)).
tridiag::SymmetricTridiagonal build_hamiltonian(const BecParams& params);

/// Normalized ground state, reported as the |<J_X>|-positive representative
/// (m-parity phases flipped as needed).  Throws DegenerateGroundError when the
/// two lowest eigenvalues agree to 1e-12 relative.
SpinState ground_state(const BecParams& params);

/// Ground-state variances over a uniform grid of Ng/kappa (g fixed at -1).
/// Degenerate points are flagged rather than fatal.
std::vector<BecScanPoint> variance_scan(int n_atoms, double ratio_min,
                                        double ratio_max, int steps,
                                        int threads = 1);

struct CriticalCoupling {
    double ratio = 0.0;
    double planar_sum = 0.0;
};

/// Minimize the ground-state planar sum over the coupling ratio, bracketed
/// around the asymptotic seed -N/(J - (1/2)(J/4)^(1/3)).
CriticalCoupling critical_coupling(int n_atoms, double tol = 1e-8);

}  // namespace pqs
