#pragma once

// Single-shot phase uncertainty of a two-mode interferometer fed with a
// spin-J state.  The beam-splitter picture reduces exactly to spin rotations:
// the output number difference is 2 J_X(phi) with
// J_X(phi) = J_X cos(alpha) + J_Y sin(alpha), alpha = phi - theta.

#include <span>
#include <vector>

#include "pqs/spin.hpp"

namespace pqs {

struct PhaseSetting {
    double phi = 0.0;    // unknown phase
    double theta = 0.0;  // reference phase

    /// phi - theta reduced to (-pi, pi].
    double alpha() const;
};

/// Distribution of the output number difference 2m over the J_X eigenbasis.
struct OutputDistribution {
    Eigen::VectorXd outcomes;       // values 2m
    Eigen::VectorXd probabilities;  // nonnegative, sums to 1

    double mean() const;
    double variance() const;
};

/// Eigen-decomposition of J_X, computed once per J and cached by the caller.
/// Eigenvector phase convention: first nonzero component positive.
struct JxEigenbasis {
    SpinQuantumNumber j;
    Eigen::VectorXd eigenvalues;  // ascending, -J..J
    Eigen::MatrixXd vectors;      // columns
};

JxEigenbasis jx_eigenbasis(SpinQuantumNumber j);

/// Error-propagation phase noise
///   sqrt(Var(J_X) cos^2 a + Var(J_Y) sin^2 a) / |<J_Y> cos a - <J_X> sin a|.
/// Requires |cov(J_X,J_Y)| <= 1e-8 (CovarianceAssumptionError otherwise) and a
/// fringe derivative above 1e-9 in spin units (InsensitivePointError otherwise).
double phase_uncertainty(const SpinMoments& moments, double alpha);

/// Upper bound on the measurement quantum noise at any angle: the planar sum.
double noise_bound(const SpinMoments& moments);

/// Exact outcome distribution of the number-difference measurement.
OutputDistribution output_distribution(const SpinState& state, const PhaseSetting& setting);
OutputDistribution output_distribution(const SpinState& state, const PhaseSetting& setting,
                                       const JxEigenbasis& basis);

enum class ProbeFamily {
    OptimalPlanar,  // exact minimum-planar-variance state per J
    Coherent,       // J_X-extremal coherent state (standard quantum limit)
};

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> j_values;
    std::vector<double> delta_phi;  // at alpha = pi/2
};

/// Least-squares fit of log dphi(pi/2) vs log J for the chosen probe family.
/// Requires at least 4 values of J spanning at least a decade.
ScalingFit scaling_study(std::span<const double> j_values,
                         ProbeFamily family = ProbeFamily::OptimalPlanar);

/// Large-J extrapolated phase noise sqrt(C_J^(a))/J (asymptotic fit only; no
/// diagonalization), for atom numbers far beyond explicit construction.
double asymptotic_phase_floor(double j);

}  // namespace pqs
