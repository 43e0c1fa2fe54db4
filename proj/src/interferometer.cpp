#include "pqs/interferometer.hpp"

#include <cmath>
#include <numbers>

#include "pqs/bound.hpp"
#include "pqs/tridiag.hpp"

namespace pqs {

double PhaseSetting::alpha() const {
    const double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(phi - theta, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

double OutputDistribution::mean() const {
    return probabilities.dot(outcomes);
}

double OutputDistribution::variance() const {
    const double mu = mean();
    return probabilities.dot((outcomes.array() - mu).square().matrix());
}

JxEigenbasis jx_eigenbasis(SpinQuantumNumber j) {
    const SpinOperatorSet ops = build_operator_set(j);
    tridiag::SymmetricTridiagonal t;
    t.diag = Eigen::VectorXd::Zero(j.dimension());
    t.offdiag = 0.5 * ops.ladder_superdiagonal;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(t.diag, t.offdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw NonConvergenceError("J_X eigendecomposition failed");
    JxEigenbasis basis{j, solver.eigenvalues(), solver.eigenvectors()};
    for (int c = 0; c < basis.vectors.cols(); ++c) {
        for (int r = 0; r < basis.vectors.rows(); ++r) {
            const double v = basis.vectors(r, c);
            if (std::abs(v) > 1e-12) {
                if (v < 0.0) basis.vectors.col(c) = -basis.vectors.col(c);
                break;
            }
        }
    }
    return basis;
}

double phase_uncertainty(const SpinMoments& moments, double alpha) {
    if (std::abs(moments.covariance(0, 1)) > 1e-8)
        throw CovarianceAssumptionError(
            "phase_uncertainty requires vanishing symmetrized X-Y covariance");
    const double c = std::cos(alpha), s = std::sin(alpha);
    const double denom = std::abs(moments.mean(1) * c - moments.mean(0) * s);
    if (denom < 1e-9)
        throw InsensitivePointError("fringe derivative vanishes at this angle");
    const double noise = moments.variances(0) * c * c + moments.variances(1) * s * s;
    return std::sqrt(noise) / denom;
}

double noise_bound(const SpinMoments& moments) {
    return moments.planar_sum;
}

OutputDistribution output_distribution(const SpinState& state, const PhaseSetting& setting) {
    return output_distribution(state, setting, jx_eigenbasis(state.j()));
}

OutputDistribution output_distribution(const SpinState& state, const PhaseSetting& setting,
                                       const JxEigenbasis& basis) {
    if (!(basis.j == state.j()))
        throw std::invalid_argument("JxEigenbasis and state have different J");
    // Rotating the frame by -alpha turns the J_X measurement into a
    // measurement of J_X cos(alpha) + J_Y sin(alpha) on the input state.
    const SpinState rotated = rotate_about_z(state, -setting.alpha());
    const Eigen::VectorXcd projected =
        basis.vectors.transpose().cast<Complex>() * rotated.amplitudes();

    const int d = state.dimension();
    OutputDistribution dist;
    dist.outcomes.resize(d);
    dist.probabilities.resize(d);
    for (int k = 0; k < d; ++k) {
        // snap 2m to its exact half-odd/even integer value
        dist.outcomes(k) = std::round(2.0 * basis.eigenvalues(k));
        dist.probabilities(k) = std::norm(projected(k));
    }
    return dist;
}

namespace {

double delta_phi_half_pi(const SpinMoments& m) {
    return phase_uncertainty(m, 0.5 * std::numbers::pi);
}

}  // namespace

ScalingFit scaling_study(std::span<const double> j_values, ProbeFamily family) {
    if (j_values.size() < 4)
        throw std::invalid_argument("scaling_study requires at least 4 values of J");
    double lo = j_values[0], hi = j_values[0];
    for (double j : j_values) {
        lo = std::min(lo, j);
        hi = std::max(hi, j);
    }
    if (!(hi >= 10.0 * lo))
        throw std::invalid_argument("scaling_study requires J values spanning a decade");

    ScalingFit fit;
    fit.j_values.assign(j_values.begin(), j_values.end());
    fit.delta_phi.reserve(j_values.size());
    for (double jv : j_values) {
        const SpinQuantumNumber j = SpinQuantumNumber::from_j(jv);
        SpinMoments m;
        if (family == ProbeFamily::OptimalPlanar) {
            m = cj_exact(j).optimal_moments;
        } else {
            const JxEigenbasis basis = jx_eigenbasis(j);
            const SpinState coherent =
                SpinState::from_real(j, basis.vectors.col(j.dimension() - 1));
            m = moments(coherent);
        }
        fit.delta_phi.push_back(delta_phi_half_pi(m));
    }

    // least squares on (log J, log dphi)
    const std::size_t n = fit.j_values.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(fit.j_values[i]);
        const double y = std::log(fit.delta_phi[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

double asymptotic_phase_floor(double j) {
    return std::sqrt(cj_asymptotic(j)) / j;
}

}  // namespace pqs
