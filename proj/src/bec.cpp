#include "pqs/bec.hpp"

#include <cmath>

#include "pqs/bound.hpp"
#include "pqs/optimize.hpp"
#include "pqs/parallel.hpp"

namespace pqs {

namespace {

BecParams params_from_ratio(int n_atoms, double ratio) {
    // Ng/kappa is the canonical scan coordinate; g is pinned to -1.
    if (!(ratio < 0.0))
        throw std::invalid_argument("coupling ratio Ng/kappa must be negative (attractive g)");
    return BecParams{n_atoms, -1.0, -n_atoms / ratio};
}

SpinState ground_state_impl(const BecParams& params, bool* degenerate_flag) {
    const SpinQuantumNumber j = params.spin();
    const tridiag::SymmetricTridiagonal h = build_hamiltonian(params);

    const auto lowest = tridiag::two_smallest_eigenvalues(h);
    const double scale = std::max({std::abs(lowest[0]), std::abs(lowest[1]), 1.0});
    const bool degenerate = j.dimension() > 1 && (lowest[1] - lowest[0]) < 1e-12 * scale;

    tridiag::GroundState gs = tridiag::ground_state(h);
    Eigen::VectorXd vec = std::move(gs.vector);

    SpinOperatorSet ops = build_operator_set(j);
    double mean_x = 0.0;
    for (int k = 0; k + 1 < j.dimension(); ++k)
        mean_x += ops.ladder_superdiagonal(k) * vec(k) * vec(k + 1);
    if (mean_x < 0.0) {
        // m-parity phase flip maps J_X -> -J_X and leaves J_Z alone.
        for (int k = 1; k < j.dimension(); k += 2) vec(k) = -vec(k);
    }

    if (degenerate) {
        if (degenerate_flag) {
            *degenerate_flag = true;
        } else {
            tridiag::GroundState second;
            if (j.dimension() <= 2001) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
                solver.computeFromTridiagonal(h.diag, h.offdiag, Eigen::ComputeEigenvectors);
                second.vector = solver.eigenvectors().col(1);
            }
            std::vector<double> first_v(vec.data(), vec.data() + vec.size());
            std::vector<double> second_v(second.vector.data(),
                                         second.vector.data() + second.vector.size());
            throw DegenerateGroundError(
                "ground state is degenerate to 1e-12 relative", lowest[0], lowest[1],
                std::move(first_v), std::move(second_v));
        }
    }
    return SpinState::from_real(j, vec);
}

}  // namespace

void BecParams::validate() const {
    if (n_atoms < 1) throw std::invalid_argument("BecParams requires n_atoms >= 1");
    if (!(kappa > 0.0)) throw std::invalid_argument("BecParams requires kappa > 0");
}

tridiag::SymmetricTridiagonal build_hamiltonian(const BecParams& params) {
    params.validate();
    const SpinQuantumNumber j = params.spin();
    const SpinOperatorSet ops = build_operator_set(j);
    tridiag::SymmetricTridiagonal t;
    t.diag = params.g * ops.jz_diagonal.array().square();
    t.offdiag = params.kappa * ops.ladder_superdiagonal;
    return t;
}

SpinState ground_state(const BecParams& params) {
    return ground_state_impl(params, nullptr);
}

std::vector<BecScanPoint> variance_scan(int n_atoms, double ratio_min,
                                        double ratio_max, int steps, int threads) {
    if (steps < 2) throw std::invalid_argument("variance_scan requires steps >= 2");
    if (!(ratio_min < ratio_max))
        throw std::invalid_argument("variance_scan requires ratio_min < ratio_max");
    if (!(ratio_max < 0.0))
        throw std::invalid_argument("variance_scan requires an attractive range (ratio < 0)");
    std::vector<BecScanPoint> points(steps);
    parallel_for(steps, threads, [&](std::size_t i) {
        const double ratio =
            ratio_min + (ratio_max - ratio_min) * double(i) / double(steps - 1);
        BecScanPoint& pt = points[i];
        pt.ratio = ratio;
        bool degenerate = false;
        const SpinState gs = ground_state_impl(params_from_ratio(n_atoms, ratio), &degenerate);
        const SpinMoments mom = moments(gs);
        pt.var_x = mom.variances(0);
        pt.var_y = mom.variances(1);
        pt.var_z = mom.variances(2);
        pt.planar_sum = mom.planar_sum;
        pt.mean_x = mom.mean(0);
        pt.degenerate = degenerate;
    });
    return points;
}

CriticalCoupling critical_coupling(int n_atoms, double tol) {
    if (n_atoms < 2) throw std::invalid_argument("critical_coupling requires n_atoms >= 2");
    const double j = 0.5 * n_atoms;
    const double seed = -n_atoms / (j - 0.5 * std::cbrt(j / 4.0));

    const auto objective = [&](double ratio) {
        bool degenerate = false;
        const SpinState gs = ground_state_impl(params_from_ratio(n_atoms, ratio), &degenerate);
        return moments(gs).planar_sum;
    };

    const auto bracket = optimize::bracket_minimum(objective, seed, 0.05 * std::abs(seed),
                                                   -1e9, -1e-9);
    if (!bracket.ok)
        throw NonConvergenceError("critical_coupling: failed to bracket a minimum");
    const auto minimum = optimize::minimize_scalar(objective, bracket.a, bracket.c, tol);
    return CriticalCoupling{minimum.x, minimum.f};
}

}  // namespace pqs
