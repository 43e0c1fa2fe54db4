#include "pqs/bound.hpp"

#include <cmath>
#include <random>

#include "pqs/optimize.hpp"

namespace pqs {

namespace {

double ground_energy(const tridiag::SymmetricTridiagonal& t) {
    if (t.size() <= 2001) return tridiag::eigenvalues(t)(0);
    return tridiag::smallest_eigenvalues(t, 1)(0);
}

double mean_x_of(const SpinQuantumNumber& j, const Eigen::VectorXd& vec) {
    const SpinOperatorSet ops = build_operator_set(j);
    double acc = 0.0;
    for (int k = 0; k + 1 < j.dimension(); ++k)
        acc += ops.ladder_superdiagonal(k) * vec(k) * vec(k + 1);
    return acc;
}

// Free symmetric coefficients for the direct minimization: index of |m| in
// the reduced parameter vector.
int symmetric_index(const SpinQuantumNumber& j, int k) {
    const int two_m_abs = std::abs(2 * k - j.two_j);
    return (j.two_j % 2 == 0) ? two_m_abs / 2 : (two_m_abs - 1) / 2;
}

int symmetric_count(const SpinQuantumNumber& j) {
    return (j.two_j % 2 == 0) ? j.two_j / 2 + 1 : (j.two_j + 1) / 2;
}

}  // namespace

tridiag::SymmetricTridiagonal bound_hamiltonian(SpinQuantumNumber j, double lambda) {
    const SpinOperatorSet ops = build_operator_set(j);
    tridiag::SymmetricTridiagonal t;
    const double jj = j.casimir();
    t.diag = jj - ops.jz_diagonal.array().square();
    t.offdiag = -lambda * ops.ladder_superdiagonal;
    return t;
}

double cj_asymptotic(double j) {
    if (!(j > 0.0)) throw std::invalid_argument("cj_asymptotic requires J > 0");
    const double u = std::cbrt(j);
    return 0.595275 * u * u - 0.1663 * u + 0.0267;
}

BoundResult cj_exact(SpinQuantumNumber j, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("cj_exact requires tol > 0");
    const double jval = j.j();

    if (j.dimension() == 1) {
        // J = 0: a single state with all moments zero.
        SpinState state = SpinState::from_real(j, Eigen::VectorXd::Ones(1));
        SpinMoments mom = moments(state);
        return BoundResult{j, 0.0, std::nullopt, 0.0, 0.0, state, mom};
    }

    const auto objective = [&](double lambda) {
        return ground_energy(bound_hamiltonian(j, lambda)) + lambda * lambda;
    };
    const auto fixed_point_gap = [&](double lambda, tridiag::GroundState* out) {
        tridiag::GroundState gs = tridiag::ground_state(bound_hamiltonian(j, lambda));
        const double jx = mean_x_of(j, gs.vector);
        if (out) *out = std::move(gs);
        return lambda - jx;
    };

    // Outer 1-D minimum of E0(lambda) + lambda^2, bracketed on [0, J].
    const auto brent =
        optimize::minimize_scalar(objective, 0.0, jval, std::min(tol, 1e-10) * std::max(1.0, jval));

    // Polish to the stationarity condition lambda = <J_X>(lambda): secant on
    // the gap, falling back to plain fixed-point steps if it wanders.
    double lam0 = brent.x;
    tridiag::GroundState gs;
    double gap0 = fixed_point_gap(lam0, &gs);
    double lambda_star = lam0;
    if (std::abs(gap0) > tol) {
        double lam1 = lam0 - gap0;  // one fixed-point step
        lam1 = std::clamp(lam1, 0.0, jval);
        double gap1 = fixed_point_gap(lam1, &gs);
        lambda_star = lam1;
        bool converged = std::abs(gap1) <= tol;
        for (int it = 0; it < 200 && !converged; ++it) {
            double next;
            if (gap1 != gap0 && std::isfinite(gap1 - gap0)) {
                next = lam1 - gap1 * (lam1 - lam0) / (gap1 - gap0);
                if (!(next >= 0.0 && next <= jval)) next = lam1 - gap1;  // fixed point
            } else {
                next = lam1 - gap1;
            }
            next = std::clamp(next, 0.0, jval);
            lam0 = lam1;
            gap0 = gap1;
            lam1 = next;
            gap1 = fixed_point_gap(lam1, &gs);
            lambda_star = lam1;
            converged = std::abs(gap1) <= tol;
        }
        if (!converged)
            throw NonConvergenceError("cj_exact: fixed-point polish did not reach tolerance");
    }

    SpinState state = SpinState::from_real(j, gs.vector);
    SpinMoments mom = moments(state);
    const double c = gs.value + lambda_star * lambda_star;
    return BoundResult{j,     c,   std::nullopt, cj_asymptotic(jval),
                       mom.mean(0), state,        mom};
}

double cj_direct(SpinQuantumNumber j, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("cj_direct requires restarts >= 1");
    const int d = j.dimension();
    const int p = symmetric_count(j);
    if (d == 1) return 0.0;

    const SpinOperatorSet ops = build_operator_set(j);
    const Eigen::VectorXd a_diag = j.casimir() - ops.jz_diagonal.array().square();
    const Eigen::VectorXd& s = ops.ladder_superdiagonal;

    const auto objective = [&](const Eigen::VectorXd& u, Eigen::VectorXd& grad) {
        Eigen::VectorXd r(d);
        for (int k = 0; k < d; ++k) r(k) = u(symmetric_index(j, k));
        const double n = r.squaredNorm();
        if (!(n > 1e-300)) {
            grad.setZero(p);
            return 1e100;
        }
        const double a = r.dot(a_diag.cwiseProduct(r));
        double x = 0.0;
        for (int k = 0; k + 1 < d; ++k) x += s(k) * r(k) * r(k + 1);
        const double an = a / n, xn = x / n;
        const double value = an - xn * xn;

        grad.setZero(p);
        for (int k = 0; k < d; ++k) {
            double xr = 0.0;  // (J_X r)_k
            if (k > 0) xr += 0.5 * s(k - 1) * r(k - 1);
            if (k + 1 < d) xr += 0.5 * s(k) * r(k + 1);
            const double g_r = (2.0 / n) * (a_diag(k) * r(k) - an * r(k)) -
                               (4.0 * xn / n) * (xr - xn * r(k));
            grad(symmetric_index(j, k)) += g_r;
        }
        return value;
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double jt = j.j() + 0.5;
    const double sigma = (j.j() >= 1.0) ? gaussian_sigma(j.j()) : 1.0;

    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Eigen::VectorXd u0(p);
        for (int i = 0; i < p; ++i) {
            const double m_abs = (j.two_j % 2 == 0) ? i : i + 0.5;
            const double x = m_abs / jt;
            u0(i) = std::exp(-x * x / (4.0 * sigma));
        }
        if (r > 0)
            for (int i = 0; i < p; ++i)
                u0(i) = u0(i) * (1.0 + 0.15 * gauss(rng)) + 0.02 * gauss(rng);
        const auto result = optimize::minimize_bfgs(objective, u0, 1e-11, 2000);
        best = std::min(best, result.f);
    }
    return best;
}

double gaussian_sigma(double j) {
    if (!(j > 0.0)) throw std::invalid_argument("gaussian_sigma requires J > 0");
    return std::pow(2.0 * j, -2.0 / 3.0);
}

SpinState variational_gaussian_state(SpinQuantumNumber j) {
    if (j.j() < 1.0)
        throw std::invalid_argument("variational_gaussian_state requires J >= 1");
    const double sigma = gaussian_sigma(j.j());
    const double jt = j.j() + 0.5;
    Eigen::VectorXd r(j.dimension());
    for (int k = 0; k < j.dimension(); ++k) {
        const double x = j.m(k) / jt;
        r(k) = std::exp(-x * x / (4.0 * sigma));
    }
    return SpinState::from_real(j, r);
}

AsymptoticMoments asymptotic_moments(double j) {
    if (j < 1.0) throw std::invalid_argument("asymptotic_moments requires J >= 1");
    AsymptoticMoments out;
    const double u = std::cbrt(2.0 * j);
    out.mean_x = j - 0.5 * std::cbrt(j / 4.0);
    out.var_x = u * u / 8.0;
    out.var_y = u * u / 4.0;
    const double w = std::cbrt(j * j / 2.0);
    out.var_z = w * w;
    return out;
}

BoundResult solve_bound(SpinQuantumNumber j, double tol, int restarts, std::uint64_t seed) {
    BoundResult result = cj_exact(j, tol);
    result.c_direct = cj_direct(j, restarts, seed);
    return result;
}

}  // namespace pqs
