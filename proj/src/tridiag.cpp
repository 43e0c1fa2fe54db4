#include "pqs/tridiag.hpp"

#include <cmath>
#include <limits>

#include "pqs/errors.hpp"

namespace pqs::tridiag {

namespace {

// Gershgorin interval containing the whole spectrum.
std::pair<double, double> spectrum_bounds(const SymmetricTridiagonal& t) {
    const int n = t.size();
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.offdiag(i - 1));
        if (i + 1 < n) r += std::abs(t.offdiag(i));
        lo = std::min(lo, t.diag(i) - r);
        hi = std::max(hi, t.diag(i) + r);
    }
    return {lo, hi};
}

// LU factorization of (T - shift I) with partial pivoting, then one solve.
// Layout follows the usual tridiagonal gttrf/gtts2 scheme with a second
// superdiagonal for fill-in.
struct ShiftedFactor {
    Eigen::VectorXd dl, d, du, du2;
    std::vector<int> pivoted;

    ShiftedFactor(const SymmetricTridiagonal& t, double shift) {
        const int n = t.size();
        dl.resize(std::max(n - 1, 0));
        d.resize(n);
        du.resize(std::max(n - 1, 0));
        du2 = Eigen::VectorXd::Zero(std::max(n - 2, 0));
        pivoted.assign(std::max(n - 1, 0), 0);
        for (int i = 0; i < n; ++i) d(i) = t.diag(i) - shift;
        for (int i = 0; i + 1 < n; ++i) dl(i) = du(i) = t.offdiag(i);

        const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
        for (int i = 0; i + 1 < n; ++i) {
            if (std::abs(d(i)) >= std::abs(dl(i))) {
                if (std::abs(d(i)) < tiny) d(i) = std::copysign(tiny, d(i) == 0.0 ? 1.0 : d(i));
                const double mult = dl(i) / d(i);
                dl(i) = mult;
                d(i + 1) -= mult * du(i);
            } else {
                const double mult = d(i) / dl(i);
                d(i) = dl(i);
                dl(i) = mult;
                const double tmp = du(i);
                du(i) = d(i + 1);
                d(i + 1) = tmp - mult * d(i + 1);
                if (i + 2 < n) {
                    du2(i) = du(i + 1);
                    du(i + 1) = -mult * du(i + 1);
                }
                pivoted[i] = 1;
            }
        }
        if (n > 0 && std::abs(d(n - 1)) < tiny)
            d(n - 1) = std::copysign(tiny, d(n - 1) == 0.0 ? 1.0 : d(n - 1));
    }

    void solve(Eigen::VectorXd& b) const {
        const int n = static_cast<int>(d.size());
        for (int i = 0; i + 1 < n; ++i) {
            if (pivoted[i]) std::swap(b(i), b(i + 1));
            b(i + 1) -= dl(i) * b(i);
        }
        b(n - 1) /= d(n - 1);
        if (n > 1) {
            b(n - 2) = (b(n - 2) - du(n - 2) * b(n - 1)) / d(n - 2);
            for (int i = n - 3; i >= 0; --i)
                b(i) = (b(i) - du(i) * b(i + 1) - du2(i) * b(i + 2)) / d(i);
        }
    }
};

}  // namespace

Eigen::MatrixXd SymmetricTridiagonal::dense() const {
    const int n = size();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = diag(i);
    for (int i = 0; i + 1 < n; ++i) {
        out(i, i + 1) = offdiag(i);
        out(i + 1, i) = offdiag(i);
    }
    return out;
}

Eigen::VectorXd eigenvalues(const SymmetricTridiagonal& t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(t.diag, t.offdiag, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

int count_below(const SymmetricTridiagonal& t, double x) {
    const int n = t.size();
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        const double e2 = (i == 0) ? 0.0 : t.offdiag(i - 1) * t.offdiag(i - 1);
        q = t.diag(i) - x - (i == 0 ? 0.0 : e2 / q);
        if (q == 0.0) q = -std::numeric_limits<double>::min();
        if (q < 0.0) ++count;
    }
    return count;
}

Eigen::VectorXd smallest_eigenvalues(const SymmetricTridiagonal& t, int k, double rel_tol) {
    const int n = t.size();
    k = std::min(k, n);
    auto [lo, hi] = spectrum_bounds(t);
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    Eigen::VectorXd out(k);
    for (int idx = 0; idx < k; ++idx) {
        double a = lo, b = hi;
        // eigenvalue #idx is the unique x with count_below(x) crossing idx -> idx+1
        for (int it = 0; it < 200 && (b - a) > rel_tol * scale; ++it) {
            const double mid = 0.5 * (a + b);
            if (count_below(t, mid) > idx)
                b = mid;
            else
                a = mid;
        }
        out(idx) = 0.5 * (a + b);
    }
    return out;
}

GroundState ground_state_dense(const SymmetricTridiagonal& t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(t.diag, t.offdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw NonConvergenceError("tridiagonal QL iteration failed");
    GroundState out;
    out.value = solver.eigenvalues()(0);
    out.vector = solver.eigenvectors().col(0);
    return out;
}

GroundState ground_state_inverse_iteration(const SymmetricTridiagonal& t) {
    const int n = t.size();
    const double e0 = smallest_eigenvalues(t, 1)(0);
    auto [lo, hi] = spectrum_bounds(t);
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});

    ShiftedFactor factor(t, e0);
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    double residual = std::numeric_limits<double>::max();
    for (int it = 0; it < 20; ++it) {
        factor.solve(v);
        const double norm = v.norm();
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw NonConvergenceError("inverse iteration produced a non-finite vector");
        v /= norm;
        // residual ||T v - e0 v||
        residual = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = (t.diag(i) - e0) * v(i);
            if (i > 0) r += t.offdiag(i - 1) * v(i - 1);
            if (i + 1 < n) r += t.offdiag(i) * v(i + 1);
            residual += r * r;
        }
        residual = std::sqrt(residual);
        if (residual < 1e-12 * scale) break;
    }
    if (!(residual < 1e-8 * scale))
        throw NonConvergenceError("inverse iteration did not converge to the ground state");
    GroundState out;
    out.value = e0;
    out.vector = std::move(v);
    return out;
}

GroundState ground_state(const SymmetricTridiagonal& t, int dense_limit) {
    GroundState gs = (t.size() <= dense_limit) ? ground_state_dense(t)
                                               : ground_state_inverse_iteration(t);
    int imax = 0;
    gs.vector.cwiseAbs().maxCoeff(&imax);
    if (gs.vector(imax) < 0.0) gs.vector = -gs.vector;
    return gs;
}

std::array<double, 2> two_smallest_eigenvalues(const SymmetricTridiagonal& t) {
    if (t.size() < 2) {
        const double e = t.size() == 1 ? t.diag(0) : 0.0;
        return {e, e};
    }
    if (t.size() <= 2001) {
        const Eigen::VectorXd evals = eigenvalues(t);
        return {evals(0), evals(1)};
    }
    const Eigen::VectorXd evals = smallest_eigenvalues(t, 2);
    return {evals(0), evals(1)};
}

}  // namespace pqs::tridiag
