#pragma once

// Small dense optimization kernels: bracketed 1-D minimization (golden
// section with parabolic refinement) and a BFGS quasi-Newton minimizer with
// an Armijo/Wolfe backtracking line search.

#include <Eigen/Dense>
#include <functional>

namespace pqs::optimize {

struct ScalarMinimum {
    double x = 0.0;
    double f = 0.0;
    int evaluations = 0;
};

/// Brent minimization of f on [a, b].  tol is an absolute tolerance on x.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_iter = 200);

struct Bracket {
    double a = 0.0, b = 0.0, c = 0.0;  // a < b < c with f(b) < min(f(a), f(c))
    bool ok = false;
};

/// Expand around x0 until a three-point minimum bracket is found.
/// grow > 1 controls the expansion rate; lo/hi clamp the search domain.
Bracket bracket_minimum(const std::function<double(double)>& f, double x0,
                        double step, double lo, double hi, int max_expand = 60);

struct QuasiNewtonResult {
    Eigen::VectorXd x;
    double f = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// BFGS minimization of f with analytic gradient.
QuasiNewtonResult minimize_bfgs(
    const std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>& f_grad,
    Eigen::VectorXd x0, double grad_tol = 1e-10, int max_iter = 500);

}  // namespace pqs::optimize
