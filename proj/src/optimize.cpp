#include "pqs/optimize.hpp"

#include <cmath>

namespace pqs::optimize {

ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double a,
                              double b, double tol, int max_iter) {
    // Brent's method (golden section with parabolic interpolation).
    const double golden = 0.3819660112501051;
    double x = a + golden * (b - a);
    double w = x, v = x;
    double fx = f(x);
    double fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    int evals = 1;

    for (int iter = 0; iter < max_iter; ++iter) {
        const double mid = 0.5 * (a + b);
        const double tol1 = tol + 1e-15 * std::abs(x);
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) break;

        bool use_golden = true;
        if (std::abs(e) > tol1) {
            // fit a parabola through (v,fv),(w,fw),(x,fx)
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_prev = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) &&
                p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, mid - x);
                use_golden = false;
            }
        }
        if (use_golden) {
            e = (x >= mid) ? a - x : b - x;
            d = golden * e;
        }
        const double u = (std::abs(d) >= tol1) ? x + d : x + std::copysign(tol1, d);
        const double fu = f(u);
        ++evals;
        if (fu <= fx) {
            if (u >= x) a = x; else b = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return {x, fx, evals};
}

Bracket bracket_minimum(const std::function<double(double)>& f, double x0,
                        double step, double lo, double hi, int max_expand) {
    auto clamp = [&](double x) { return std::min(hi, std::max(lo, x)); };
    Bracket br;
    double a = clamp(x0 - step);
    double b = clamp(x0);
    double c = clamp(x0 + step);
    double fa = f(a), fb = f(b), fc = f(c);
    for (int it = 0; it < max_expand; ++it) {
        if (fb < fa && fb < fc && a < b && b < c) {
            br = {a, b, c, true};
            return br;
        }
        step *= 1.7;
        if (fa <= fb) {
            // slide downhill to the left
            const double na = clamp(a - step);
            if (na == a) return br;
            c = b; fc = fb;
            b = a; fb = fa;
            a = na;
            fa = f(a);
        } else {
            // slide downhill to the right
            const double nc = clamp(c + step);
            if (nc == c) return br;
            a = b; fa = fb;
            b = c; fb = fc;
            c = nc;
            fc = f(c);
        }
    }
    return br;
}

QuasiNewtonResult minimize_bfgs(
    const std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>& f_grad,
    Eigen::VectorXd x0, double grad_tol, int max_iter) {
    const int n = static_cast<int>(x0.size());
    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd x = std::move(x0);
    Eigen::VectorXd grad(n), grad_new(n);
    double fx = f_grad(x, grad);

    QuasiNewtonResult result;
    for (int iter = 0; iter < max_iter; ++iter) {
        result.iterations = iter;
        result.grad_norm = grad.norm();
        if (result.grad_norm <= grad_tol * std::max(1.0, std::abs(fx))) {
            result.converged = true;
            break;
        }
        Eigen::VectorXd dir = -(h_inv * grad);
        double slope = grad.dot(dir);
        if (slope >= 0.0) {
            // reset to steepest descent if the metric lost positive-definiteness
            h_inv.setIdentity();
            dir = -grad;
            slope = grad.dot(dir);
        }

        // backtracking Armijo line search
        double step = 1.0;
        const double c1 = 1e-4;
        double f_new = 0.0;
        Eigen::VectorXd x_new;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            x_new = x + step * dir;
            f_new = f_grad(x_new, grad_new);
            if (std::isfinite(f_new) && f_new <= fx + c1 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;

        const Eigen::VectorXd s = x_new - x;
        const Eigen::VectorXd y = grad_new - grad;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            const double rho = 1.0 / sy;
            const Eigen::VectorXd hy = h_inv * y;
            // BFGS inverse update
            h_inv += (sy + y.dot(hy)) * rho * rho * (s * s.transpose()) -
                     rho * (hy * s.transpose() + s * hy.transpose());
        }
        x = std::move(x_new);
        grad = grad_new;
        fx = f_new;
    }
    result.x = std::move(x);
    result.f = fx;
    result.grad_norm = grad.norm();
    return result;
}

}  // namespace pqs::optimize
