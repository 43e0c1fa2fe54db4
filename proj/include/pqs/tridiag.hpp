#pragma once

// Real symmetric tridiagonal eigen-solvers.  Small/medium problems go through
// Eigen's implicit QL; large ones use Sturm-sequence bisection for the lowest
// eigenvalues plus shifted inverse iteration for the vector.

#include <Eigen/Dense>
#include <array>

namespace pqs::tridiag {

struct SymmetricTridiagonal {
    Eigen::VectorXd diag;     // size n
    Eigen::VectorXd offdiag;  // size n-1

    int size() const { return static_cast<int>(diag.size()); }
    Eigen::MatrixXd dense() const;
};

/// All eigenvalues, ascending (implicit QL, no vectors).
Eigen::VectorXd eigenvalues(const SymmetricTridiagonal& t);

/// Number of eigenvalues strictly below x (Sturm sequence count).
int count_below(const SymmetricTridiagonal& t, double x);

/// The k smallest eigenvalues by bisection, ascending.
Eigen::VectorXd smallest_eigenvalues(const SymmetricTridiagonal& t, int k,
                                     double rel_tol = 1e-14);

struct GroundState {
    double value = 0.0;
    Eigen::VectorXd vector;
};

/// Ground pair via full symmetric eigendecomposition.
GroundState ground_state_dense(const SymmetricTridiagonal& t);

/// Ground pair via bisection + shifted inverse iteration.
GroundState ground_state_inverse_iteration(const SymmetricTridiagonal& t);

/// Dispatching solver: dense decomposition up to dense_limit rows, inverse
/// iteration beyond.  The returned vector is normalized with its largest-
/// magnitude entry positive.
GroundState ground_state(const SymmetricTridiagonal& t, int dense_limit = 2001);

/// Two lowest eigenvalues (for degeneracy checks), ascending.
std::array<double, 2> two_smallest_eigenvalues(const SymmetricTridiagonal& t);

}  // namespace pqs::tridiag
