#pragma once

// Exact finite-dimensional spin-J algebra: operators, states, moments and
// Z-rotations in the J_Z eigenbasis.  Array index k corresponds to the
// magnetic quantum number m = k - J throughout.

#include <Eigen/Dense>
#include <complex>

#include "pqs/errors.hpp"

namespace pqs {

using Complex = std::complex<double>;

/// Spin quantum number stored as 2J so half-integer spins are exact.
struct SpinQuantumNumber {
    int two_j = 0;

    static SpinQuantumNumber from_two_j(int two_j);
    /// Accepts integer or half-integer j (validated to 1e-9).
    static SpinQuantumNumber from_j(double j);

    double j() const { return 0.5 * two_j; }
    int dimension() const { return two_j + 1; }
    /// m value at array index k, m = k - J.
    double m(int k) const { return k - 0.5 * two_j; }
    /// J(J+1)
    double casimir() const { return j() * (j() + 1.0); }

    bool operator==(const SpinQuantumNumber&) const = default;
};

/// Pure state of a spin-J system.  Amplitudes are indexed by m = -J..J and
/// normalized on construction; callers never see an unnormalized state.
class SpinState {
public:
    SpinState(SpinQuantumNumber j, Eigen::VectorXcd amplitudes);

    /// Construct from real amplitudes.
    static SpinState from_real(SpinQuantumNumber j, const Eigen::VectorXd& amplitudes);
    /// The eigenstate |J, m>.
    static SpinState basis_state(SpinQuantumNumber j, double m);

    const SpinQuantumNumber& j() const { return j_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    int dimension() const { return j_.dimension(); }

private:
    SpinQuantumNumber j_;
    Eigen::VectorXcd amplitudes_;
};

/// Tridiagonal data for J_X, J_Y, J_Z plus dense representations on demand.
///
/// jz_diagonal holds the m values; ladder_superdiagonal(k) holds
/// sqrt(J(J+1) - m_k(m_k+1)), the matrix element of J_+ coupling k -> k+1.
struct SpinOperatorSet {
    SpinQuantumNumber j;
    Eigen::VectorXd jz_diagonal;
    Eigen::VectorXd ladder_superdiagonal;

    Eigen::MatrixXd jx() const;    // real symmetric tridiagonal, zero diagonal
    Eigen::MatrixXcd jy() const;   // purely imaginary tridiagonal
    Eigen::MatrixXd jz() const;    // diagonal

    void apply_jx(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
    void apply_jy(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
    void apply_jz(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
};

SpinOperatorSet build_operator_set(SpinQuantumNumber j);

/// First moments, symmetrized second moments and the planar variance sum.
struct SpinMoments {
    Eigen::Vector3d mean;       // <J_X>, <J_Y>, <J_Z>
    Eigen::Matrix3d second;     // <{J_i,J_j}>/2
    Eigen::Vector3d variances;  // second(i,i) - mean(i)^2
    double planar_sum = 0.0;    // variances(0) + variances(1)

    /// Symmetrized covariance <{J_i,J_j}>/2 - <J_i><J_j>.
    double covariance(int i, int k) const { return second(i, k) - mean(i) * mean(k); }
};

/// Expectation values computed from explicit operator action on the state.
SpinMoments moments(const SpinState& state);

/// Apply exp(-i*angle*J_Z); pure phases e^{-i*angle*m} on the amplitudes.
SpinState rotate_about_z(const SpinState& state, double angle);

/// Closed-form <J_X^2 + J_Y^2> from real amplitudes via the index-shifted sum
/// -1/4 + sum_m r_m^2 [(J+1/2)^2 - m^2].  Cross-check only; production code
/// uses operator matrices.
double planar_square_sum_formula(SpinQuantumNumber j, const Eigen::VectorXd& r);

/// Closed-form <J_X> from real amplitudes via the adjacent-pair sum
/// sum_m r_m r_{m+1} sqrt(J(J+1) - m(m+1)).  Cross-check only.
double mean_x_formula(SpinQuantumNumber j, const Eigen::VectorXd& r);

}  // namespace pqs
