#include "pqs/spin.hpp"

#include <cmath>

namespace pqs {

SpinQuantumNumber SpinQuantumNumber::from_two_j(int two_j) {
    if (two_j < 0) throw std::invalid_argument("spin quantum number requires two_j >= 0");
    return SpinQuantumNumber{two_j};
}

SpinQuantumNumber SpinQuantumNumber::from_j(double j) {
    const double two_j = 2.0 * j;
    const int rounded = static_cast<int>(std::lround(two_j));
    if (rounded < 0 || std::abs(two_j - rounded) > 1e-9)
        throw std::invalid_argument("spin quantum number must be a non-negative half-integer");
    return SpinQuantumNumber{rounded};
}

SpinState::SpinState(SpinQuantumNumber j, Eigen::VectorXcd amplitudes)
    : j_(j), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != j_.dimension())
        throw std::invalid_argument("amplitude vector length must equal 2J+1");
    const double norm2 = amplitudes_.squaredNorm();
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw std::invalid_argument("amplitude vector must be nonzero and finite");
    // keep already-normalized data bit-exact (serialization round trips)
    if (std::abs(norm2 - 1.0) > 1e-12) amplitudes_ /= std::sqrt(norm2);
}

SpinState SpinState::from_real(SpinQuantumNumber j, const Eigen::VectorXd& amplitudes) {
    return SpinState(j, Eigen::VectorXcd(amplitudes.cast<Complex>()));
}

SpinState SpinState::basis_state(SpinQuantumNumber j, double m) {
    const double k = m + j.j();
    const int index = static_cast<int>(std::lround(k));
    if (index < 0 || index >= j.dimension() || std::abs(k - index) > 1e-9)
        throw std::invalid_argument("m must lie in -J..J in integer steps");
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(j.dimension());
    amp(index) = 1.0;
    return SpinState(j, std::move(amp));
}

SpinOperatorSet build_operator_set(SpinQuantumNumber j) {
    const int d = j.dimension();
    SpinOperatorSet ops;
    ops.j = j;
    ops.jz_diagonal.resize(d);
    ops.ladder_superdiagonal.resize(std::max(d - 1, 0));
    const double jj = j.casimir();
    for (int k = 0; k < d; ++k) ops.jz_diagonal(k) = j.m(k);
    for (int k = 0; k + 1 < d; ++k) {
        const double m = j.m(k);
        ops.ladder_superdiagonal(k) = std::sqrt(jj - m * (m + 1.0));
    }
    return ops;
}

Eigen::MatrixXd SpinOperatorSet::jx() const {
    const int d = j.dimension();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
    for (int k = 0; k + 1 < d; ++k) {
        out(k, k + 1) = 0.5 * ladder_superdiagonal(k);
        out(k + 1, k) = 0.5 * ladder_superdiagonal(k);
    }
    return out;
}

Eigen::MatrixXcd SpinOperatorSet::jy() const {
    const int d = j.dimension();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    const Complex half_i(0.0, 0.5);
    for (int k = 0; k + 1 < d; ++k) {
        // J_Y = (J_+ - J_-)/(2i); J_+ populates the subdiagonal in this indexing.
        out(k + 1, k) = -half_i * ladder_superdiagonal(k);
        out(k, k + 1) = half_i * ladder_superdiagonal(k);
    }
    return out;
}

Eigen::MatrixXd SpinOperatorSet::jz() const {
    return jz_diagonal.asDiagonal();
}

void SpinOperatorSet::apply_jx(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    const int d = j.dimension();
    out.setZero(d);
    for (int k = 0; k + 1 < d; ++k) {
        const double s = 0.5 * ladder_superdiagonal(k);
        out(k + 1) += s * in(k);
        out(k) += s * in(k + 1);
    }
}

void SpinOperatorSet::apply_jy(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    const int d = j.dimension();
    out.setZero(d);
    const Complex half_i(0.0, 0.5);
    for (int k = 0; k + 1 < d; ++k) {
        const double s = ladder_superdiagonal(k);
        out(k + 1) += -half_i * s * in(k);
        out(k) += half_i * s * in(k + 1);
    }
}

void SpinOperatorSet::apply_jz(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    out = jz_diagonal.array() * in.array();
}

SpinMoments moments(const SpinState& state) {
    const SpinOperatorSet ops = build_operator_set(state.j());
    const Eigen::VectorXcd& psi = state.amplitudes();

    std::array<Eigen::VectorXcd, 3> applied;
    ops.apply_jx(psi, applied[0]);
    ops.apply_jy(psi, applied[1]);
    ops.apply_jz(psi, applied[2]);

    SpinMoments out;
    for (int i = 0; i < 3; ++i) out.mean(i) = psi.dot(applied[i]).real();
    for (int i = 0; i < 3; ++i)
        for (int k = i; k < 3; ++k) {
            // Re <J_i psi | J_k psi> equals the symmetrized moment <{J_i,J_k}>/2.
            const double v = applied[i].dot(applied[k]).real();
            out.second(i, k) = v;
            out.second(k, i) = v;
        }
    for (int i = 0; i < 3; ++i) out.variances(i) = out.second(i, i) - out.mean(i) * out.mean(i);
    out.planar_sum = out.variances(0) + out.variances(1);
    return out;
}

SpinState rotate_about_z(const SpinState& state, double angle) {
    const SpinQuantumNumber j = state.j();
    Eigen::VectorXcd amp = state.amplitudes();
    for (int k = 0; k < j.dimension(); ++k)
        amp(k) *= std::exp(Complex(0.0, -angle * j.m(k)));
    return SpinState(j, std::move(amp));
}

double planar_square_sum_formula(SpinQuantumNumber j, const Eigen::VectorXd& r) {
    if (r.size() != j.dimension())
        throw std::invalid_argument("amplitude vector length must equal 2J+1");
    const double n = r.squaredNorm();
    if (!(n > 0.0)) throw std::invalid_argument("amplitude vector must be nonzero");
    const double jt = j.j() + 0.5;
    double acc = 0.0;
    for (int k = 0; k < j.dimension(); ++k) {
        const double m = j.m(k);
        acc += r(k) * r(k) * (jt * jt - m * m);
    }
    return -0.25 + acc / n;
}

double mean_x_formula(SpinQuantumNumber j, const Eigen::VectorXd& r) {
    if (r.size() != j.dimension())
        throw std::invalid_argument("amplitude vector length must equal 2J+1");
    const double n = r.squaredNorm();
    if (!(n > 0.0)) throw std::invalid_argument("amplitude vector must be nonzero");
    const double jj = j.casimir();
    double acc = 0.0;
    for (int k = 0; k + 1 < j.dimension(); ++k) {
        const double m = j.m(k);
        acc += r(k) * r(k + 1) * std::sqrt(jj - m * (m + 1.0));
    }
    return acc / n;
}

}  // namespace pqs
