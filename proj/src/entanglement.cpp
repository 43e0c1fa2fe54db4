#include "pqs/entanglement.hpp"

#include <cmath>

#include "pqs/bound.hpp"

namespace pqs {

namespace {

std::int64_t pow_dim(int d, int n) {
    std::int64_t out = 1;
    for (int i = 0; i < n; ++i) {
        if (out > MultiSiteState::kMaxPureDimension) return out;
        out *= d;
    }
    return out;
}

std::span<const int> resolve_signs(std::span<const int> signs, int n_sites,
                                   std::vector<int>& storage) {
    if (signs.empty()) {
        storage.assign(n_sites, 1);
        return storage;
    }
    if (static_cast<int>(signs.size()) != n_sites)
        throw std::invalid_argument("sign vector length must equal the number of sites");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    return signs;
}

// out += sign * (J_axis on site `site`) applied to psi.
void accumulate_site_apply(const SpinOperatorSet& ops, int axis, int site, int n_sites,
                           double sign, const Eigen::VectorXcd& psi, Eigen::VectorXcd& out) {
    const int d = ops.j.dimension();
    const std::int64_t dim = psi.size();
    std::int64_t stride = 1;
    for (int k = site + 1; k < n_sites; ++k) stride *= d;
    const std::int64_t block = stride * d;
    const Complex half_i(0.0, 0.5);

    for (std::int64_t base = 0; base < dim; base += block) {
        for (std::int64_t off = 0; off < stride; ++off) {
            const std::int64_t at = base + off;
            if (axis == 2) {
                for (int t = 0; t < d; ++t)
                    out(at + t * stride) += sign * ops.jz_diagonal(t) * psi(at + t * stride);
            } else if (axis == 0) {
                for (int t = 0; t + 1 < d; ++t) {
                    const double s = 0.5 * ops.ladder_superdiagonal(t);
                    out(at + (t + 1) * stride) += sign * s * psi(at + t * stride);
                    out(at + t * stride) += sign * s * psi(at + (t + 1) * stride);
                }
            } else {
                for (int t = 0; t + 1 < d; ++t) {
                    const double s = ops.ladder_superdiagonal(t);
                    out(at + (t + 1) * stride) += sign * (-half_i) * s * psi(at + t * stride);
                    out(at + t * stride) += sign * half_i * s * psi(at + (t + 1) * stride);
                }
            }
        }
    }
}

Eigen::MatrixXcd site_operator_dense(const SpinOperatorSet& ops, int axis) {
    if (axis == 0) return ops.jx().cast<Complex>();
    if (axis == 1) return ops.jy();
    return ops.jz().cast<Complex>();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    return out;
}

Eigen::MatrixXcd collective_operator_dense(SpinQuantumNumber j, int n_sites, int axis,
                                           std::span<const int> signs) {
    const SpinOperatorSet ops = build_operator_set(j);
    const Eigen::MatrixXcd local = site_operator_dense(ops, axis);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(j.dimension(), j.dimension());
    Eigen::MatrixXcd total;
    for (int k = 0; k < n_sites; ++k) {
        Eigen::MatrixXcd term = (k == 0) ? Eigen::MatrixXcd(double(signs[k]) * local) : id;
        for (int p = 1; p < n_sites; ++p)
            term = kron(term, (p == k) ? Eigen::MatrixXcd(double(signs[k]) * local) : id);
        total = (k == 0) ? term : Eigen::MatrixXcd(total + term);
    }
    return total;
}

}  // namespace

SignConfig SignConfig::all_plus(int n_sites) {
    SignConfig out;
    out.x.assign(n_sites, 1);
    out.y.assign(n_sites, 1);
    return out;
}

void SignConfig::validate(int n_sites) const {
    if (static_cast<int>(x.size()) != n_sites || static_cast<int>(y.size()) != n_sites)
        throw std::invalid_argument("SignConfig size must match the number of sites");
    for (int s : x)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    for (int s : y)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
}

MultiSiteState MultiSiteState::pure(SpinQuantumNumber j, int n_sites,
                                    Eigen::VectorXcd amplitudes) {
    if (n_sites < 1) throw std::invalid_argument("n_sites must be >= 1");
    const std::int64_t dim = pow_dim(j.dimension(), n_sites);
    if (dim > kMaxPureDimension)
        throw DimensionTooLargeError("pure multi-site dimension exceeds the supported limit");
    if (amplitudes.size() != dim)
        throw std::invalid_argument("amplitude tensor has the wrong dimension");
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("amplitude tensor must be nonzero and finite");
    MultiSiteState out(j, n_sites);
    out.amplitudes_ = amplitudes / norm;
    return out;
}

MultiSiteState MultiSiteState::density(SpinQuantumNumber j, int n_sites,
                                       Eigen::MatrixXcd rho) {
    if (n_sites < 1) throw std::invalid_argument("n_sites must be >= 1");
    const std::int64_t dim = pow_dim(j.dimension(), n_sites);
    if (dim > kMaxDensityDimension)
        throw DimensionTooLargeError("density-operator dimension exceeds the supported limit");
    if (rho.rows() != dim || rho.cols() != dim)
        throw std::invalid_argument("density operator has the wrong dimension");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("density operator must be Hermitian");
    const double trace = rho.trace().real();
    if (!(trace > 0.0) || !std::isfinite(trace))
        throw std::invalid_argument("density operator must have positive trace");
    rho /= trace;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density operator must be positive semidefinite");
    MultiSiteState out(j, n_sites);
    out.is_density_ = true;
    out.rho_ = std::move(rho);
    return out;
}

std::int64_t MultiSiteState::dimension() const {
    return is_density_ ? rho_.rows() : amplitudes_.size();
}

const Eigen::VectorXcd& MultiSiteState::amplitudes() const {
    if (is_density_) throw std::logic_error("state is a density operator");
    return amplitudes_;
}

const Eigen::MatrixXcd& MultiSiteState::density_matrix() const {
    if (!is_density_) throw std::logic_error("state is a pure tensor");
    return rho_;
}

namespace {

// mean and second moment of the signed collective component in one pass
std::pair<double, double> collective_first_second(const MultiSiteState& state, int axis,
                                                  std::span<const int> signs) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
    std::vector<int> storage;
    const auto sg = resolve_signs(signs, state.n_sites(), storage);
    const SpinOperatorSet ops = build_operator_set(state.site_spin());

    if (!state.is_density()) {
        const Eigen::VectorXcd& psi = state.amplitudes();
        Eigen::VectorXcd applied = Eigen::VectorXcd::Zero(psi.size());
        for (int k = 0; k < state.n_sites(); ++k)
            accumulate_site_apply(ops, axis, k, state.n_sites(), double(sg[k]), psi, applied);
        return {psi.dot(applied).real(), applied.squaredNorm()};
    }
    const Eigen::MatrixXcd op =
        collective_operator_dense(state.site_spin(), state.n_sites(), axis, sg);
    const Eigen::MatrixXcd rho_op = state.density_matrix() * op;
    const double mean = rho_op.trace().real();
    const double second = (rho_op * op).trace().real();
    return {mean, second};
}

}  // namespace

double collective_mean(const MultiSiteState& state, int axis, std::span<const int> signs) {
    return collective_first_second(state, axis, signs).first;
}

double collective_variance(const MultiSiteState& state, int axis, std::span<const int> signs) {
    const auto [mean, second] = collective_first_second(state, axis, signs);
    return second - mean * mean;
}

double s2(const MultiSiteState& state, const SignConfig& signs) {
    signs.validate(state.n_sites());
    return collective_variance(state, 0, signs.x) + collective_variance(state, 1, signs.y);
}

MultiSiteState maximally_entangled_state(SpinQuantumNumber j, int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("n_sites must be >= 1");
    const std::int64_t dim = pow_dim(j.dimension(), n_sites);
    if (dim > MultiSiteState::kMaxPureDimension)
        throw DimensionTooLargeError("multi-site dimension exceeds the supported limit");
    // |J,m>^{x N} sits at index m_index * (d^{N-1} + ... + 1)
    std::int64_t repunit = 0, power = 1;
    for (int k = 0; k < n_sites; ++k) {
        repunit += power;
        power *= j.dimension();
    }
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(dim);
    for (int t = 0; t < j.dimension(); ++t) amp(t * repunit) = 1.0;
    return MultiSiteState::pure(j, n_sites, std::move(amp));
}

MultiSiteState singlet_state(SpinQuantumNumber j) {
    const int d = j.dimension();
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(std::int64_t(d) * d);
    for (int t = 0; t < d; ++t) {
        const double sign = ((j.two_j - t) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{J-m}
        amp(std::int64_t(t) * d + (d - 1 - t)) = sign;
    }
    return MultiSiteState::pure(j, 2, std::move(amp));
}

MultiSiteState product_state(std::span<const SpinState> sites) {
    if (sites.empty()) throw std::invalid_argument("product_state requires at least one site");
    const SpinQuantumNumber j = sites[0].j();
    for (const SpinState& s : sites)
        if (!(s.j() == j)) throw std::invalid_argument("all sites must share the same J");
    Eigen::VectorXcd amp = sites[0].amplitudes();
    for (std::size_t k = 1; k < sites.size(); ++k) {
        Eigen::VectorXcd next(amp.size() * sites[k].dimension());
        for (Eigen::Index i = 0; i < amp.size(); ++i)
            next.segment(i * sites[k].dimension(), sites[k].dimension()) =
                amp(i) * sites[k].amplitudes();
        amp = std::move(next);
    }
    return MultiSiteState::pure(j, static_cast<int>(sites.size()), std::move(amp));
}

void WernerParams::validate() const {
    if (n_sites < 2) throw std::invalid_argument("WernerParams requires n_sites >= 2");
    if (!(p_n >= 0.0 && p_n <= 1.0))
        throw std::invalid_argument("WernerParams requires p_n in [0, 1]");
}

MultiSiteState werner_state(const WernerParams& params) {
    params.validate();
    if (params.n_sites != 2)
        throw std::invalid_argument("explicit werner_state is limited to two sites");
    const std::int64_t dim = std::int64_t(params.j.dimension()) * params.j.dimension();
    if (dim > MultiSiteState::kMaxDensityDimension)
        throw DimensionTooLargeError("Werner density dimension exceeds the supported limit");
    const MultiSiteState singlet = singlet_state(params.j);
    const Eigen::VectorXcd& s = singlet.amplitudes();
    Eigen::MatrixXcd rho =
        params.p_n / double(dim) * Eigen::MatrixXcd::Identity(dim, dim) +
        (1.0 - params.p_n) * (s * s.adjoint());
    return MultiSiteState::density(params.j, 2, std::move(rho));
}

double werner_s2_closed(const WernerParams& params) {
    params.validate();
    return (2.0 * params.n_sites / 3.0) * params.j.casimir() * params.p_n;
}

double noise_threshold(SpinQuantumNumber j) {
    return noise_threshold(j, cj_exact(j).c_exact);
}

double noise_threshold(SpinQuantumNumber j, double c_exact_value) {
    if (j.two_j == 0) throw std::invalid_argument("noise_threshold requires J > 0");
    return 3.0 * c_exact_value / (2.0 * j.casimir());
}

Verdict witness(double s2_value, int n_sites, SpinQuantumNumber j) {
    return witness(s2_value, n_sites, cj_exact(j).c_exact);
}

Verdict witness(double s2_value, int n_sites, double c_exact_value) {
    if (n_sites < 1) throw std::invalid_argument("witness requires n_sites >= 1");
    return (s2_value < n_sites * c_exact_value - 1e-12) ? Verdict::Entangled
                                                        : Verdict::NotDetected;
}

}  // namespace pqs
