#pragma once

// Planar-variance entanglement witness S2 < N*C_J on explicit multi-site
// states (pure tensors or density operators) and closed forms for
// Werner-mixed singlets.

#include <cstdint>
#include <span>
#include <vector>

#include "pqs/spin.hpp"

namespace pqs {

/// Per-site, per-axis signs c_{k,i} in {+1,-1} entering the collective
/// operators J_i^total = sum_k c_{k,i} J_i^(k) for i in {X, Y}.
struct SignConfig {
    std::vector<int> x;
    std::vector<int> y;

    static SignConfig all_plus(int n_sites);
    void validate(int n_sites) const;
};

/// Tensor-product state over N sites of equal spin J: either a pure amplitude
/// tensor of dimension (2J+1)^N or a density operator of the same dimension.
class MultiSiteState {
public:
    static MultiSiteState pure(SpinQuantumNumber j, int n_sites, Eigen::VectorXcd amplitudes);
    static MultiSiteState density(SpinQuantumNumber j, int n_sites, Eigen::MatrixXcd rho);

    SpinQuantumNumber site_spin() const { return j_; }
    int n_sites() const { return n_sites_; }
    std::int64_t dimension() const;
    bool is_density() const { return is_density_; }
    const Eigen::VectorXcd& amplitudes() const;
    const Eigen::MatrixXcd& density_matrix() const;

    static constexpr std::int64_t kMaxPureDimension = 1'000'000;
    static constexpr std::int64_t kMaxDensityDimension = 1024;

private:
    MultiSiteState(SpinQuantumNumber j, int n_sites) : j_(j), n_sites_(n_sites) {}

    SpinQuantumNumber j_;
    int n_sites_ = 0;
    bool is_density_ = false;
    Eigen::VectorXcd amplitudes_;
    Eigen::MatrixXcd rho_;
};

/// Mean of a signed collective component (axis 0,1,2 = X,Y,Z).  Null signs
/// mean all +1.
double collective_mean(const MultiSiteState& state, int axis,
                       std::span<const int> signs = {});
/// Variance of a signed collective component.
double collective_variance(const MultiSiteState& state, int axis,
                           std::span<const int> signs = {});

/// Planar collective variance sum S2 = Var(J_X^total) + Var(J_Y^total).
double s2(const MultiSiteState& state, const SignConfig& signs);

/// |J,N>_M = (2J+1)^{-1/2} sum_m |J,m>^{x N}.
MultiSiteState maximally_entangled_state(SpinQuantumNumber j, int n_sites);

/// Two-site total-spin-zero singlet, proportional to
/// sum_m (-1)^{J-m} |J,m> x |J,-m>.
MultiSiteState singlet_state(SpinQuantumNumber j);

/// Product state over sites of equal J.
MultiSiteState product_state(std::span<const SpinState> sites);

struct WernerParams {
    SpinQuantumNumber j;
    int n_sites = 2;
    double p_n = 0.0;  // white-noise weight in [0, 1]

    void validate() const;
};

/// Explicit Werner density operator p_n [I/(2J+1)]^{x N} + (1-p_n)|S><S|
/// (two sites only).
MultiSiteState werner_state(const WernerParams& params);

/// Closed form S2 = (2N/3) J(J+1) p_n for the Werner-mixed singlet.
double werner_s2_closed(const WernerParams& params);

/// Noise bound p_n < 3 C_J / (2J(J+1)) for detecting entanglement.
double noise_threshold(SpinQuantumNumber j);
double noise_threshold(SpinQuantumNumber j, double c_exact_value);

enum class Verdict { Entangled, NotDetected };

/// Strict-inequality witness S2 < N*C_J with a 1e-12 guard band.
Verdict witness(double s2_value, int n_sites, SpinQuantumNumber j);
Verdict witness(double s2_value, int n_sites, double c_exact_value);

}  // namespace pqs
