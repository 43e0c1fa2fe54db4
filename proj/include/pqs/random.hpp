#pragma once

#include <random>

#include "pqs/spin.hpp"

namespace pqs {

/// Haar-like random pure state: i.i.d. complex Gaussian amplitudes, normalized.
inline SpinState random_state(SpinQuantumNumber j, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd amp(j.dimension());
    for (int k = 0; k < j.dimension(); ++k) amp(k) = Complex(gauss(rng), gauss(rng));
    return SpinState(j, std::move(amp));
}

/// Random state with real amplitudes (for the amplitude-formula cross-checks).
inline SpinState random_real_state(SpinQuantumNumber j, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd amp(j.dimension());
    for (int k = 0; k < j.dimension(); ++k) amp(k) = gauss(rng);
    if (amp.cwiseAbs().maxCoeff() == 0.0) amp(0) = 1.0;
    return SpinState::from_real(j, amp);
}

}  // namespace pqs
