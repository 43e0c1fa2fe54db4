#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pqs {

/// Base class for all numerical/domain failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A bracketed 1-D minimization or an iterative solve failed to converge.
struct NonConvergenceError : Error {
    using Error::Error;
};

/// The two lowest eigenvalues coincide to relative precision; both members
/// of the ground doublet are reported.
struct DegenerateGroundError : Error {
    DegenerateGroundError(std::string msg, double e0, double e1,
                          std::vector<double> first, std::vector<double> second)
        : Error(std::move(msg)), e0(e0), e1(e1),
          first(std::move(first)), second(std::move(second)) {}
    double e0;
    double e1;
    std::vector<double> first;
    std::vector<double> second;
};

/// Interferometer operating point where the fringe derivative vanishes.
struct InsensitivePointError : Error {
    using Error::Error;
};

/// The error-propagation formula requires vanishing symmetrized X-Y covariance.
struct CovarianceAssumptionError : Error {
    using Error::Error;
};

/// Requested explicit multi-site construction exceeds the supported dimension.
struct DimensionTooLargeError : Error {
    using Error::Error;
};

}  // namespace pqs
