#pragma once

#include <vector>

#include "hg/group.hpp"
#include "hg/test_function.hpp"

namespace hg {

/// Central finite differences of the horizontal fields
///   X_j f = df/dx_j + 2 y_j df/dt,   Y_j f = df/dy_j - 2 x_j df/dt,
/// taken along the exact group flows u * (±h e_j, 0) and u * (±i h e_j, 0),
/// which integrate the left-invariant fields. Order h^2.
/// Returns (X_1 f, .., X_n f, Y_1 f, .., Y_n f).
std::vector<double> horizontal_gradient(const ScalarField& f, const GroupElement& u, double h);

/// Step choice balancing truncation against rounding.
inline double default_fd_step(const GroupElement& u) {
    return 1e-4 * (1.0 + koranyi_norm(u));
}

}  // namespace hg
