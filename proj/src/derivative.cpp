#include "hg/derivative.hpp"

#include <stdexcept>

namespace hg {

std::vector<double> horizontal_gradient(const ScalarField& f, const GroupElement& u, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("horizontal_gradient: step must be positive");
    const int n = u.dim_n();
    GroupParams params(n);
    std::vector<double> grad(2 * n);
    GroupElement step = identity(params);
    for (int j = 0; j < n; ++j) {
        step.x(j) = h;
        grad[j] = (f(multiply(u, step)) - f(multiply(u, inverse(step)))) / (2.0 * h);
        step.x(j) = 0.0;
        step.y(j) = h;
        grad[n + j] = (f(multiply(u, step)) - f(multiply(u, inverse(step)))) / (2.0 * h);
        step.y(j) = 0.0;
    }
    return grad;
}

}  // namespace hg
