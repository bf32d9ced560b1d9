#pragma once

#include <cstdint>
#include <vector>

#include "hg/group.hpp"

namespace hg {

/// Quadrature backend for ball integrals. `resolution` is nodes-per-axis for
/// the grid method and the total draw count for Monte Carlo. Output is a
/// deterministic function of (spec, ball index).
struct QuadratureSpec {
    enum class Method { UniformGrid, MonteCarlo };
    Method method = Method::MonteCarlo;
    int resolution = 1 << 17;
    std::uint64_t seed = 0;

    static QuadratureSpec monte_carlo(int draws, std::uint64_t seed) {
        QuadratureSpec q;
        q.method = Method::MonteCarlo;
        q.resolution = draws;
        q.seed = seed;
        return q;
    }
    static QuadratureSpec grid(int per_axis) {
        QuadratureSpec q;
        q.method = Method::UniformGrid;
        q.resolution = per_axis;
        return q;
    }
};

struct WeightedNode {
    GroupElement point;
    double weight;
};

/// Quadrature nodes for integrals over a metric ball. Nodes for B(u0, r) are
/// exactly the image of the unit-ball nodes under w -> u0 * delta_r(w), with
/// weights scaled by r^Q; sum of weights estimates |B|.
std::vector<WeightedNode> sample_ball(const Ball& b, const QuadratureSpec& spec,
                                      std::uint64_t ball_index = 0);

/// Integral of f over the ball using sample_ball nodes.
template <typename F>
double ball_integral(const Ball& b, const QuadratureSpec& spec, F&& f,
                     std::uint64_t ball_index = 0) {
    double acc = 0.0;
    for (const auto& node : sample_ball(b, spec, ball_index)) acc += node.weight * f(node.point);
    return acc;
}

/// Monte Carlo estimate of the unit-ball volume by box rejection; returns
/// {estimate, standard_error}. Used as an independent oracle for the closed form.
std::pair<double, double> unit_ball_volume_mc(const GroupParams& p, std::int64_t draws,
                                              std::uint64_t seed);

}  // namespace hg
