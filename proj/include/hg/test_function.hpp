#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hg/group.hpp"

namespace hg {

using ScalarField = std::function<double(const GroupElement&)>;

/// Closed-form scalar functions used as operator inputs. Everything is a
/// linear combination of four primitives, each evaluable at any point:
///   Bump(center, width)    exp(-(d(center,u)/width)^2)
///   Power(gamma, R, cap)   min(|u|^{-gamma}, cap) restricted to |u| <= R
///   Indicator(ball)        characteristic function
///   LogNorm                ln |u|   (for oscillation-norm inputs)
struct TestFunction {
    enum class Kind { Bump, Power, Indicator, LogNorm };

    struct Term {
        Kind kind = Kind::Bump;
        double coef = 1.0;
        GroupElement center;       // Bump
        double width = 1.0;        // Bump
        double gamma = 1.0;        // Power
        double support_radius = std::numeric_limits<double>::infinity();  // Power R
        double cap = 1e6;          // Power value cap
        Ball ball;                 // Indicator
    };

    std::vector<Term> terms;
    std::string name;

    double operator()(const GroupElement& u) const;

    static TestFunction bump(const GroupElement& center, double width);
    static TestFunction power(double gamma, double support_radius, double cap);
    static TestFunction indicator(const Ball& b);
    static TestFunction log_norm();

    TestFunction& scale(double a);
    TestFunction& add(const TestFunction& other);

    /// True if every term vanishes outside a bounded set.
    bool compactly_supported_hint() const;

    /// Radius R and center such that the function is numerically negligible
    /// (bumps) or exactly zero outside d(center, u) <= R.
    double support_radius_hint() const;
    GroupElement support_center_hint() const;
};

}  // namespace hg
