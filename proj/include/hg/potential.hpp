#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hg/group.hpp"
#include "hg/sampling.hpp"

namespace hg {

/// Closed-form nonnegative potentials with known reverse-Hölder membership:
/// constants lie in RH_inf, and homogeneous powers |u|^a with a >= 0 are
/// locally A_inf weights, hence RH_s for every s. The zero potential is only
/// admitted for free-case operators (rho == infinity).
struct Potential {
    enum class Kind { Zero, Constant, HomogeneousPower };
    Kind kind = Kind::Zero;
    double c = 1.0;      // Constant value
    double a = 0.0;      // power exponent, >= 0
    double scale = 1.0;  // kappa_V in  V(u) = kappa_V |u|^a

    static Potential zero() { return Potential{}; }
    static Potential constant(double value);
    static Potential homogeneous_power(double exponent, double kappa);

    bool is_zero() const { return kind == Kind::Zero; }
};

double evaluate_potential(const Potential& V, const GroupElement& u);

/// Exact value where the closed form permits (Zero and Constant everywhere;
/// HomogeneousPower on origin-centered balls), quadrature otherwise.
double potential_ball_integral(const Potential& V, const Ball& b, const QuadratureSpec& spec,
                               std::uint64_t ball_index = 0);

struct RHEstimate {
    double s = 2.0;
    double constant = 1.0;  // sup over tested balls of (avg V^s)^{1/s} / avg V
    int balls_tested = 0;
    Ball witness;
};

/// Empirical reverse-Hölder constant over `ball_count` balls with log-uniform
/// radii in [1e-2, 1e2] and centers drawn from [-box, box] coordinates.
RHEstimate rh_constant_estimate(const Potential& V, double s, const QuadratureSpec& sampler,
                                int ball_count, const GroupParams& params,
                                double center_box = 10.0);

/// Critical radius rho(u) = sup{ r > 0 : r^{2-Q} int_{B(u,r)} V <= 1 },
/// located by log-grid bracketing of F(r) followed by bisection to relative
/// width tol. Throws if F never crosses 1 on [1e-8, 1e8].
double critical_radius(const Potential& V, const GroupElement& u, double tol,
                       const QuadratureSpec& spec = QuadratureSpec::grid(24));

struct RhoComparability {
    double C0 = 1.0;
    double N0 = 1.0;
};

/// Smallest grid pair (C0, N0), C0 in [1,16] and N0 in [0.1,10] log-spaced
/// 32x32, such that both comparability inequalities
///   C0^{-1} (1 + d/rho(u))^{-N0} <= rho(v)/rho(u) <= C0 (1 + d/rho(u))^{N0/(N0+1)}
/// hold for every supplied pair (d = |v^{-1}u|). "Smallest" is lexicographic
/// in (C0, N0). Throws when no grid pair is feasible.
RhoComparability fit_rho_comparability(const Potential& V,
                                       const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                                       double rho_tol = 1e-4,
                                       const QuadratureSpec& spec = QuadratureSpec::grid(24));

struct Com2Report {
    long trials = 0;
    long violations = 0;
    double worst_margin = 0.0;  // min over trials of lhs - rhs (negative = violation)
};

/// Checks  1 + 2^k r / rho(v) >= C0^{-1} (1 + r/rho(u))^{-N0/(N0+1)} (1 + 2^k r/rho(u))
/// for random v in B(u,r) and k = 1..k_max. Violations are reported, not thrown.
Com2Report check_com2(const Potential& V, double C0, double N0, const GroupElement& u, double r,
                      int k_max, int trials, std::uint64_t seed,
                      const QuadratureSpec& spec = QuadratureSpec::grid(24));

}  // namespace hg
