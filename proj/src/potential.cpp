#include "hg/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hg/rng.hpp"

namespace hg {

Potential Potential::constant(double value) {
    if (!(value > 0.0)) throw std::invalid_argument("Potential::constant: value must be > 0");
    Potential V;
    V.kind = Kind::Constant;
    V.c = value;
    return V;
}

Potential Potential::homogeneous_power(double exponent, double kappa) {
    if (exponent < 0.0) throw std::invalid_argument("Potential: power exponent must be >= 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("Potential: scale must be > 0");
    Potential V;
    V.kind = Kind::HomogeneousPower;
    V.a = exponent;
    V.scale = kappa;
    return V;
}

double evaluate_potential(const Potential& V, const GroupElement& u) {
    switch (V.kind) {
        case Potential::Kind::Zero:
            return 0.0;
        case Potential::Kind::Constant:
            return V.c;
        case Potential::Kind::HomogeneousPower:
            return V.scale * std::pow(koranyi_norm(u), V.a);
    }
    return 0.0;
}

double potential_ball_integral(const Potential& V, const Ball& b, const QuadratureSpec& spec,
                               std::uint64_t ball_index) {
    switch (V.kind) {
        case Potential::Kind::Zero:
            return 0.0;
        case Potential::Kind::Constant:
            return V.c * ball_volume(b);
        case Potential::Kind::HomogeneousPower: {
            if (koranyi_norm(b.center) == 0.0) {
                // int_{B(0,r)} kappa |w|^a dw = kappa * 2 pi^2 r^{Q+a} / (Q+a)  for n = 1;
                // general n via the surface measure of the unit sphere = Q |B(0,1)|.
                GroupParams p(b.center.dim_n());
                const int Q = p.homogeneous_dimension();
                const double sphere = Q * unit_ball_volume(p);
                return V.scale * sphere * std::pow(b.radius, Q + V.a) / (Q + V.a);
            }
            return ball_integral(b, spec,
                                 [&](const GroupElement& w) { return evaluate_potential(V, w); },
                                 ball_index);
        }
    }
    return 0.0;
}

RHEstimate rh_constant_estimate(const Potential& V, double s, const QuadratureSpec& sampler,
                                int ball_count, const GroupParams& params, double center_box) {
    if (!(s > 1.0)) throw std::invalid_argument("rh_constant_estimate: need s > 1");
    if (V.is_zero()) throw std::invalid_argument("rh_constant_estimate: zero potential");
    RHEstimate est;
    est.s = s;
    est.balls_tested = ball_count;
    est.constant = 0.0;
    for (int i = 0; i < ball_count; ++i) {
        Rng rng = Rng::stream(sampler.seed, 0x5248, static_cast<std::uint64_t>(i));
        GroupElement c0(params);
        for (auto& a : c0.c) a = rng.uniform(-center_box, center_box);
        const double r = rng.log_uniform(1e-2, 1e2);
        Ball b(c0, r);
        double avg = 0.0, avg_s = 0.0, volume = 0.0;
        for (const auto& node : sample_ball(b, sampler, static_cast<std::uint64_t>(i))) {
            const double v = evaluate_potential(V, node.point);
            avg += node.weight * v;
            avg_s += node.weight * std::pow(v, s);
            volume += node.weight;
        }
        if (volume <= 0.0 || avg <= 0.0) continue;
        avg /= volume;
        avg_s = std::pow(avg_s / volume, 1.0 / s);
        const double ratio = avg_s / avg;
        if (ratio > est.constant) {
            est.constant = ratio;
            est.witness = b;
        }
    }
    return est;
}

namespace {

double rho_objective(const Potential& V, const GroupElement& u, double r,
                     const QuadratureSpec& spec) {
    GroupParams p(u.dim_n());
    const int Q = p.homogeneous_dimension();
    Ball b(u, r);
    return std::pow(r, 2 - Q) * potential_ball_integral(V, b, spec);
}

}  // namespace

double critical_radius(const Potential& V, const GroupElement& u, double tol,
                       const QuadratureSpec& spec) {
    if (V.is_zero()) throw std::invalid_argument("critical_radius: zero potential has rho = inf");
    if (!(tol > 0.0)) throw std::invalid_argument("critical_radius: tol must be > 0");

    // Bracket F(r) = 1 on a log grid, then bisect. F is continuous and strictly
    // increasing for the closed-form catalog; if multiple crossings ever appear
    // we take the largest bracketing interval, matching the sup definition.
    const double lo = 1e-8, hi = 1e8;
    const int grid = 64;
    double a = 0.0, b = 0.0;
    double prev_r = lo, prev_f = rho_objective(V, u, lo, spec);
    if (prev_f > 1.0) throw std::runtime_error("critical_radius: F > 1 at the lower bracket");
    for (int i = 1; i <= grid; ++i) {
        const double r = lo * std::pow(hi / lo, static_cast<double>(i) / grid);
        const double f = rho_objective(V, u, r, spec);
        if (prev_f <= 1.0 && f > 1.0) {
            a = prev_r;
            b = r;  // keep scanning: the sup corresponds to the last upward crossing
        }
        prev_r = r;
        prev_f = f;
    }
    if (a == 0.0)
        throw std::runtime_error("critical_radius: no crossing of F = 1 on [1e-8, 1e8]; "
                                 "unsupported potential");
    while ((b - a) > tol * a) {
        const double mid = std::sqrt(a * b);
        if (rho_objective(V, u, mid, spec) <= 1.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

RhoComparability fit_rho_comparability(
    const Potential& V, const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
    double rho_tol, const QuadratureSpec& spec) {
    if (pairs.size() < 10)
        throw std::invalid_argument("fit_rho_comparability: need at least 10 pairs");
    if (V.is_zero()) throw std::invalid_argument("fit_rho_comparability: zero potential");

    struct Row {
        double ratio;  // rho(v)/rho(u)
        double base;   // 1 + d/rho(u)
    };
    std::vector<Row> rows;
    rows.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        const double ru = critical_radius(V, u, rho_tol, spec);
        const double rv = critical_radius(V, v, rho_tol, spec);
        rows.push_back({rv / ru, 1.0 + distance(v, u) / ru});
    }

    const int nc = 32, nn = 32;
    for (int ic = 0; ic < nc; ++ic) {
        const double C0 = std::exp(std::log(16.0) * ic / (nc - 1));  // 1 .. 16
        for (int in = 0; in < nn; ++in) {
            const double N0 = 0.1 * std::pow(100.0, static_cast<double>(in) / (nn - 1));
            bool ok = true;
            for (const auto& row : rows) {
                const double upper = C0 * std::pow(row.base, N0 / (N0 + 1.0));
                const double lower = std::pow(row.base, -N0) / C0;
                // Small slack absorbs rho solver tolerance.
                if (row.ratio > upper * (1.0 + 4.0 * rho_tol) ||
                    row.ratio < lower * (1.0 - 4.0 * rho_tol)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return {C0, N0};
        }
    }
    throw std::runtime_error("fit_rho_comparability: no feasible (C0, N0) on the search grid");
}

Com2Report check_com2(const Potential& V, double C0, double N0, const GroupElement& u, double r,
                      int k_max, int trials, std::uint64_t seed, const QuadratureSpec& spec) {
    Com2Report report;
    report.worst_margin = std::numeric_limits<double>::infinity();
    const double rho_u = critical_radius(V, u, 1e-5, spec);
    GroupParams params(u.dim_n());
    for (int i = 0; i < trials; ++i) {
        // Random v in B(u,r) by rejection in the unit-ball box.
        Rng rng = Rng::stream(seed, 0xc02, static_cast<std::uint64_t>(i));
        GroupElement w(params);
        do {
            for (auto& a : w.c) a = rng.uniform(-1.0, 1.0);
        } while (koranyi_norm(w) >= 1.0);
        const GroupElement v = multiply(u, dilate(r, w));
        const double rho_v = critical_radius(V, v, 1e-5, spec);
        for (int k = 1; k <= k_max; ++k) {
            const double pk = std::pow(2.0, k) * r;
            const double lhs = 1.0 + pk / rho_v;
            const double rhs = std::pow(1.0 + r / rho_u, -N0 / (N0 + 1.0)) *
                               (1.0 + pk / rho_u) / C0;
            ++report.trials;
            const double margin = lhs - rhs;
            report.worst_margin = std::min(report.worst_margin, margin);
            if (margin < -1e-9 * rhs) ++report.violations;
        }
    }
    return report;
}

}  // namespace hg
