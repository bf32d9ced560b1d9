#include <cmath>

#include "doctest.h"
#include "hg/group.hpp"
#include "hg/potential.hpp"
#include "hg/rng.hpp"

using namespace hg;

namespace {
const double kUnitVol = M_PI * M_PI / 2.0;   // |B(0,1)|, n = 1
const double kC2 = M_PI * M_PI / 3.0;        // int_{B(0,1)} |w|^2 dw, n = 1
}  // namespace

TEST_CASE("potential evaluation") {
    GroupElement u(1.0, 0.0, 1.0);  // |u|^4 = 2
    CHECK(evaluate_potential(Potential::zero(), u) == 0.0);
    CHECK(evaluate_potential(Potential::constant(3.0), u) == 3.0);
    CHECK(evaluate_potential(Potential::homogeneous_power(2.0, 1.0), u) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    // HomogeneousPower(0, c) is the constant c
    Rng rng = Rng::stream(3, 0);
    auto Vp = Potential::homogeneous_power(0.0, 2.5);
    auto Vc = Potential::constant(2.5);
    for (int i = 0; i < 100; ++i) {
        GroupElement w(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-25, 25));
        CHECK(std::abs(evaluate_potential(Vp, w) - evaluate_potential(Vc, w)) < 1e-10);
    }
}

TEST_CASE("critical radius: constant potential closed form") {
    // F(r) = c r^2 |B(0,1)|  =>  rho = (c |B(0,1)|)^{-1/2}
    auto V = Potential::constant(1.0);
    const double expected = 1.0 / std::sqrt(kUnitVol);
    CHECK(expected == doctest::Approx(0.450158).epsilon(1e-5));
    const double got = critical_radius(V, GroupElement(0, 0, 0), 1e-9);
    CHECK(got == doctest::Approx(expected).epsilon(1e-6));

    // translation invariance: same value at random centers
    Rng rng = Rng::stream(3, 1);
    for (int i = 0; i < 10; ++i) {
        GroupElement u(rng.uniform(-8, 8), rng.uniform(-8, 8), rng.uniform(-60, 60));
        CHECK(critical_radius(V, u, 1e-7) == doctest::Approx(expected).epsilon(1e-6));
    }

    auto V4 = Potential::constant(4.0);
    CHECK(critical_radius(V4, GroupElement(0, 0, 0), 1e-9) ==
          doctest::Approx(expected / 2.0).epsilon(1e-6));
}

TEST_CASE("critical radius: homogeneous power at the origin") {
    // F(r) = c2 r^4  =>  rho(0) = c2^{-1/4}; solver must use quadrature, the
    // closed form is the oracle.
    auto V = Potential::homogeneous_power(2.0, 1.0);
    const double expected = std::pow(kC2, -0.25);
    const double got = critical_radius(V, GroupElement(0, 0, 0), 1e-6, QuadratureSpec::grid(32));
    CHECK(got == doctest::Approx(expected).epsilon(0.01));

    SUBCASE("kappa_V scaling of rho(0)") {
        for (double kappa : {0.5, 2.0, 8.0}) {
            auto Vk = Potential::homogeneous_power(2.0, kappa);
            const double rk =
                critical_radius(Vk, GroupElement(0, 0, 0), 1e-6, QuadratureSpec::grid(32));
            CHECK(rk == doctest::Approx(got * std::pow(kappa, -0.25)).epsilon(0.01));
        }
    }
}

TEST_CASE("critical radius rejects unsupported input") {
    CHECK_THROWS_AS(critical_radius(Potential::zero(), GroupElement(0, 0, 0), 1e-6),
                    std::invalid_argument);
    CHECK_THROWS_AS(critical_radius(Potential::constant(1.0), GroupElement(0, 0, 0), -1.0),
                    std::invalid_argument);
}

TEST_CASE("F(r) is increasing on log grids for the catalog") {
    GroupParams p(1);
    for (auto V : {Potential::constant(2.0), Potential::homogeneous_power(2.0, 1.0),
                   Potential::homogeneous_power(1.0, 0.7)}) {
        GroupElement u(0.7, -0.3, 0.4);
        double prev = -1.0;
        for (int i = 0; i <= 40; ++i) {
            const double r = 1e-3 * std::pow(1e6, i / 40.0);
            const double F = std::pow(r, 2 - p.homogeneous_dimension()) *
                             potential_ball_integral(V, Ball(u, r), QuadratureSpec::grid(16));
            CHECK(F >= prev * (1.0 - 1e-9));
            prev = F;
        }
    }
}

TEST_CASE("reverse Hoelder estimates") {
    QuadratureSpec sampler = QuadratureSpec::monte_carlo(20000, 21);

    SUBCASE("constant potential has constant 1") {
        auto est = rh_constant_estimate(Potential::constant(5.0), 2.0, sampler, 32, GroupParams(1));
        CHECK(est.constant == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("power potential: finite and stable under doubling") {
        auto V = Potential::homogeneous_power(2.0, 1.0);
        auto e1 = rh_constant_estimate(V, 2.0, sampler, 64, GroupParams(1));
        auto e2 = rh_constant_estimate(V, 2.0, sampler, 128, GroupParams(1));
        CHECK(e1.constant > 1.0);
        CHECK(std::isfinite(e2.constant));
        CHECK(std::abs(e2.constant - e1.constant) <= 0.10 * e1.constant);
    }
    SUBCASE("power with a = 0 agrees with the constant") {
        auto ep = rh_constant_estimate(Potential::homogeneous_power(0.0, 2.5), 3.0, sampler, 16,
                                       GroupParams(1));
        auto ec = rh_constant_estimate(Potential::constant(2.5), 3.0, sampler, 16, GroupParams(1));
        CHECK(std::abs(ep.constant - ec.constant) < 1e-10);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(rh_constant_estimate(Potential::constant(1.0), 1.0, sampler, 8,
                                             GroupParams(1)),
                        std::invalid_argument);
        CHECK_THROWS_AS(rh_constant_estimate(Potential::zero(), 2.0, sampler, 8, GroupParams(1)),
                        std::invalid_argument);
    }
}

TEST_CASE("rho comparability fit and com2") {
    Rng rng = Rng::stream(3, 7);

    SUBCASE("constant potential fits C0 = 1") {
        std::vector<std::pair<GroupElement, GroupElement>> pairs;
        for (int i = 0; i < 12; ++i)
            pairs.emplace_back(GroupElement(rng.uniform(-4, 4), rng.uniform(-4, 4),
                                            rng.uniform(-10, 10)),
                               GroupElement(rng.uniform(-4, 4), rng.uniform(-4, 4),
                                            rng.uniform(-10, 10)));
        auto fit = fit_rho_comparability(Potential::constant(2.0), pairs);
        CHECK(fit.C0 == doctest::Approx(1.0).epsilon(1e-6));

        auto rep = check_com2(Potential::constant(2.0), fit.C0, fit.N0, GroupElement(1, 0, 0),
                              0.8, 4, 50, 17);
        CHECK(rep.violations == 0);
    }

    SUBCASE("homogeneous power: feasible fit, validated on fresh pairs") {
        auto V = Potential::homogeneous_power(2.0, 1.0);
        auto draw_pairs = [&](int count, std::uint64_t salt) {
            std::vector<std::pair<GroupElement, GroupElement>> pairs;
            Rng r2 = Rng::stream(500 + salt, 0);
            for (int i = 0; i < count; ++i)
                pairs.emplace_back(GroupElement(r2.uniform(-3, 3), r2.uniform(-3, 3),
                                                r2.uniform(-6, 6)),
                                   GroupElement(r2.uniform(-3, 3), r2.uniform(-3, 3),
                                                r2.uniform(-6, 6)));
            return pairs;
        };
        auto fit = fit_rho_comparability(V, draw_pairs(24, 1));
        CHECK(fit.C0 >= 1.0);
        CHECK(fit.N0 > 0.0);

        // fresh validation set satisfies (com) with the fitted constants
        for (const auto& [u, v] : draw_pairs(24, 2)) {
            const double ru = critical_radius(V, u, 1e-5);
            const double rv = critical_radius(V, v, 1e-5);
            const double base = 1.0 + distance(v, u) / ru;
            const double ratio = rv / ru;
            CHECK(ratio <= fit.C0 * std::pow(base, fit.N0 / (fit.N0 + 1.0)) * 1.002);
            CHECK(ratio >= std::pow(base, -fit.N0) / fit.C0 * 0.998);
        }

        // degenerate pairs u = v only require C0 >= 1
        std::vector<std::pair<GroupElement, GroupElement>> same;
        for (int i = 0; i < 10; ++i) {
            GroupElement u(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-4, 4));
            same.emplace_back(u, u);
        }
        auto fit2 = fit_rho_comparability(V, same);
        CHECK(fit2.C0 == doctest::Approx(1.0).epsilon(1e-6));

        auto rep = check_com2(V, fit.C0, fit.N0, GroupElement(0.5, 0.5, 1.0), 0.6, 3, 100, 23);
        CHECK(rep.violations == 0);
    }

    SUBCASE("too few pairs") {
        std::vector<std::pair<GroupElement, GroupElement>> pairs(3);
        CHECK_THROWS_AS(fit_rho_comparability(Potential::constant(1.0), pairs),
                        std::invalid_argument);
    }
}
