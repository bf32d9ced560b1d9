#include <cmath>

#include "doctest.h"
#include "hg/group.hpp"
#include "hg/sampling.hpp"

using namespace hg;

TEST_CASE("monte carlo unit ball volume matches the closed form") {
    for (int n : {1, 2}) {
        GroupParams p(n);
        auto [est, se] = unit_ball_volume_mc(p, 2'000'000, 42);
        CHECK(std::abs(est - unit_ball_volume(p)) < 3.0 * se);
    }
}

TEST_CASE("ball sampler weight normalization") {
    Ball b(GroupElement(0.5, -1.0, 2.0), 1.7);
    const double vol = ball_volume(b);

    SUBCASE("monte carlo") {
        auto nodes = sample_ball(b, QuadratureSpec::monte_carlo(1 << 17, 11), 3);
        double sum = 0.0;
        for (const auto& nd : nodes) sum += nd.weight;
        CHECK(std::abs(sum - vol) < 5e-3 * vol);
    }
    SUBCASE("grid") {
        auto nodes = sample_ball(b, QuadratureSpec::grid(24));
        double sum = 0.0;
        for (const auto& nd : nodes) {
            sum += nd.weight;
            CHECK(distance(b.center, nd.point) < b.radius * (1.0 + 1e-9));
        }
        CHECK(std::abs(sum - vol) < 5e-3 * vol);
    }
}

TEST_CASE("sampler determinism and translation covariance") {
    QuadratureSpec spec = QuadratureSpec::monte_carlo(4096, 99);
    Ball unit(GroupElement(0, 0, 0), 1.0);
    Ball moved(GroupElement(1.0, 2.0, -3.0), 2.5);

    auto a1 = sample_ball(moved, spec, 5);
    auto a2 = sample_ball(moved, spec, 5);
    REQUIRE(a1.size() == a2.size());
    for (std::size_t i = 0; i < a1.size(); ++i) {
        CHECK(a1[i].weight == a2[i].weight);
        for (int k = 0; k < 3; ++k) CHECK(a1[i].point.c[k] == a2[i].point.c[k]);
    }

    // Nodes of B(u0, r) are exactly u0 * delta_r(unit nodes).
    auto base = sample_ball(unit, spec, 5);
    REQUIRE(base.size() == a1.size());
    const double rq = std::pow(moved.radius, 4);
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto mapped = multiply(moved.center, dilate(moved.radius, base[i].point));
        for (int k = 0; k < 3; ++k)
            CHECK(a1[i].point.c[k] == doctest::Approx(mapped.c[k]).epsilon(1e-14));
        CHECK(a1[i].weight == doctest::Approx(rq * base[i].weight).epsilon(1e-14));
    }
}

TEST_CASE("ball quadrature integrates catalog functions") {
    // odd symmetry: t-coordinate of u0^{-1} u integrates to zero
    Ball b(GroupElement(0.3, 0.4, -1.0), 2.0);
    const double vol = ball_volume(b);
    for (auto spec : {QuadratureSpec::monte_carlo(1 << 17, 4), QuadratureSpec::grid(24)}) {
        const double val = ball_integral(b, spec, [&](const GroupElement& u) {
            return multiply(inverse(b.center), u).t();
        });
        CHECK(std::abs(val) < 8e-3 * vol * b.radius * b.radius);
    }

    // c2 = int_{B(0,1)} |w|^2 dw = pi^2/3 for n = 1 (MC is the stated oracle)
    Ball unit(GroupElement(0, 0, 0), 1.0);
    const double c2_exact = M_PI * M_PI / 3.0;
    const double c2_mc = ball_integral(unit, QuadratureSpec::monte_carlo(1 << 20, 8),
                                       [](const GroupElement& u) {
                                           const double r = koranyi_norm(u);
                                           return r * r;
                                       });
    CHECK(std::abs(c2_mc - c2_exact) < 0.01 * c2_exact);
    const double c2_grid = ball_integral(unit, QuadratureSpec::grid(32),
                                         [](const GroupElement& u) {
                                             const double r = koranyi_norm(u);
                                             return r * r;
                                         });
    CHECK(std::abs(c2_grid - c2_exact) < 0.01 * c2_exact);
}

TEST_CASE("sampler validates inputs") {
    Ball b(GroupElement(0, 0, 0), 1.0);
    CHECK_THROWS_AS(sample_ball(b, QuadratureSpec::grid(1)), std::invalid_argument);
}
