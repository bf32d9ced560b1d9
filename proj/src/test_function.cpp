#include "hg/test_function.hpp"

#include <algorithm>
#include <cmath>

namespace hg {

double TestFunction::operator()(const GroupElement& u) const {
    double acc = 0.0;
    for (const auto& term : terms) {
        switch (term.kind) {
            case Kind::Bump: {
                const double d = distance(term.center, u) / term.width;
                acc += term.coef * std::exp(-d * d);
                break;
            }
            case Kind::Power: {
                const double r = koranyi_norm(u);
                if (r <= term.support_radius) {
                    const double v = r > 0.0 ? std::pow(r, -term.gamma)
                                             : std::numeric_limits<double>::infinity();
                    acc += term.coef * std::min(v, term.cap);
                }
                break;
            }
            case Kind::Indicator:
                if (distance(term.ball.center, u) < term.ball.radius) acc += term.coef;
                break;
            case Kind::LogNorm: {
                const double r = std::max(koranyi_norm(u), 1e-300);
                acc += term.coef * std::log(r);
                break;
            }
        }
    }
    return acc;
}

TestFunction TestFunction::bump(const GroupElement& center, double width) {
    TestFunction f;
    Term term;
    term.kind = Kind::Bump;
    term.center = center;
    term.width = width;
    f.terms.push_back(term);
    f.name = "bump";
    return f;
}

TestFunction TestFunction::power(double gamma, double support_radius, double cap) {
    TestFunction f;
    Term term;
    term.kind = Kind::Power;
    term.gamma = gamma;
    term.support_radius = support_radius;
    term.cap = cap;
    f.terms.push_back(term);
    f.name = "power";
    return f;
}

TestFunction TestFunction::indicator(const Ball& b) {
    TestFunction f;
    Term term;
    term.kind = Kind::Indicator;
    term.ball = b;
    f.terms.push_back(term);
    f.name = "indicator";
    return f;
}

TestFunction TestFunction::log_norm() {
    TestFunction f;
    Term term;
    term.kind = Kind::LogNorm;
    f.terms.push_back(term);
    f.name = "log_norm";
    return f;
}

TestFunction& TestFunction::scale(double a) {
    for (auto& term : terms) term.coef *= a;
    return *this;
}

TestFunction& TestFunction::add(const TestFunction& other) {
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
    return *this;
}

bool TestFunction::compactly_supported_hint() const {
    for (const auto& term : terms) {
        if (term.kind == Kind::LogNorm) return false;
        if (term.kind == Kind::Power && !std::isfinite(term.support_radius)) return false;
    }
    return true;
}

double TestFunction::support_radius_hint() const {
    const GroupElement c0 = support_center_hint();
    double r = 0.0;
    for (const auto& term : terms) {
        switch (term.kind) {
            case Kind::Bump:
                r = std::max(r, distance(c0, term.center) + 6.5 * term.width);
                break;
            case Kind::Power:
                r = std::max(r, koranyi_norm(c0) +
                                    (std::isfinite(term.support_radius) ? term.support_radius
                                                                        : 1e3));
                break;
            case Kind::Indicator:
                r = std::max(r, distance(c0, term.ball.center) + term.ball.radius);
                break;
            case Kind::LogNorm:
                r = std::max(r, 1e3);
                break;
        }
    }
    return r;
}

GroupElement TestFunction::support_center_hint() const {
    for (const auto& term : terms) {
        if (term.kind == Kind::Bump) return term.center;
        if (term.kind == Kind::Indicator) return term.ball.center;
    }
    return GroupElement();  // origin, n = 1
}

}  // namespace hg
