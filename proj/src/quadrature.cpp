#include "hg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

namespace hg {

namespace {

std::vector<QuadNode> compute_gauss_legendre(int n) {
    // Newton iteration on P_n with the Chebyshev-like initial guess.
    std::vector<QuadNode> out(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        out[i] = {-x, w};
        out[n - 1 - i] = {x, w};
    }
    return out;
}

}  // namespace

const std::vector<QuadNode>& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, std::vector<QuadNode>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

std::vector<QuadNode> gauss_legendre_ab(int order, double a, double b) {
    const auto& base = gauss_legendre(order);
    std::vector<QuadNode> out(base.size());
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < base.size(); ++i)
        out[i] = {mid + half * base[i].x, half * base[i].w};
    return out;
}

std::vector<QuadNode> log_gauss_rule(double a, double b, int per_panel, double panel_log_len) {
    if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("log_gauss_rule: need 0 < a < b");
    const double la = std::log(a), lb = std::log(b);
    const int panels = std::max(1, static_cast<int>(std::ceil((lb - la) / panel_log_len)));
    std::vector<QuadNode> out;
    out.reserve(static_cast<std::size_t>(panels) * per_panel);
    for (int p = 0; p < panels; ++p) {
        const double u0 = la + (lb - la) * p / panels;
        const double u1 = la + (lb - la) * (p + 1) / panels;
        for (const auto& nd : gauss_legendre_ab(per_panel, u0, u1)) {
            const double x = std::exp(nd.x);
            out.push_back({x, nd.w * x});
        }
    }
    return out;
}

namespace {

// Kronrod 15 / Gauss 7 pair.
constexpr double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                            0.741531185599394, 0.586087235467691, 0.405845151377397,
                            0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                            0.140653259715525, 0.169004726639267, 0.190350578064785,
                            0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                           0.417959183673469};

struct Interval {
    double a, b, value, err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double fc = f(mid);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(mid - dx), f2 = f(mid + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double value = resk * half;
    const double err = std::abs((resk - resg) * half);
    return {a, b, value, err};
}

}  // namespace

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tol_rel, double tol_abs, int max_nodes,
                                  int initial_panels) {
    AdaptiveResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    const int seeds = std::clamp(initial_panels, 1, std::max(1, max_nodes / 30));
    std::priority_queue<Interval> heap;
    double total = 0.0, toterr = 0.0;
    for (int k = 0; k < seeds; ++k) {
        Interval seg = gk15(f, a + (b - a) * k / seeds, a + (b - a) * (k + 1) / seeds);
        res.nodes_used += 15;
        total += seg.value;
        toterr += seg.err;
        heap.push(seg);
    }
    while (res.nodes_used + 30 <= max_nodes) {
        if (toterr <= tol_rel * std::abs(total) + tol_abs) break;
        Interval worst = heap.top();
        heap.pop();
        const double m = 0.5 * (worst.a + worst.b);
        Interval left = gk15(f, worst.a, m);
        Interval right = gk15(f, m, worst.b);
        res.nodes_used += 30;
        total += left.value + right.value - worst.value;
        toterr += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    res.value = total;
    res.error = toterr;
    res.converged = toterr <= tol_rel * std::abs(total) + tol_abs;
    return res;
}

std::vector<SphereNode> koranyi_sphere_rule(int n_psi, int n_phi) {
    if (n_psi < 2 || n_phi < 2) throw std::invalid_argument("koranyi_sphere_rule: too few nodes");
    std::vector<SphereNode> out;
    out.reserve(static_cast<std::size_t>(n_psi) * n_phi);
    const auto psi_rule = gauss_legendre_ab(n_psi, -M_PI / 2.0, M_PI / 2.0);
    const double dphi = 2.0 * M_PI / n_phi;
    for (const auto& pn : psi_rule) {
        const double cpsi = std::cos(pn.x);
        const double rho_z = std::sqrt(std::max(cpsi, 0.0));
        const double t = std::sin(pn.x);
        for (int k = 0; k < n_phi; ++k) {
            const double phi = (k + 0.5) * dphi;
            out.push_back({pn.x, phi, rho_z * std::cos(phi), rho_z * std::sin(phi), t,
                           pn.w * dphi});
        }
    }
    return out;
}

}  // namespace hg
