#include "hg/heat_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hg/parallel.hpp"
#include "hg/quadrature.hpp"

namespace hg {

namespace {

// log sinh(x), stable for large x.
double log_sinh(double x) {
    return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
}

// Integrand (l/sinh(l s))^n exp(-(l zz/4) coth(l s)) cos(l t) for l > 0,
// evaluated in log space to avoid overflow.
double lambda_integrand(double l, double s, double zz, double t, int n) {
    if (l * s < 1e-12) {
        return std::exp(-n * std::log(s) - zz / (4.0 * s)) * std::cos(l * t);
    }
    const double ls = l * s;
    const double log_amp = n * (std::log(l) - log_sinh(ls));
    const double expo = -(l * zz / 4.0) / std::tanh(ls);
    const double le = log_amp + expo;
    if (le < -745.0) return 0.0;
    return std::exp(le) * std::cos(l * t);
}

double lambda_cutoff(double s, double zz, int n, double efolds) {
    const double rate = n * s + zz / 4.0;
    // Solve rate * L - n log L = efolds approximately.
    double L = (efolds + 5.0) / rate;
    for (int i = 0; i < 3; ++i) L = (efolds + n * std::log(std::max(L, 1.0)) + 5.0) / rate;
    return L;
}

constexpr double kTwoPi = 2.0 * M_PI;

double prefactor(int n) { return 2.0 / (kTwoPi * std::pow(4.0 * M_PI, n)); }

}  // namespace

double heat_kernel(double s, const GroupElement& u, const HeatQuadrature& hq) {
    if (!(s > 0.0)) throw std::invalid_argument("heat_kernel: s must be positive");
    const int n = u.dim_n();

    // Integrate in mu = lambda * s. This evaluates s^{-Q/2} H_1(delta_{1/sqrt s} u)
    // and keeps the window short exactly when the cosine would oscillate fast.
    const double zz = z_norm_sq(u) / s;
    const double t = u.t() / s;
    const double scale = std::pow(s, -(n + 1.0));

    // Roundoff plateau of GK sums over an O(40)-long window of an O(1)
    // integrand; asking for less than this just burns the budget.
    const double tol_abs = 1e-14 * std::pow(3.0, n);

    // Points whose value provably sits below the plateau return exactly 0:
    // decay is e^{-|z'|^2/4} radially and e^{-pi |t'|/4} in the center
    // direction (sinh pole). Keeps the oscillatory work bounded as well.
    if (std::abs(t) * M_PI / 4.0 > 30.0 || zz / 4.0 > 30.0) return 0.0;

    const double L = lambda_cutoff(1.0, zz, n, hq.lambda_cutoff_factor);

    double integral = 0.0;
    if (hq.adaptive) {
        // ~2.5 seed panels per cosine period so the error estimates never alias.
        const int panels =
            std::max(4, static_cast<int>(std::ceil(L * (std::abs(t) + 1.0) * 0.4)));
        auto res = integrate_adaptive(
            [&](double l) { return lambda_integrand(l, 1.0, zz, t, n); }, 0.0, L, hq.tol_rel,
            tol_abs, hq.lambda_nodes, panels);
        if (!res.converged && res.error > 1e-8 * std::abs(res.value) + 20.0 * tol_abs)
            throw std::runtime_error("heat_kernel: adaptive refinement exceeded node budget");
        integral = res.value;
    } else {
        for (const auto& nd : log_gauss_rule(std::max(L * 1e-8, 1e-14), L, 12, 0.5))
            integral += nd.w * lambda_integrand(nd.x, 1.0, zz, t, n);
    }

    // Anything below the noise plateau is reported as 0. The negative window
    // matches the accepted-error allowance above; larger negatives signal
    // genuine non-convergence.
    if (integral < 40.0 * tol_abs) {
        if (integral > -100.0 * tol_abs) return 0.0;
        throw std::runtime_error("heat_kernel: quadrature produced a non-negligible negative");
    }
    return prefactor(n) * scale * integral;
}

// ---------------------------------------------------------------------------
// H_1 table (n = 1)

namespace {
constexpr double kTableNormCap = 48.0;  // |u|^2 cutoff; H_1 ~ e^{-|u|^2/4} there
}

const HeatKernelTable& HeatKernelTable::instance() {
    static HeatKernelTable table;
    return table;
}

HeatKernelTable::HeatKernelTable() {
    r_max_ = std::sqrt(kTableNormCap);
    t_max_ = kTableNormCap;
    nr_ = 348;
    nt_ = 960;
    hr_ = r_max_ / nr_;
    ht_ = t_max_ / nt_;
    grid_.assign(static_cast<std::size_t>(nr_ + 3) * (nt_ + 3), 0.0);

    HeatQuadrature hq;
    hq.tol_rel = 1e-11;
    hq.lambda_nodes = 16384;

    // Rows ir = -1 .. nr+1 map to storage ir+1; even reflection handles r < 0.
    parallel_for(static_cast<std::size_t>(nr_ + 3), [&](std::size_t row) {
        const int ir = static_cast<int>(row) - 1;
        const double r = std::abs(ir) * hr_;
        for (int it = -1; it <= nt_ + 1; ++it) {
            const double t = std::abs(it) * ht_;
            GroupElement u(r, 0.0, t);
            grid_[row * (nt_ + 3) + (it + 1)] = heat_kernel(1.0, u, hq);
        }
    });
    h1_00_ = at(1, 1);
}

namespace {
// Catmull-Rom weights for fractional position f in [0,1].
inline void cr_weights(double f, double w[4]) {
    const double f2 = f * f, f3 = f2 * f;
    w[0] = 0.5 * (-f3 + 2 * f2 - f);
    w[1] = 0.5 * (3 * f3 - 5 * f2 + 2);
    w[2] = 0.5 * (-3 * f3 + 4 * f2 + f);
    w[3] = 0.5 * (f3 - f2);
}
}  // namespace

double HeatKernelTable::eval_h1(double r, double t) const {
    r = std::abs(r);
    t = std::abs(t);
    if (r >= r_max_ - hr_ || t >= t_max_ - ht_) return 0.0;
    const double gr = r / hr_, gt = t / ht_;
    const int ir = static_cast<int>(gr), it = static_cast<int>(gt);
    double wr[4], wt[4];
    cr_weights(gr - ir, wr);
    cr_weights(gt - it, wt);
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        const int row = ir + a;  // storage offset: logical index ir-1+a maps to ir+a
        double rowacc = 0.0;
        for (int b = 0; b < 4; ++b) rowacc += wt[b] * at(row, it + b);
        acc += wr[a] * rowacc;
    }
    return std::max(acc, 0.0);
}

double HeatKernelTable::eval(double s, const GroupElement& u) const {
    if (u.dim_n() != 1) throw std::invalid_argument("HeatKernelTable: n = 1 only");
    const double rs = std::sqrt(s);
    return eval_h1(std::sqrt(z_norm_sq(u)) / rs, u.t() / s) / (s * s);
}

// ---------------------------------------------------------------------------

BoundFit fit_gaussian_bound(const HeatQuadrature& hq,
                            const std::vector<std::pair<double, GroupElement>>& sample) {
    if (sample.empty()) throw std::invalid_argument("fit_gaussian_bound: empty sample");
    const int n = sample.front().second.dim_n();
    const double qhalf = n + 1.0;

    std::vector<double> h(sample.size()), n2(sample.size()), sq(sample.size());
    parallel_for(sample.size(), [&](std::size_t i) {
        const auto& [s, u] = sample[i];
        h[i] = heat_kernel(s, u, hq);
        const double norm = koranyi_norm(u);
        n2[i] = norm * norm;
        sq[i] = std::pow(s, qhalf);
    });

    BoundFit fit;
    fit.C_fit = std::numeric_limits<double>::infinity();
    const int na = 96;
    for (int ia = 0; ia < na; ++ia) {
        const double A = 0.5 * std::pow(128.0, static_cast<double>(ia) / (na - 1));
        double C = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i)
            C = std::max(C, h[i] * sq[i] * std::exp(n2[i] / (A * sample[i].first)));
        if (C < fit.C_fit) {
            fit.C_fit = C;
            fit.A_fit = A;
        }
    }
    return fit;
}

double heat_apply_pointwise(double s, const ScalarField& f, const GroupElement& u,
                            const HeatQuadrature& hq, const SemigroupApplyOptions& opts) {
    if (!(s > 0.0)) throw std::invalid_argument("heat_apply_pointwise: s must be positive");
    if (u.dim_n() != 1) throw std::invalid_argument("heat_apply_pointwise: n = 1 only");

    const double efolds = std::log(1.0 / opts.trunc_eps);
    const double M2 = opts.c_R * opts.c_R * opts.gauss_rate * s * efolds;  // |w|^2 cutoff
    const double mass_bound = 3.0 * std::exp(-M2 / (opts.gauss_rate * s));
    if (mass_bound > opts.trunc_mass_tol)
        throw std::runtime_error("heat_apply_pointwise: truncation mass exceeds tolerance");

    const HeatKernelTable* table = opts.use_table ? &HeatKernelTable::instance() : nullptr;
    auto kernel = [&](const GroupElement& w) {
        return table ? table->eval(s, w) : heat_kernel(s, w, hq);
    };

    // Radial panels in |z| at the sqrt(s) scale, geometric afterwards.
    const double r_max = std::sqrt(M2);
    std::vector<double> r_edges{0.0};
    double edge = std::sqrt(s);
    while (edge < r_max) {
        r_edges.push_back(edge);
        edge *= 2.0;
    }
    r_edges.push_back(r_max);

    // t panels likewise at scale s.
    const double t_max = M2;
    std::vector<double> t_edges{0.0};
    edge = s;
    while (edge < t_max) {
        t_edges.push_back(edge);
        edge *= 3.0;
    }
    t_edges.push_back(t_max);

    const double dphi = 2.0 * M_PI / opts.angular_nodes;
    double acc = 0.0;
    GroupElement w(0.0, 0.0, 0.0);
    for (std::size_t ip = 0; ip + 1 < r_edges.size(); ++ip) {
        for (const auto& rn : gauss_legendre_ab(opts.radial_nodes, r_edges[ip], r_edges[ip + 1])) {
            for (std::size_t jp = 0; jp + 1 < t_edges.size(); ++jp) {
                for (const auto& tn :
                     gauss_legendre_ab(opts.t_panel_nodes, t_edges[jp], t_edges[jp + 1])) {
                    for (int sgn = -1; sgn <= 1; sgn += 2) {
                        w.c[2] = sgn * tn.x;
                        for (int k = 0; k < opts.angular_nodes; ++k) {
                            const double phi = (k + 0.5) * dphi;
                            w.c[0] = rn.x * std::cos(phi);
                            w.c[1] = rn.x * std::sin(phi);
                            const double hval = kernel(w);
                            if (hval == 0.0) continue;
                            acc += rn.w * tn.w * dphi * rn.x * hval *
                                   f(multiply(u, inverse(w)));
                        }
                    }
                }
            }
        }
    }
    return acc;
}

}  // namespace hg
