#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hg/group.hpp"
#include "hg/test_function.hpp"

namespace hg {

/// Controls the lambda-quadrature of the heat kernel's oscillatory integral
///   H_s(z,t) = (2pi)^{-1} (4pi)^{-n} int_R (|l|/sinh|l|s)^n
///                exp(-(|l||z|^2/4) coth(|l|s)) cos(l t) dl.
/// The integrand decays like exp(-l (n s + |z|^2/4)); lambda_cutoff_factor
/// sets how many e-folds are kept.
struct HeatQuadrature {
    double lambda_cutoff_factor = 40.0;
    int lambda_nodes = 12288;  // adaptive node budget
    bool adaptive = true;
    double tol_rel = 5e-13;
};

/// Direct evaluation by adaptive Gauss-Kronrod quadrature. Tiny negative
/// quadrature residue (|v| < 1e-12 * H_s(0)) is clamped to zero; anything
/// more negative signals non-convergence and throws. Exact in n.
double heat_kernel(double s, const GroupElement& u, const HeatQuadrature& hq = {});

/// Tabulated H_1 on (r = |z|, t) for n = 1, bicubic interpolation, built once.
/// eval(s, u) uses the scaling H_s(z,t) = s^{-Q/2} H_1(z/sqrt(s), t/s), which
/// makes table lookups invariant under (s,u) -> (a^2 s, delta_a u).
class HeatKernelTable {
public:
    static const HeatKernelTable& instance();

    double eval_h1(double r, double t) const;
    double eval(double s, const GroupElement& u) const;
    double h1_origin() const { return h1_00_; }

private:
    HeatKernelTable();
    double r_max_, t_max_, hr_, ht_;
    int nr_, nt_;
    std::vector<double> grid_;  // (nr+3) x (nt+3), padded for bicubic
    double h1_00_;
    double at(int ir, int it) const { return grid_[static_cast<std::size_t>(ir) * (nt_ + 3) + it]; }
};

struct BoundFit {
    int N = 0;            // decay exponent in the rho factor (when used)
    double C_fit = 0.0;   // smallest constant making the bound hold on the sample
    double A_fit = 0.0;   // Gaussian rate
    double delta = 1.0;   // smoothness exponent (when used)
};

/// Fits (C, A) minimizing C subject to
///   H_s(u) <= C s^{-Q/2} exp(-|u|^2/(A s))
/// over the sample: grid search on A, direct max for C at each A.
BoundFit fit_gaussian_bound(const HeatQuadrature& hq,
                            const std::vector<std::pair<double, GroupElement>>& sample);

struct SemigroupApplyOptions {
    double c_R = 1.2;            // truncation radius multiplier
    double trunc_eps = 1e-9;     // kept mass target for the truncation radius
    double gauss_rate = 4.0;     // A in the truncation estimate
    int radial_nodes = 8;        // GL nodes per radial panel
    int angular_nodes = 16;
    int t_panel_nodes = 8;
    bool use_table = false;      // table lookups instead of direct quadrature
    double trunc_mass_tol = 1e-4;
};

/// Pointwise (e^{s Delta} f)(u) = int H_s(w) f(u w^{-1}) dw by polar-product
/// quadrature over the truncated region |w| <= c_R sqrt(A s ln(1/eps)).
/// Independent of the grid propagation path; used as its oracle. Throws when
/// the truncation-mass estimate exceeds trunc_mass_tol. n = 1 only.
double heat_apply_pointwise(double s, const ScalarField& f, const GroupElement& u,
                            const HeatQuadrature& hq = {},
                            const SemigroupApplyOptions& opts = {});

}  // namespace hg
