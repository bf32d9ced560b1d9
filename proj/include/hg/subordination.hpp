#pragma once

#include <memory>
#include <vector>

#include "hg/group.hpp"
#include "hg/heat_kernel.hpp"
#include "hg/potential.hpp"
#include "hg/test_function.hpp"

namespace hg {

/// Time quadrature for L^{-alpha/2} = (1/Gamma(alpha/2)) int e^{-sL} s^{alpha/2-1} ds.
/// s_min/s_max of 0 mean "auto": 1e-4 d^2 and 1e4 max(d^2, rho(u)^2).
struct SubordinationSpec {
    double alpha = 1.0;
    double s_min = 0.0;
    double s_max = 0.0;
    int nodes = 200;  // total Gauss nodes target across the log window

    explicit SubordinationSpec(double a = 1.0) : alpha(a) {}
};

/// Quadrature side of the identity
///   int_0^inf e^{-d^2/(A s)} s^{(alpha-Q)/2 - 1} ds = Gamma((Q-alpha)/2) (A/d^2)^{(Q-alpha)/2},
/// the computation behind the free-kernel power bound. The power tail beyond
/// 1e6 d^2/A (where the exponential is 1 within 1e-6) is integrated in closed
/// form; everything else is composite log-Gauss.
double gamma_identity_quadrature(double alpha, double d, double A, int Q, int nodes_per_panel = 10);

double gamma_identity_closed_form(double alpha, double d, double A, int Q);

/// Free kernel K*_alpha(u) = (1/Gamma(alpha/2)) int H_s(u) s^{alpha/2-1} ds,
/// computed in the scale-invariant substitution s = |u|^2 sigma, so that
/// K*(delta_a u) = a^{alpha-Q} K*(u) holds exactly by construction.
/// Throws at the identity (kernel is singular there).
double riesz_kernel_free(double alpha, const GroupElement& u, int nodes_per_panel = 8);

/// Kernel table for L = -Delta + c (c >= 0 constant), n = 1:
///   K_alpha(w) = |w|^{alpha-Q} G(psi(w), c |w|^2),
///   G(psi, m)  = (1/Gamma(alpha/2)) int_0^inf e^{-m sigma} sigma^{(alpha-Q)/2-1}
///                H_1(delta_{1/sqrt sigma} omega(psi)) d sigma.
/// One table per alpha serves every constant c through m = c |w|^2.
class RieszKernelTable {
public:
    explicit RieszKernelTable(double alpha);

    double alpha() const { return alpha_; }

    /// G(psi, m); psi in [-pi/2, pi/2], even in psi.
    double g(double psi, double m) const;

    /// Sphere integral of G(., m) against the polar measure d psi d phi.
    double g_sphere_integral(double m) const;

    /// K_alpha(w) for the constant potential c (c = 0 gives the free kernel).
    double kernel(const GroupElement& w, double c) const;

    /// K_alpha(u, v) = kernel(v^{-1} u).
    double kernel(const GroupElement& u, const GroupElement& v, double c) const;

private:
    double alpha_;
    int npsi_, nm_;
    double m_min_, m_max_;
    std::vector<double> grid_;       // (npsi) x (nm), m-grid index 0 is m = 0
    std::vector<double> sphere_;     // per m-column sphere integral
    double at(int ip, int im) const { return grid_[static_cast<std::size_t>(ip) * nm_ + im]; }
};

/// Shared tables keyed by alpha (values used by the experiment sweeps).
const RieszKernelTable& riesz_table(double alpha);

struct RieszApplyOptions {
    int rho_per_panel = 6;
    double rho_panel_len = 0.5;   // log length of radial panels
    int n_psi = 12;
    int n_phi = 12;
    double rho_floor_factor = 2e-3;  // singular-head radius relative to scale
};

/// (I_alpha f)(u) for L = -Delta + c by u-centered Koranyi-polar quadrature of
/// the kernel table: radial panels are split, per sphere ray, at the radii
/// where f has edges (indicator boundaries, power caps and cutoffs), and the
/// kernel singularity at w = 0 is integrated in closed form over a small head.
/// n = 1; f must be compactly supported or rapidly decaying (no LogNorm).
double riesz_apply_kernel_route(const RieszKernelTable& table, double c, const TestFunction& f,
                                const GroupElement& u, const RieszApplyOptions& opts = {});

}  // namespace hg
