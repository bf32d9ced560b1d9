#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace hg {

struct QuadNode {
    double x;
    double w;
};

/// Gauss-Legendre nodes/weights on [-1,1], cached per order.
const std::vector<QuadNode>& gauss_legendre(int order);

/// Gauss-Legendre rule mapped to [a,b].
std::vector<QuadNode> gauss_legendre_ab(int order, double a, double b);

/// Composite Gauss rule for integrals over [a,b] in log coordinates:
/// panels of equal length in log x, `per_panel` GL nodes each. Weights are
/// for integration in x (the Jacobian x is folded in). Requires 0 < a < b.
std::vector<QuadNode> log_gauss_rule(double a, double b, int per_panel, double panel_log_len = 0.7);

struct AdaptiveResult {
    double value = 0.0;
    double error = 0.0;        // error estimate
    int nodes_used = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Splits the worst interval until
/// the summed error estimate meets tol_rel * |integral| + tol_abs or the node
/// budget is exhausted. For oscillatory integrands pass `initial_panels` so
/// every seed panel resolves the oscillation; dyadic refinement of a single
/// panel can alias against the period and silently corrupt the estimate.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tol_rel = 1e-12, double tol_abs = 0.0,
                                  int max_nodes = 4096, int initial_panels = 1);

/// Nodes on the unit sphere {|z|^4 + t^2 = 1} of H^1, parametrized by
/// psi in (-pi/2, pi/2), phi in [0, 2pi): omega = (sqrt(cos psi) e^{i phi}, sin psi).
/// Lebesgue measure in the polar map w = delta_r(omega) is r^3 dr dpsi dphi,
/// so the returned weights are the (psi, phi) products with total 2 pi^2.
struct SphereNode {
    double psi;
    double phi;
    double zx, zy, t;  // coordinates of omega
    double w;
};
std::vector<SphereNode> koranyi_sphere_rule(int n_psi, int n_phi);

}  // namespace hg
