#pragma once

// Generalized Gauss–Laguerre rules for the weight x^β e^{−x} on (0, ∞), plus the
// drivers used for every half-line and 2-D integral in the library.

#include <functional>
#include <vector>

#include "lwf/errors.hpp"

namespace lwf::quad {

/// Eigen-decomposition of a symmetric tridiagonal matrix.
struct TridiagonalEigen {
  std::vector<double> values;        // ascending
  std::vector<double> first_components;  // first row of the orthonormal eigenvectors, paired with values
};

/// Implicit-shift QL iteration on the symmetric tridiagonal matrix with diagonal `diag` and
/// sub-diagonal `offdiag` (offdiag.size() == diag.size() − 1). Iterates until every off-diagonal
/// element is below 1e−14 relative to its diagonal neighbours. Throws lwf::contract_error on
/// mismatched sizes and lwf::convergence_error if 60 sweeps per eigenvalue do not converge.
TridiagonalEigen symmetric_tridiagonal_eigen(std::vector<double> diag, std::vector<double> offdiag,
                                             bool want_first_components = true);

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, positive
  std::vector<double> weights;  // paired with nodes; may underflow to 0 far in the tail
  double weight_exponent = 0.0;  // β
  int order = 0;
};

/// m-point rule for x^β e^{−x}. Nodes are eigenvalues of the Jacobi matrix
/// (diag 2k+1+β, off-diag √(k(k+β))), polished by Newton steps on L_m^β. Weights use
/// w_i = Γ(m+β+1) x_i / (m! (m+β)² L_{m−1}^β(x_i)²), evaluated in log space.
QuadratureRule gauss_laguerre_rule(int m, double beta);

/// Σ w_i g(x_i) for a pre-factored integrand g = f / (x^β e^{−x}); the one convention of this API.
/// Zero weights are skipped so g is never evaluated where its contribution has underflowed.
cplx integrate_halfline(const QuadratureRule& rule, const std::function<cplx(double)>& g);

/// ∫₀^∞ t^c e^{−p t} P(t) dt for Re p > 0 and P analytic in the right half-plane, by rotating the
/// contour onto the ray arg t = −arg p:
///   p^{−β−1} Σ w_i (x_i/p)^{c−β} P(x_i/p),  β = rule.weight_exponent.
/// Exact (to rounding) when c − β is a non-negative integer and P is a polynomial of degree
/// ≤ 2m − 1 − (c − β). Throws lwf::domain_error for Re p ≤ 0.
cplx integrate_exponential_decay(const QuadratureRule& rule, double c, cplx p,
                                 const std::function<cplx(cplx)>& poly);

/// ∬ f(x, s) dx ds over [x_lo, x_hi] × [s_lo, s_hi]: trapezoid with nx nodes in x and ns nodes in
/// u = log s (integrand f·s). Rows are evaluated in parallel and summed in index order.
cplx integrate_strip_2d(const std::function<cplx(double, double)>& f, double x_lo, double x_hi, double s_lo,
                        double s_hi, int nx, int ns);

}  // namespace lwf::quad
