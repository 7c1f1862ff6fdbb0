#include "lwf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lwf/parallel.hpp"

namespace lwf::quad {

namespace {

// L_m^β(x) and L_{m−1}^β(x), both divided by a common factor e^{log_scale} so that neither
// overflows for large m and x.
struct ScaledLaguerre {
  double lm = 0.0;
  double lm1 = 0.0;
  double log_scale = 0.0;
};

ScaledLaguerre scaled_laguerre(int m, double beta, double x) {
  constexpr double kBig = 1e150;
  double prev = 1.0;
  double cur = 1.0 + beta - x;
  double log_scale = 0.0;
  for (int k = 1; k < m; ++k) {
    const double next = ((2.0 * k + 1.0 + beta - x) * cur - (k + beta) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      prev /= kBig;
      log_scale += std::log(kBig);
    }
  }
  return {cur, prev, log_scale};
}

}  // namespace

TridiagonalEigen symmetric_tridiagonal_eigen(std::vector<double> d, std::vector<double> e, bool want_first_components) {
  const std::size_t n = d.size();
  if (n == 0) return {};
  if (e.size() + 1 != n) throw contract_error("tridiagonal eigen: off-diagonal must have size n-1");
  e.push_back(0.0);
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  constexpr double kTol = 1e-14;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kTol * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw convergence_error("tridiagonal eigen: QL iteration did not converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (want_first_components) {
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.reserve(n);
  for (auto i : idx) out.values.push_back(d[i]);
  if (want_first_components) {
    out.first_components.reserve(n);
    for (auto i : idx) out.first_components.push_back(z[i]);
  }
  return out;
}

QuadratureRule gauss_laguerre_rule(int m, double beta) {
  if (m < 1) throw domain_error("gauss_laguerre_rule: order must be at least 1, got " + std::to_string(m));
  if (!(beta > -1.0)) throw domain_error("gauss_laguerre_rule: beta must exceed -1, got " + std::to_string(beta));

  std::vector<double> diag(m), off(m - 1);
  for (int k = 0; k < m; ++k) diag[k] = 2.0 * k + 1.0 + beta;
  for (int k = 1; k < m; ++k) off[k - 1] = std::sqrt(k * (k + beta));
  auto eig = symmetric_tridiagonal_eigen(std::move(diag), std::move(off), false);

  QuadratureRule rule;
  rule.weight_exponent = beta;
  rule.order = m;
  rule.nodes = std::move(eig.values);
  rule.weights.resize(m);
  if (m == 1) {
    rule.nodes[0] = 1.0 + beta;
    rule.weights[0] = std::tgamma(beta + 1.0);
    return rule;
  }

  const double log_norm = std::lgamma(m + beta + 1.0) - std::lgamma(m + 1.0) - 2.0 * std::log(m + beta);
  for (int i = 0; i < m; ++i) {
    double x = rule.nodes[i];
    // Newton on L_m: x L_m' = m L_m − (m+β) L_{m−1}, a ratio free of the common scale.
    for (int it = 0; it < 3; ++it) {
      const auto v = scaled_laguerre(m, beta, x);
      const double deriv = (m * v.lm - (m + beta) * v.lm1) / x;
      if (deriv == 0.0) break;
      const double step = v.lm / deriv;
      x -= step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    rule.nodes[i] = x;
    const auto v = scaled_laguerre(m, beta, x);
    const double log_w = log_norm + std::log(x) - 2.0 * (std::log(std::abs(v.lm1)) + v.log_scale);
    rule.weights[i] = std::exp(log_w);
  }
  return rule;
}

cplx integrate_halfline(const QuadratureRule& rule, const std::function<cplx(double)>& g) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    sum += rule.weights[i] * g(rule.nodes[i]);
  }
  return sum;
}

cplx integrate_exponential_decay(const QuadratureRule& rule, double c, cplx p, const std::function<cplx(cplx)>& poly) {
  if (!(p.real() > 0.0)) throw domain_error("integrate_exponential_decay: requires Re p > 0");
  const double beta = rule.weight_exponent;
  const double shift = c - beta;
  const bool integral_shift = shift == std::floor(shift) && shift >= 0.0;
  const cplx inv_p = 1.0 / p;
  cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    const cplx t = rule.nodes[i] * inv_p;
    cplx extra = 1.0;
    if (integral_shift) {
      for (int k = 0; k < static_cast<int>(shift); ++k) extra *= t;
    } else if (shift != 0.0) {
      extra = std::pow(t, shift);
    }
    sum += rule.weights[i] * extra * poly(t);
  }
  return std::pow(p, -beta - 1.0) * sum;
}

cplx integrate_strip_2d(const std::function<cplx(double, double)>& f, double x_lo, double x_hi, double s_lo,
                        double s_hi, int nx, int ns) {
  if (nx < 2 || ns < 2) throw configuration_error("integrate_strip_2d: need at least 2 nodes per axis");
  if (!(s_lo > 0.0) || !(s_hi > s_lo) || !(x_hi > x_lo))
    throw domain_error("integrate_strip_2d: need x_lo < x_hi and 0 < s_lo < s_hi");
  const double hx = (x_hi - x_lo) / (nx - 1);
  const double u_lo = std::log(s_lo);
  const double hu = (std::log(s_hi) - u_lo) / (ns - 1);
  std::vector<cplx> rows(ns);
  parallel_for(static_cast<std::size_t>(ns), [&](std::size_t j) {
    const double s = (static_cast<int>(j) == ns - 1) ? s_hi : std::exp(u_lo + hu * static_cast<double>(j));
    cplx row = 0.0;
    for (int i = 0; i < nx; ++i) {
      const double x = (i == nx - 1) ? x_hi : x_lo + hx * i;
      const double wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
      row += wx * f(x, s);
    }
    const double wu = (j == 0 || static_cast<int>(j) == ns - 1) ? 0.5 : 1.0;
    rows[j] = wu * s * row;
  });
  cplx total = 0.0;
  for (const auto& r : rows) total += r;
  return total * hx * hu;
}

}  // namespace lwf::quad
