#include "lwf/special.hpp"

#include <cmath>
#include <string>

namespace lwf::special {

namespace {

constexpr cplx kI{0.0, 1.0};

// (α+1)_n / n!, the prefactor shared by the Laguerre series and S_n^α.
double rising_ratio(double alpha, int n) {
  double r = 1.0;
  for (int j = 1; j <= n; ++j) r *= (alpha + j) / j;
  return r;
}

}  // namespace

void validate(const WaveletOrder& order) {
  if (order.n < 0) throw domain_error("wavelet order: n must be non-negative, got " + std::to_string(order.n));
  if (!(order.alpha > -1.0))
    throw domain_error("wavelet order: alpha must exceed -1, got " + std::to_string(order.alpha));
}

double pochhammer(double a, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= a + j;
  return r;
}

double gamma_value(double x) {
  if (x <= 0.0 && std::floor(x) == x) throw domain_error("gamma: pole at non-positive integer " + std::to_string(x));
  return std::tgamma(x);
}

cplx principal_pow(cplx z, double e) {
  if (e == std::floor(e) && std::abs(e) <= 64.0) {
    const int k = static_cast<int>(std::abs(e));
    cplx r = 1.0;
    cplx base = z;
    for (int bits = k; bits > 0; bits >>= 1) {
      if (bits & 1) r *= base;
      base *= base;
    }
    return e < 0.0 ? 1.0 / r : r;
  }
  return std::pow(z, e);
}

double laguerre_polynomial(const WaveletOrder& order, double x) {
  validate(order);
  return laguerre_value(order.n, order.alpha, x);
}

double laguerre_polynomial_series(const WaveletOrder& order, double x) {
  validate(order);
  const int n = order.n;
  double term = 1.0;  // (−n)_k / (α+1)_k · x^k / k!
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) / (order.alpha + 1.0 + k) * x / (k + 1.0);
    sum += term;
  }
  return rising_ratio(order.alpha, n) * sum;
}

double laguerre_function(const WaveletOrder& order, double x) {
  validate(order);
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (order.alpha > 0.0) return 0.0;
    if (order.alpha == 0.0) return laguerre_value(order.n, 0.0, 0.0);
    throw domain_error("laguerre_function: x^(alpha/2) is infinite at x = 0 for alpha < 0");
  }
  return std::exp(-0.5 * x + 0.5 * order.alpha * std::log(x)) * laguerre_value(order.n, order.alpha, x);
}

CircularJacobiRecurrence CircularJacobiRecurrence::make(double alpha, int n_max) {
  if (!(alpha > -1.0)) throw domain_error("circular Jacobi: alpha must exceed -1");
  CircularJacobiRecurrence r;
  r.alpha = alpha;
  r.kappa.resize(static_cast<std::size_t>(n_max) + 1);
  r.value_at_zero.resize(static_cast<std::size_t>(n_max) + 1);
  double kappa = 1.0;
  double at_zero = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    r.kappa[n] = kappa;
    r.value_at_zero[n] = at_zero;
    kappa *= (0.5 * alpha + 1.0 + n) / (n + 1.0);
    at_zero *= (0.5 * alpha + n) / (n + 1.0);
  }
  return r;
}

std::vector<cplx> circular_jacobi_all(double alpha, int n_max, cplx z) {
  if (!(alpha > -1.0)) throw domain_error("circular Jacobi: alpha must exceed -1");
  std::vector<cplx> g(static_cast<std::size_t>(n_max) + 1);
  g[0] = 1.0;
  if (alpha == 0.0) {
    // g_n^0(z) = z^n; the recurrence divides by g_n(0) = 0 here.
    for (int n = 1; n <= n_max; ++n) g[n] = g[n - 1] * z;
    return g;
  }
  if (n_max == 0) return g;
  const auto rec = CircularJacobiRecurrence::make(alpha, n_max);
  const auto& kap = rec.kappa;
  const auto& g0 = rec.value_at_zero;
  g[1] = 0.5 * alpha + (0.5 * alpha + 1.0) * z;
  for (int n = 1; n < n_max; ++n) {
    const double middle = (kap[n] * kap[n] - g0[n] * g0[n]) / kap[n - 1];
    g[n + 1] = ((kap[n] * g0[n + 1] + kap[n + 1] * g0[n] * z) * g[n] - middle * g0[n + 1] * z * g[n - 1]) /
               (kap[n] * g0[n]);
  }
  return g;
}

cplx circular_jacobi(const WaveletOrder& order, cplx z) {
  validate(order);
  return circular_jacobi_all(order.alpha, order.n, z).back();
}

std::vector<double> circular_jacobi_coefficients(const WaveletOrder& order) {
  validate(order);
  const int n = order.n;
  const double h = 0.5 * order.alpha;
  // a[j] = (α/2)_j / j!,  b[k] = (α/2+1)_k / k!
  std::vector<double> a(n + 1), b(n + 1);
  a[0] = b[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    a[j] = a[j - 1] * (h + j - 1) / j;
    b[j] = b[j - 1] * (h + j) / j;
  }
  std::vector<double> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[n - k] * b[k];
  return c;
}

cplx circular_jacobi_series(const WaveletOrder& order, cplx z) {
  const auto c = circular_jacobi_coefficients(order);
  cplx sum = 0.0;
  cplx power = 1.0;
  for (double ck : c) {
    sum += ck * power;
    power *= z;
  }
  return sum;
}

cplx s_eval(const WaveletOrder& order, double t) {
  validate(order);
  const int n = order.n;
  const double h = 0.5 * order.alpha;
  const cplx base = 1.0 / (0.5 - kI * t);  // Re(base) > 0 for every real t
  double coeff = 1.0;                       // (−n)_k (α/2+1)_k / (k! (α+1)_k)
  cplx sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    sum += coeff * principal_pow(base, k + h + 1.0);
    coeff *= (k - n) * (h + 1.0 + k) / ((k + 1.0) * (order.alpha + 1.0 + k));
  }
  return gamma_value(h + 1.0) * rising_ratio(order.alpha, n) * sum;
}

cplx s_eval_via_disc(const WaveletOrder& order, double t) {
  validate(order);
  const cplx denom = 2.0 * t + kI;
  const cplx z = (2.0 * t - kI) / denom;
  const cplx one_minus_z = 2.0 * kI / denom;  // equals 1 − z, without the cancellation near z = 1
  const double h = 0.5 * order.alpha;
  return gamma_value(h + 1.0) * principal_pow(one_minus_z, h + 1.0) * circular_jacobi(order, z);
}

}  // namespace lwf::special
