#pragma once

// Laguerre polynomials and functions, circular Jacobi polynomials g_n^α and the
// rational Jacobi functions S_n^α (inverse Fourier images of Laguerre functions).

#include <complex>
#include <span>
#include <vector>

#include "lwf/errors.hpp"

namespace lwf::special {

/// Index pair (n, α) of the analyzing wavelet S_n^α.
struct WaveletOrder {
  int n = 0;
  double alpha = 0.0;
};

/// Throws lwf::domain_error unless n ≥ 0 and α > −1.
void validate(const WaveletOrder& order);

/// (a)_k = a(a+1)···(a+k−1); the empty product is 1.
double pochhammer(double a, int k);

/// Γ(x); throws lwf::domain_error at the poles 0, −1, −2, ...
double gamma_value(double x);

/// Fills out[k] = L_k^α(x) for k = 0..out.size()-1 by the degree recurrence
///   (k+1) L_{k+1} = (2k+1+α−x) L_k − (k+α) L_{k−1}.
/// Works for real or complex x; no validation.
template <class T>
void laguerre_sequence(double alpha, T x, std::span<T> out) {
  if (out.empty()) return;
  out[0] = T(1);
  if (out.size() == 1) return;
  out[1] = T(1.0 + alpha) - x;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kd = static_cast<double>(k);
    out[k + 1] = ((T(2.0 * kd + 1.0 + alpha) - x) * out[k] - T(kd + alpha) * out[k - 1]) / T(kd + 1.0);
  }
}

/// L_n^α(x) by the same recurrence, without storing intermediate degrees.
template <class T>
T laguerre_value(int n, double alpha, T x) {
  if (n == 0) return T(1);
  T prev = T(1);
  T cur = T(1.0 + alpha) - x;
  for (int k = 1; k < n; ++k) {
    const double kd = k;
    T next = ((T(2.0 * kd + 1.0 + alpha) - x) * cur - T(kd + alpha) * prev) / T(kd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// z^e on the principal branch; integer exponents with |e| ≤ 64 use repeated multiplication so that
/// exact inputs give exact outputs.
cplx principal_pow(cplx z, double e);

/// L_n^α(x), generalized Laguerre polynomial.
double laguerre_polynomial(const WaveletOrder& order, double x);

/// Direct summation of the hypergeometric power series of L_n^α (test oracle).
double laguerre_polynomial_series(const WaveletOrder& order, double x);

/// l_n^α(x) = 1_{[0,∞)}(x) e^{−x/2} x^{α/2} L_n^α(x).
/// At x = 0 with α < 0 the factor x^{α/2} is infinite and a domain error is raised.
double laguerre_function(const WaveletOrder& order, double x);

/// Leading coefficients and values at the origin of g_0^α, ..., g_{n_max}^α.
struct CircularJacobiRecurrence {
  double alpha = 0.0;
  std::vector<double> kappa;          // κ_n = (α/2+1)_n / n!
  std::vector<double> value_at_zero;  // g_n^α(0) = (α/2)_n / n!

  static CircularJacobiRecurrence make(double alpha, int n_max);
};

/// g_n^α(z) from the three-term recurrence on the unit circle, seeded with g_0 = 1 and
/// g_1 = α/2 + (α/2+1) z:
///   κ_n g_n(0) g_{n+1}(z) + c_n g_{n+1}(0) z g_{n−1}(z) = [κ_n g_{n+1}(0) + κ_{n+1} g_n(0) z] g_n(z),
///   c_n = (κ_n² − g_n(0)²) / κ_{n−1}.
cplx circular_jacobi(const WaveletOrder& order, cplx z);

/// All of g_0^α(z), ..., g_{n_max}^α(z) from one recurrence pass.
std::vector<cplx> circular_jacobi_all(double alpha, int n_max, cplx z);

/// g_n^α(z) = Σ_k (α/2)_{n−k}/(n−k)! · (α/2+1)_k/k! · z^k, the terminating hypergeometric series
/// (α/2)_n/n! F(−n, α/2+1; 1−n−α/2; z) with the ratio (α/2)_n/(1−n−α/2)_k cancelled.
cplx circular_jacobi_series(const WaveletOrder& order, cplx z);

/// Coefficients of g_n^α in the monomial basis, lowest degree first.
std::vector<double> circular_jacobi_coefficients(const WaveletOrder& order);

/// S_n^α(t) by direct summation of its finite series in (1/2 − it)^{−1}.
cplx s_eval(const WaveletOrder& order, double t);

/// S_n^α(t) = Γ(α/2+1) (1−z)^{α/2+1} g_n^α(z) with z = (2t−i)/(2t+i).
cplx s_eval_via_disc(const WaveletOrder& order, double t);

}  // namespace lwf::special
