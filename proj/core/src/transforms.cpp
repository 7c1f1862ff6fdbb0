#include "lwf/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lwf::transforms {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

void require_upper(cplx z, const char* who) {
  if (!(z.imag() > 0.0)) throw domain_error(std::string(who) + ": requires Im z > 0");
}

// Budget check for integrate_exponential_decay: exactness holds when c − ρ is a non-negative
// integer and the polynomial degree plus that shift is at most 2q − 1.
void check_budget(const quad::QuadratureRule& rule, double c, int degree, const char* who) {
  const double shift = c - rule.weight_exponent;
  if (shift != std::floor(shift) || shift < 0.0) return;
  if (degree + static_cast<int>(shift) > 2 * rule.order - 1)
    throw configuration_error(std::string(who) + ": quadrature order " + std::to_string(rule.order) +
                              " cannot integrate polynomial degree " + std::to_string(degree + static_cast<int>(shift)) +
                              " exactly; need order >= " + std::to_string((degree + static_cast<int>(shift) + 2) / 2));
}

// i^{ν} on the principal branch.
cplx i_power(double nu) { return std::polar(1.0, 0.5 * kPi * nu); }

}  // namespace

SpectralSignal SpectralSignal::basis_element(double basis_alpha, int m) {
  SpectralSignal f;
  f.basis_alpha = basis_alpha;
  f.coefficients.assign(static_cast<std::size_t>(m) + 1, 0.0);
  f.coefficients.back() = 1.0;
  return f;
}

double SpectralSignal::norm_sq() const {
  double sum = 0.0;
  for (const auto& c : coefficients) sum += std::norm(c);
  return sum;
}

cplx SpectralSignal::spectrum(double t) const {
  if (t < 0.0 || coefficients.empty()) return 0.0;
  const int m_count = static_cast<int>(coefficients.size());
  std::vector<double> lag(m_count);
  special::laguerre_sequence<double>(basis_alpha, t, lag);
  double envelope = 0.0;
  if (t > 0.0) {
    envelope = std::exp(-0.5 * t + 0.5 * basis_alpha * std::log(t));
  } else if (basis_alpha == 0.0) {
    envelope = 1.0;
  } else if (basis_alpha < 0.0) {
    throw domain_error("SpectralSignal::spectrum: unbounded at t = 0 for basis_alpha < 0");
  }
  cplx sum = 0.0;
  for (int m = 0; m < m_count; ++m) sum += coefficients[m] * basis_normalizer(basis_alpha, m) * lag[m];
  return std::polar(1.0, -translation * t) * envelope * sum;
}

double basis_normalizer(double beta, int m) {
  return std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(m + beta + 1.0)));
}

cplx paul_wavelet(double alpha, double t) {
  if (!(alpha > -1.0)) throw domain_error("paul_wavelet: alpha must exceed -1");
  return special::principal_pow(1.0 / cplx(t, 1.0), alpha + 1.0);
}

cplx paul_spectral_constant(double alpha) {
  return std::sqrt(2.0 * kPi) * i_power(alpha + 1.0) / special::gamma_value(alpha + 1.0);
}

cplx spectral_atom(const WaveletOrder& order, const TimeScalePoint& p, double t) {
  if (!(t > 0.0)) return 0.0;
  return std::polar(1.0, -p.x * t) * std::sqrt(p.s) * 2.0 * special::laguerre_function(order, 2.0 * p.s * t);
}

quad::QuadratureRule pairing_rule(const WaveletOrder& order, double basis_alpha, int basis_size) {
  special::validate(order);
  const int degree = basis_size - 1 + order.n;
  return quad::gauss_laguerre_rule(degree / 2 + 3, 0.5 * (order.alpha + basis_alpha));
}

std::vector<cplx> atom_basis_pairings(const WaveletOrder& order, double basis_alpha, int basis_size,
                                      const TimeScalePoint& p, const quad::QuadratureRule& rule) {
  special::validate(order);
  if (!(p.s > 0.0)) throw domain_error("atom_basis_pairings: scale must be positive");
  if (basis_size < 1) return {};
  const double c = 0.5 * (order.alpha + basis_alpha);
  check_budget(rule, c, basis_size - 1 + order.n, "atom_basis_pairings");

  const cplx decay = cplx(0.5 + p.s, -p.x);
  if (!(decay.real() > 0.0)) throw domain_error("atom_basis_pairings: non-decaying integrand");
  const double beta = rule.weight_exponent;
  const double shift = c - beta;
  const bool integral_shift = shift == std::floor(shift) && shift >= 0.0;
  const cplx inv_p = 1.0 / decay;

  std::vector<cplx> acc(basis_size, 0.0);
  std::vector<cplx> lag(basis_size);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    if (rule.weights[i] == 0.0) continue;
    const cplx t = rule.nodes[i] * inv_p;
    cplx extra = 1.0;
    if (integral_shift) {
      for (int k = 0; k < static_cast<int>(shift); ++k) extra *= t;
    } else {
      extra = std::pow(t, shift);
    }
    const cplx common = rule.weights[i] * extra * special::laguerre_value<cplx>(order.n, order.alpha, 2.0 * p.s * t);
    special::laguerre_sequence<cplx>(basis_alpha, t, lag);
    for (int m = 0; m < basis_size; ++m) acc[m] += common * lag[m];
  }
  const cplx prefactor = 2.0 * std::sqrt(p.s) * std::pow(2.0 * p.s, 0.5 * order.alpha) * std::pow(decay, -beta - 1.0);
  for (int m = 0; m < basis_size; ++m) acc[m] *= prefactor * basis_normalizer(basis_alpha, m);
  return acc;
}

cplx wavelet_coefficient(const SpectralSignal& f, const WaveletOrder& order, const TimeScalePoint& p,
                         const quad::QuadratureRule& rule) {
  if (f.coefficients.empty()) return 0.0;
  const TimeScalePoint shifted{p.x - f.translation, p.s};
  const auto v = atom_basis_pairings(order, f.basis_alpha, static_cast<int>(f.coefficients.size()), shifted, rule);
  cplx sum = 0.0;
  for (std::size_t m = 0; m < v.size(); ++m) sum += f.coefficients[m] * v[m];
  return sum;
}

quad::QuadratureRule bergman_rule(double gamma, double basis_alpha, int basis_size) {
  return quad::gauss_laguerre_rule(std::max(basis_size, 1) / 2 + 3, gamma + 0.5 * basis_alpha);
}

cplx bergman_transform(const SpectralSignal& f, double gamma, cplx z, const quad::QuadratureRule& rule) {
  require_upper(z, "bergman_transform");
  if (f.coefficients.empty()) return 0.0;
  const int m_count = static_cast<int>(f.coefficients.size());
  const double c = gamma + 0.5 * f.basis_alpha;
  if (!(c > -1.0)) throw divergence_error("bergman_transform: integrand not integrable at 0");
  check_budget(rule, c, m_count - 1, "bergman_transform");
  const cplx decay = 0.5 - kI * z + kI * f.translation;
  std::vector<cplx> lag(m_count);
  std::vector<double> norm(m_count);
  for (int m = 0; m < m_count; ++m) norm[m] = basis_normalizer(f.basis_alpha, m);
  return quad::integrate_exponential_decay(rule, c, decay, [&](cplx t) {
    special::laguerre_sequence<cplx>(f.basis_alpha, t, lag);
    cplx sum = 0.0;
    for (int m = 0; m < m_count; ++m) sum += f.coefficients[m] * norm[m] * lag[m];
    return sum;
  });
}

cplx psi_basis(int n, double alpha, cplx z) {
  require_upper(z, "psi_basis");
  if (n < 0) throw domain_error("psi_basis: n must be non-negative");
  const cplx plus = kI * z + 0.5;
  const cplx minus = kI * z - 0.5;
  return special::principal_pow(plus / minus, n) * special::principal_pow(minus, -alpha - 1.0);
}

ProportionalityReport proposition41_ratio(const WaveletOrder& order, const std::vector<cplx>& z_samples) {
  special::validate(order);
  const double two_alpha = 2.0 * order.alpha;
  SpectralSignal f = SpectralSignal::basis_element(two_alpha, order.n);
  f.coefficients.back() = 1.0 / basis_normalizer(two_alpha, order.n);  // 𝓕f = l_n^{2α}
  const auto rule = bergman_rule(order.alpha, two_alpha, order.n + 1);

  std::vector<cplx> ratios;
  ProportionalityReport report;
  for (const auto& z : z_samples) {
    const cplx psi = psi_basis(order.n, two_alpha, z);
    if (std::abs(psi) < 1e-300) {
      ++report.skipped;
      continue;
    }
    ratios.push_back(bergman_transform(f, order.alpha, z, rule) / psi);
  }
  if (ratios.empty()) throw degenerate_input_error("proposition41_ratio: no usable samples");
  cplx mean = 0.0;
  for (const auto& r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (const auto& r : ratios) spread = std::max(spread, std::abs(r - mean) / std::abs(mean));
  report.ratio_mean = mean;
  report.ratio_spread = spread;
  return report;
}

cplx t_alpha_map(const std::function<cplx(cplx)>& g, double alpha, cplx w, Pullback pullback) {
  if (!(std::abs(w) < 1.0)) throw domain_error("t_alpha_map: requires |w| < 1");
  const cplx z = pullback == Pullback::negated ? 0.5 * kI * (w + 1.0) / (w - 1.0) : 0.5 * kI * (1.0 + w) / (1.0 - w);
  return g(z) * special::principal_pow(1.0 / (1.0 - w), alpha + 1.0);
}

ReconstructionCoefficients repcomb_coefficients(const WaveletOrder& order) {
  special::validate(order);
  const int n = order.n;
  const double h = 0.5 * order.alpha;
  ReconstructionCoefficients out;
  out.big_c = special::gamma_value(h + 1.0) * special::pochhammer(1.0 + order.alpha, n) / std::tgamma(n + 1.0);
  double coeff = 1.0;  // (−n)_k (α/2+1)_k / (k! (α+1)_k)
  for (int k = 0; k <= n; ++k) {
    out.a_k.push_back(coeff * special::principal_pow(cplx(0.0, 2.0), k + h + 1.0));
    coeff *= (k - n) * (h + 1.0 + k) / ((k + 1.0) * (order.alpha + 1.0 + k));
  }
  return out;
}

cplx wavelet_coefficient_via_formula(const SpectralSignal& f, const WaveletOrder& order, const TimeScalePoint& p,
                                     const quad::QuadratureRule& rule) {
  if (f.coefficients.empty()) return 0.0;
  if (!(p.s > 0.0)) throw domain_error("wavelet_coefficient_via_formula: scale must be positive");
  const auto rc = repcomb_coefficients(order);
  const int m_count = static_cast<int>(f.coefficients.size());
  const cplx z(p.x, p.s);
  cplx sum = 0.0;
  for (int k = 0; k <= order.n; ++k) {
    const double beta_k = k + 0.5 * order.alpha;
    auto ber_rule = bergman_rule(beta_k, f.basis_alpha, m_count);
    if (rule.order > ber_rule.order) ber_rule = quad::gauss_laguerre_rule(rule.order, ber_rule.weight_exponent);
    const cplx factor = std::conj(rc.big_c * rc.a_k[k]) * i_power(beta_k + 1.0) / special::gamma_value(beta_k + 1.0) *
                        std::pow(p.s, beta_k + 0.5);
    sum += factor * bergman_transform(f, beta_k, z, ber_rule);
  }
  return sum;
}

double admissibility_constant(const WaveletOrder& order, const quad::QuadratureRule& rule) {
  special::validate(order);
  if (!(order.alpha > 0.0))
    throw divergence_error("admissibility_constant: the integral diverges at 0 for alpha <= 0");
  const auto v = quad::integrate_exponential_decay(rule, order.alpha - 1.0, 1.0, [&](cplx u) {
    const cplx l = special::laguerre_value<cplx>(order.n, order.alpha, u);
    return l * l;
  });
  return 2.0 * v.real();
}

IsometryReport isometry_residual(const SpectralSignal& f, const WaveletOrder& order, const StripTruncation& strip,
                                 const StripResolution& res) {
  special::validate(order);
  IsometryReport out;
  const double norm_sq = f.norm_sq();
  const double k_const =
      admissibility_constant(order, quad::gauss_laguerre_rule(order.n + 1, order.alpha - 1.0));
  out.rhs = 4.0 * kPi * k_const * norm_sq;
  if (norm_sq == 0.0) return out;
  const auto rule = pairing_rule(order, f.basis_alpha, static_cast<int>(f.coefficients.size()));
  out.lhs = quad::integrate_strip_2d(
                [&](double x, double s) {
                  return cplx(std::norm(wavelet_coefficient(f, order, {x, s}, rule)) / (s * s), 0.0);
                },
                strip.x_lo, strip.x_hi, strip.s_lo, strip.s_hi, res.nx, res.ns)
                .real();
  out.rel_err = std::abs(out.lhs - out.rhs) / out.rhs;
  return out;
}

std::vector<double> finite_difference_weights(int k, const std::vector<double>& x) {
  // Fornberg (1988), derivatives up to k at 0 on nodes x.
  const int n = static_cast<int>(x.size());
  if (k < 0 || k >= n) throw configuration_error("finite_difference_weights: need more nodes than the derivative order");
  std::vector<std::vector<double>> c(n, std::vector<double>(k + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, k);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int m = mn; m >= 1; --m) c[i][m] = c1 * (m * c[i - 1][m - 1] - c5 * c[i - 1][m]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int m = mn; m >= 1; --m) c[j][m] = (c4 * c[j][m] - m * c[j][m - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][k];
  return w;
}

DerivativeReport derivative_relation_residual(const SpectralSignal& f, double alpha, cplx z, int k, double h) {
  require_upper(z, "derivative_relation_residual");
  if (k < 0) throw configuration_error("derivative_relation_residual: k must be non-negative");
  if (!(h > 0.0)) throw configuration_error("derivative_relation_residual: step must be positive");
  DerivativeReport out;
  if (k == 0) return out;
  const int m_count = static_cast<int>(f.coefficients.size());
  const double gamma0 = 0.5 * alpha;
  const auto base_rule = bergman_rule(gamma0, f.basis_alpha, m_count);
  const auto top_rule = bergman_rule(gamma0 + k, f.basis_alpha, m_count);
  const cplx target = i_power(k) * bergman_transform(f, gamma0 + k, z, top_rule);
  if (std::abs(target) == 0.0) throw degenerate_input_error("derivative_relation_residual: target vanishes");

  const int r = (k + 3) / 2;
  std::vector<double> offsets;
  for (int j = -r; j <= r; ++j) offsets.push_back(j);
  const auto w = finite_difference_weights(k, offsets);
  double weight_mass = 0.0;
  for (double wi : w) weight_mass += std::abs(wi);

  double max_f = 0.0;
  auto difference = [&](double step) {
    cplx d = 0.0;
    for (std::size_t j = 0; j < offsets.size(); ++j) {
      const cplx v = bergman_transform(f, gamma0, z + offsets[j] * step, base_rule);
      max_f = std::max(max_f, std::abs(v));
      d += w[j] * v;
    }
    return d / std::pow(step, k);
  };
  const cplx d_h = difference(h);
  const cplx d_half = difference(0.5 * h);
  const double scale = std::abs(target);
  out.residual = std::abs(d_h - target) / scale;
  out.richardson = std::abs(d_h - d_half) / 15.0 / scale;
  out.rounding = 2.2e-16 * max_f * weight_mass / std::pow(h, k) / scale;
  if (out.richardson > 1e-2)
    throw configuration_error("derivative_relation_residual: step too large (Richardson estimate " +
                              std::to_string(out.richardson) + ")");
  if (out.rounding > 1e-2)
    throw configuration_error("derivative_relation_residual: step too small (rounding estimate " +
                              std::to_string(out.rounding) + ")");
  return out;
}

}  // namespace lwf::transforms
