#pragma once

// Wavelet coefficients of Hardy-space signals against the atoms T_x D_s S_n^α(·/2), Paul wavelets,
// the Bergman transform, the Ψ_n^α basis and the identities tying them together.
//
// Conventions: (𝓕f)(t) = (2π)^{−1/2} ∫ e^{−itx} f(x) dx, T_x f(t) = f(t − x), D_s f(t) = s^{−1/2} f(t/s).
// The analyzing function is normalized so that 𝓕S_n^α = l_n^α; the atom at (x, s) therefore has
// spectrum e^{−ixt} s^{1/2} 2 l_n^α(2st). W f(x, s) = ⟨f, T_x D_s S_n^α(·/2)⟩, computed spectrally.

#include <functional>
#include <optional>
#include <vector>

#include "lwf/errors.hpp"
#include "lwf/quadrature.hpp"
#include "lwf/special.hpp"

namespace lwf::transforms {

using special::WaveletOrder;

/// A Hardy-space signal held by its spectrum
///   (𝓕f)(t) = e^{−i x0 t} Σ_m c_m ẽ_m(t),  ẽ_m = √(m!/Γ(m+β+1)) l_m^β,
/// so that ‖f‖² = Σ|c_m|². `translation` (x0) realizes T_{x0} f without re-expanding.
struct SpectralSignal {
  double basis_alpha = 0.0;
  std::vector<cplx> coefficients;
  double translation = 0.0;

  /// The single basis element ẽ_m.
  static SpectralSignal basis_element(double basis_alpha, int m);
  double norm_sq() const;
  /// (𝓕f)(t); zero for t < 0.
  cplx spectrum(double t) const;
};

struct TimeScalePoint {
  double x = 0.0;
  double s = 1.0;
};

struct ReconstructionCoefficients {
  double big_c = 0.0;
  std::vector<cplx> a_k;
};

/// √(m!/Γ(m+β+1)), the factor making ẽ_m unit-norm.
double basis_normalizer(double beta, int m);

/// ψ_α(t) = (1/(t+i))^{α+1}.
cplx paul_wavelet(double alpha, double t);

/// κ_α with 𝓕ψ_α(u) = conj(κ_α) u^α e^{−u} for u > 0, i.e. κ_α = √(2π) i^{α+1}/Γ(α+1).
cplx paul_spectral_constant(double alpha);

/// e^{−ixt} s^{1/2} 2 l_n^α(2st) for t > 0, zero otherwise.
cplx spectral_atom(const WaveletOrder& order, const TimeScalePoint& p, double t);

/// The Gauss–Laguerre rule that pairs basis β with wavelet (n, α) exactly for basis degrees < basis_size:
/// weight exponent (α+β)/2, order ⌈(basis_size + n)/2⌉ + 2.
quad::QuadratureRule pairing_rule(const WaveletOrder& order, double basis_alpha, int basis_size);

/// v_m = ⟨ẽ_m, T_x D_s S_n^α(·/2)⟩ for m = 0..basis_size−1, all from one pass over the rule nodes:
///   v_m = 2√s (2s)^{α/2} N_m ∫ t^{(α+β)/2} e^{−(1/2+s−ix)t} L_m^β(t) L_n^α(2st) dt.
/// Throws lwf::configuration_error when the rule cannot integrate the product polynomial exactly.
std::vector<cplx> atom_basis_pairings(const WaveletOrder& order, double basis_alpha, int basis_size,
                                      const TimeScalePoint& p, const quad::QuadratureRule& rule);

/// W f(x, s) = ∫₀^∞ (𝓕f)(t) conj(spectral_atom(t)) dt.
cplx wavelet_coefficient(const SpectralSignal& f, const WaveletOrder& order, const TimeScalePoint& p,
                         const quad::QuadratureRule& rule);

/// Ber^γ f(z) = ∫₀^∞ t^γ e^{izt} (𝓕f)(t) dt. Throws lwf::domain_error for Im z ≤ 0.
/// Related to the Paul wavelet transform by W_{ψ_γ} f(x, s) = κ_γ s^{γ+1/2} Ber^γ f(x+is).
cplx bergman_transform(const SpectralSignal& f, double gamma, cplx z, const quad::QuadratureRule& rule);

/// Rule exact for Ber^γ on signals of basis β with at most basis_size coefficients.
quad::QuadratureRule bergman_rule(double gamma, double basis_alpha, int basis_size);

/// Ψ_n^α(z) = ((iz+1/2)/(iz−1/2))^n (iz−1/2)^{−α−1}. Throws lwf::domain_error for Im z ≤ 0.
cplx psi_basis(int n, double alpha, cplx z);

struct ProportionalityReport {
  cplx ratio_mean;
  double ratio_spread = 0.0;  // max |ratio − mean| / |mean|
  int skipped = 0;            // samples with |Ψ| < 1e−300
};

/// Ber^α(S_n^{2α})(z) / Ψ_n^{2α}(z) over the samples. For integer 2α the ratio is the constant
/// (−1)^{2α+1} Γ(n+2α+1)/n!.
ProportionalityReport proposition41_ratio(const WaveletOrder& order, const std::vector<cplx>& z_samples);

enum class Pullback {
  negated,    // z = i/2 (w+1)/(w−1) = −i/2 (1+w)/(1−w); sends w = 0 to −i/2
  corrected,  // z = i/2 (1+w)/(1−w), the inverse of w = (2z−i)/(2z+i)
};

/// g(z(w)) (1/(1−w))^{α+1}. Throws lwf::domain_error for |w| ≥ 1.
cplx t_alpha_map(const std::function<cplx(cplx)>& g, double alpha, cplx w, Pullback pullback = Pullback::corrected);

/// C and a_k with S_n^α(t/2) = C Σ_k a_k ψ_{k+α/2}(t).
ReconstructionCoefficients repcomb_coefficients(const WaveletOrder& order);

/// W f(x, s) assembled from Bergman transforms of orders k + α/2:
///   Σ_k conj(C a_k) i^{β_k+1}/Γ(β_k+1) s^{β_k+1/2} Ber^{β_k} f(x+is),  β_k = k + α/2.
/// Each Ber is integrated with its own exact rule; `rule` only fixes the minimum order.
cplx wavelet_coefficient_via_formula(const SpectralSignal& f, const WaveletOrder& order, const TimeScalePoint& p,
                                     const quad::QuadratureRule& rule);

/// K = 2∫₀^∞ e^{−u} u^{α−1} L_n^α(u)² du. Under the unitary transform ∫|𝓕ψ(u)|²/u du equals 2K for
/// ψ = S_n^α(·/2). Throws lwf::divergence_error for α ≤ 0. Exact with a rule of exponent α−1 and
/// order ≥ n+1; other rules are accepted and integrate approximately.
double admissibility_constant(const WaveletOrder& order, const quad::QuadratureRule& rule);

struct StripTruncation {
  double x_lo = -40.0, x_hi = 40.0;
  double s_lo = 1e-3, s_hi = 1e3;
};

struct StripResolution {
  int nx = 4001;
  int ns = 2001;
};

struct IsometryReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
};

/// lhs = ∬ s^{−2} |W f(x,s)|² dx ds over the strip; rhs = 4π K ‖f‖².
/// The 4π is the Plancherel factor 2π times the 2 that separates ∫|𝓕(S(·/2))|²/u from K.
IsometryReport isometry_residual(const SpectralSignal& f, const WaveletOrder& order, const StripTruncation& strip,
                                 const StripResolution& res);

/// Weights of the k-th derivative on the stencil offsets (Fornberg's algorithm).
std::vector<double> finite_difference_weights(int k, const std::vector<double>& offsets);

struct DerivativeReport {
  double residual = 0.0;       // relative difference at step h
  double richardson = 0.0;     // estimated truncation error of the step-h/2 difference, relative
  double rounding = 0.0;       // estimated rounding error at step h, relative
};

/// Relative difference between the k-th real-direction finite difference of Ber^{α/2} f at z (step h,
/// 4th-order central stencil) and i^k Ber^{k+α/2} f(z). k = 0 gives 0. Throws lwf::configuration_error
/// if the Richardson (h vs h/2) or rounding estimate exceeds 1e−2 of the target, and
/// lwf::domain_error for Im z ≤ 0.
DerivativeReport derivative_relation_residual(const SpectralSignal& f, double alpha, cplx z, int k, double h);

}  // namespace lwf::transforms
