#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lwf/special.hpp"
#include "lwf/transforms.hpp"

using namespace lwf::transforms;
using lwf::cplx;
using lwf::special::laguerre_function;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// W f(x, s) = ∫ (𝓕f)(t) conj(atom(t)) dt by a fine trapezoid in u = √t (smooth at t = 0 for half-integer
// exponents).
cplx coefficient_oracle(const SpectralSignal& f, const WaveletOrder& o, TimeScalePoint p, double U = 11.0,
                        int n = 200000) {
  const double h = U / n;
  cplx sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double u = i * h, t = u * u;
    sum += (i == n ? 0.5 : 1.0) * f.spectrum(t) * std::conj(spectral_atom(o, p, t)) * (2.0 * u);
  }
  return sum * h;
}

SpectralSignal random_signal(std::mt19937_64& rng, double beta, int m) {
  std::normal_distribution<double> g;
  SpectralSignal f;
  f.basis_alpha = beta;
  for (int i = 0; i < m; ++i) f.coefficients.emplace_back(g(rng), g(rng));
  return f;
}

}  // namespace

TEST_CASE("Paul wavelet examples") {
  CHECK(std::abs(paul_wavelet(0.0, 0.0) - cplx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(paul_wavelet(1.0, 1.0) - cplx(0.0, -0.5)) < 1e-15);
  for (double t : {-3.0, 0.0, 0.4, 10.0})
    CHECK(std::norm(paul_wavelet(0.0, t)) == doctest::Approx(1.0 / (1.0 + t * t)));
  CHECK_THROWS_AS(paul_wavelet(-1.0, 0.0), lwf::domain_error);
}

TEST_CASE("spectral atom examples") {
  CHECK(std::abs(spectral_atom({0, 0.0}, {0.0, 1.0}, 1.0) - 2.0 * std::exp(-1.0)) < 1e-15);
  CHECK(spectral_atom({2, 1.0}, {0.3, 2.0}, -1.0) == cplx(0.0));
  CHECK(std::abs(spectral_atom({0, 0.0}, {kPi, 1.0}, 1.0) + 2.0 * std::exp(-1.0)) < 1e-15);
}

TEST_CASE("Fourier transform of the translated, dilated Paul wavelet") {
  // conj 𝓕(T_x D_s ψ_α)(t) = κ_α s^{α+1/2} t^α e^{i(x+is)t} for t > 0 and 0 for t < 0.
  const double x = 0.3, s = 0.7;
  for (double alpha : {0.0, 1.0, 2.0}) {
    // ψ_0 decays like 1/v, so its truncation error is 1/(|τ| L); the others are fine on [−200, 200].
    const double L = alpha == 0.0 ? 1e5 : 200.0;
    const double h = 0.05;
    const long n = static_cast<long>(2.0 * L / h);
    for (double t : {-2.0, -1.0, 0.8, 1.5, 3.0}) {
      const double tau = t * s;
      cplx sum = 0.0;
      for (long i = 0; i <= n; ++i) {
        const double v = -L + i * h;
        sum += (i == 0 || i == n ? 0.5 : 1.0) * std::exp(cplx(0.0, -tau * v)) * paul_wavelet(alpha, v);
      }
      const cplx numeric = std::sqrt(s) * std::exp(cplx(0.0, -t * x)) * sum * h / std::sqrt(2.0 * kPi);
      const cplx expected = t > 0.0 ? paul_spectral_constant(alpha) * std::pow(s, alpha + 0.5) * std::pow(t, alpha) *
                                          std::exp(kI * cplx(x, s) * t)
                                    : cplx(0.0);
      CHECK(std::abs(std::conj(numeric) - expected) < 1e-4);
    }
  }
}

TEST_CASE("wavelet coefficient examples") {
  const WaveletOrder o{0, 2.0};
  SpectralSignal zero;
  zero.basis_alpha = 2.0;
  zero.coefficients.assign(4, 0.0);
  CHECK(std::abs(wavelet_coefficient(zero, o, {0.3, 1.0}, pairing_rule(o, 2.0, 4))) == 0.0);

  // f = ẽ_0: √(1/Γ(3)) · 2∫ l_0^2(t) l_0^2(2t) dt by a trapezoid oracle.
  const auto e0 = SpectralSignal::basis_element(2.0, 0);
  double trap = 0.0;
  const double h = 1e-4;
  for (int i = 1; i <= 800000; ++i) {
    const double t = i * h;
    trap += laguerre_function({0, 2.0}, t) * laguerre_function({0, 2.0}, 2.0 * t);
  }
  const double expected = std::sqrt(0.5) * 2.0 * trap * h;
  const cplx got = wavelet_coefficient(e0, o, {0.0, 1.0}, pairing_rule(o, 2.0, 1));
  CHECK(got.real() == doctest::Approx(expected).epsilon(1e-9));
  CHECK(std::abs(got.imag()) < 1e-15);

  // The atom's own projection onto a long basis recovers ‖atom‖² = 2Γ(n+α+1)/n! = 4.
  const int M = 80;
  const TimeScalePoint p{0.0, 1.0};
  const auto v = atom_basis_pairings(o, 2.0, M, p, pairing_rule(o, 2.0, M));
  SpectralSignal atom;
  atom.basis_alpha = 2.0;
  for (const cplx& c : v) atom.coefficients.push_back(std::conj(c));
  CHECK(wavelet_coefficient(atom, o, p, pairing_rule(o, 2.0, M)).real() == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("wavelet coefficient matches the trapezoid oracle") {
  std::mt19937_64 rng(3);
  for (const WaveletOrder o : {WaveletOrder{0, 2.0}, WaveletOrder{2, 1.5}, WaveletOrder{1, 0.5}}) {
    const auto f = random_signal(rng, 1.0, 5);
    for (TimeScalePoint p : {TimeScalePoint{0.0, 1.0}, TimeScalePoint{-1.3, 0.4}, TimeScalePoint{2.0, 3.0}}) {
      const cplx got = wavelet_coefficient(f, o, p, pairing_rule(o, 1.0, 5));
      const cplx want = coefficient_oracle(f, o, p);
      CHECK(std::abs(got - want) < 1e-6 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("pairings refuse an under-resolved rule") {
  const WaveletOrder o{3, 2.0};
  CHECK_THROWS_AS(atom_basis_pairings(o, 2.0, 20, {0.0, 1.0}, pairing_rule(o, 2.0, 4)), lwf::configuration_error);
}

TEST_CASE("wavelet coefficient is stable under a larger rule") {
  std::mt19937_64 rng(11);
  const WaveletOrder o{2, 2.0};
  const auto f = random_signal(rng, 2.0, 6);
  const auto base = pairing_rule(o, 2.0, 6);
  const auto big = lwf::quad::gauss_laguerre_rule(base.order + 20, base.weight_exponent);
  for (TimeScalePoint p : {TimeScalePoint{0.5, 0.3}, TimeScalePoint{-2.0, 4.0}}) {
    const cplx a = wavelet_coefficient(f, o, p, base), b = wavelet_coefficient(f, o, p, big);
    CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
  }
}

TEST_CASE("linearity and translation covariance") {
  std::mt19937_64 rng(5);
  const WaveletOrder o{1, 2.0};
  const auto f = random_signal(rng, 2.0, 4), g = random_signal(rng, 2.0, 4);
  const cplx a(0.7, -1.1), b(-0.2, 0.4);
  SpectralSignal h = f;
  for (int m = 0; m < 4; ++m) h.coefficients[m] = a * f.coefficients[m] + b * g.coefficients[m];
  const auto rule = pairing_rule(o, 2.0, 4);
  const TimeScalePoint p{0.4, 1.7};
  const cplx lin = a * wavelet_coefficient(f, o, p, rule) + b * wavelet_coefficient(g, o, p, rule);
  CHECK(std::abs(wavelet_coefficient(h, o, p, rule) - lin) < 1e-12 * std::abs(lin));

  const auto brule = bergman_rule(1.5, 2.0, 4);
  const cplx z(0.2, 0.9);
  const cplx blin = a * bergman_transform(f, 1.5, z, brule) + b * bergman_transform(g, 1.5, z, brule);
  CHECK(std::abs(bergman_transform(h, 1.5, z, brule) - blin) < 1e-12 * std::abs(blin));

  SpectralSignal shifted = f;
  shifted.translation = 1.25;
  const cplx at = wavelet_coefficient(f, o, p, rule);
  const cplx moved = wavelet_coefficient(shifted, o, {p.x + 1.25, p.s}, rule);
  CHECK(std::abs(at - moved) < 1e-12 * std::abs(at));
}

TEST_CASE("Bergman transform examples") {
  const auto f = SpectralSignal::basis_element(2.0, 0);
  const double scale = std::sqrt(2.0);  // 𝓕f = l_0^2 / √Γ(3)
  const auto rule = bergman_rule(1.0, 2.0, 1);
  CHECK(std::abs(scale * bergman_transform(f, 1.0, kI, rule) - 16.0 / 27.0) < 1e-14);
  CHECK(std::abs(scale * bergman_transform(f, 1.0, 2.0 * kI, rule) - 16.0 / 125.0) < 1e-14);
  SpectralSignal zero;
  zero.basis_alpha = 2.0;
  zero.coefficients = {0.0};
  CHECK(std::abs(bergman_transform(zero, 1.0, kI, rule)) == 0.0);
  CHECK_THROWS_AS(bergman_transform(f, 1.0, cplx(0.0, -1.0), rule), lwf::domain_error);
}

TEST_CASE("Psi basis examples") {
  CHECK(std::abs(psi_basis(0, 1.0, kI) - 4.0 / 9.0) < 1e-15);
  CHECK(std::abs(psi_basis(0, 0.0, kI) + 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(psi_basis(1, 0.0, kI) + 2.0 / 9.0) < 1e-15);
  CHECK_THROWS_AS(psi_basis(0, 1.0, cplx(1.0, 0.0)), lwf::domain_error);
}

TEST_CASE("Bergman image of S_n^{2a} is proportional to Psi_n^{2a}") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.2, 5.0);
  std::vector<cplx> zs{kI};
  for (int i = 0; i < 19; ++i) zs.emplace_back(ux(rng), uy(rng));

  const auto r = proposition41_ratio({0, 1.0}, zs);
  CHECK(std::abs(r.ratio_mean + 2.0) < 1e-12);
  CHECK(r.ratio_spread < 1e-12);

  for (int n = 0; n <= 5; ++n)
    for (double two_alpha : {1.0, 2.0, 3.0, 4.0}) {
      const auto rep = proposition41_ratio({n, 0.5 * two_alpha}, zs);
      CHECK(rep.ratio_spread <= 1e-6);
      const double modulus = std::tgamma(two_alpha + n + 1.0) / std::tgamma(n + 1.0);
      CHECK(std::abs(std::abs(rep.ratio_mean) - modulus) <= 1e-6 * modulus);
    }
}

TEST_CASE("T_alpha pullbacks") {
  CHECK(std::abs(t_alpha_map([](cplx) { return cplx(1.0); }, 0.0, 0.0, Pullback::negated) - 1.0) < 1e-15);
  // The negated pullback sends w = 0 to −i/2, outside the domain of Ψ.
  CHECK_THROWS_AS(t_alpha_map([](cplx z) { return psi_basis(0, 0.0, z); }, 0.0, 0.0, Pullback::negated),
                  lwf::domain_error);
  // The inverse of w = (2z−i)/(2z+i) gives T_0 Ψ_1^0 = c·w with |c| = 1.
  const auto psi = [](cplx z) { return psi_basis(1, 0.0, z); };
  const cplx c = t_alpha_map(psi, 0.0, 0.3, Pullback::corrected) / 0.3;
  CHECK(std::abs(std::abs(c) - 1.0) < 1e-14);
  for (cplx w : {cplx(0.5, 0.2), cplx(-0.1, -0.7), cplx(0.9, 0.0)})
    CHECK(std::abs(t_alpha_map(psi, 0.0, w, Pullback::corrected) / w - c) < 1e-13);
  CHECK_THROWS_AS(t_alpha_map(psi, 0.0, 1.0), lwf::domain_error);
}

TEST_CASE("reconstruction coefficients") {
  const auto r0 = repcomb_coefficients({0, 2.0});
  CHECK(r0.big_c == doctest::Approx(1.0));
  REQUIRE(r0.a_k.size() == 1);
  CHECK(std::abs(r0.a_k[0] + 4.0) < 1e-14);
  for (double t : {-4.0, -0.5, 0.0, 1.0, 7.0})
    CHECK(std::abs(-4.0 * paul_wavelet(1.0, t) - lwf::special::s_eval({0, 2.0}, 0.5 * t)) < 1e-13);

  const auto r1 = repcomb_coefficients({1, 2.0});
  REQUIRE(r1.a_k.size() == 2);
  CHECK(std::abs(r1.a_k[1] - cplx(0.0, 16.0 / 3.0)) < 1e-13);

  // S_n^α(t/2) = C Σ a_k ψ_{k+α/2}(t) on a grid.
  for (const WaveletOrder o : {WaveletOrder{3, 2.0}, WaveletOrder{2, 4.0}, WaveletOrder{2, 1.0}}) {
    const auto rc = repcomb_coefficients(o);
    for (double t : {-3.0, 0.2, 2.5}) {
      cplx sum = 0.0;
      for (std::size_t k = 0; k < rc.a_k.size(); ++k) sum += rc.a_k[k] * paul_wavelet(k + 0.5 * o.alpha, t);
      const cplx s = lwf::special::s_eval(o, 0.5 * t);
      CHECK(std::abs(rc.big_c * sum - s) < 1e-12 * std::abs(s));
    }
  }
}

TEST_CASE("wavelet coefficient from Bergman transforms") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> ux(-5.0, 5.0), us(0.2, 5.0);
  for (double alpha : {2.0, 4.0})
    for (int n = 0; n <= 3; ++n) {
      const WaveletOrder o{n, alpha};
      const auto f = random_signal(rng, alpha, 4);
      const auto rule = pairing_rule(o, alpha, 4);
      for (int i = 0; i < 5; ++i) {
        const TimeScalePoint p{ux(rng), us(rng)};
        const cplx direct = wavelet_coefficient(f, o, p, rule);
        const cplx formula = wavelet_coefficient_via_formula(f, o, p, rule);
        CHECK(std::abs(direct - formula) <= 1e-8 * std::abs(direct));
      }
    }
}

TEST_CASE("admissibility constant") {
  const auto exact = [](WaveletOrder o) {
    return admissibility_constant(o, lwf::quad::gauss_laguerre_rule(o.n + 1, o.alpha - 1.0));
  };
  CHECK(exact({0, 2.0}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(exact({0, 1.0}) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(exact({0, 4.0}) == doctest::Approx(12.0).epsilon(1e-14));
  const auto rule = lwf::quad::gauss_laguerre_rule(4, 0.0);
  CHECK_THROWS_AS(admissibility_constant({0, 0.0}, rule), lwf::divergence_error);
  CHECK_THROWS_AS(admissibility_constant({1, -0.5}, rule), lwf::divergence_error);
}

TEST_CASE("isometry on a zero signal") {
  SpectralSignal zero;
  zero.basis_alpha = 2.0;
  zero.coefficients = {0.0, 0.0};
  const auto r = isometry_residual(zero, {0, 2.0}, {}, {11, 11});
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs == 0.0);
  CHECK(r.rel_err == 0.0);
}

TEST_CASE("isometry converges as the strip grows") {
  const auto f = SpectralSignal::basis_element(2.0, 0);
  const auto narrow = isometry_residual(f, {0, 2.0}, {-10.0, 10.0, 1e-2, 1e2}, {801, 801});
  const auto wide = isometry_residual(f, {0, 2.0}, {-20.0, 20.0, 1e-4, 1e4}, {1601, 1601});
  CHECK(wide.rel_err < narrow.rel_err);
  CHECK(wide.rel_err < 1e-2);
  CHECK(wide.rhs == doctest::Approx(8.0 * kPi));
}

TEST_CASE("finite difference weights") {
  const auto w = finite_difference_weights(1, {-1.0, 0.0, 1.0});
  CHECK(w[0] == doctest::Approx(-0.5));
  CHECK(w[1] == doctest::Approx(0.0));
  CHECK(w[2] == doctest::Approx(0.5));
  const auto w2 = finite_difference_weights(2, {-2.0, -1.0, 0.0, 1.0, 2.0});
  CHECK(w2[2] == doctest::Approx(-2.5));
}

TEST_CASE("derivative relation between Bergman orders") {
  const auto f = SpectralSignal::basis_element(2.0, 0);
  CHECK(derivative_relation_residual(f, 1.0, kI, 0, 1e-3).residual == 0.0);
  CHECK(derivative_relation_residual(f, 1.0, kI, 1, 1e-3).residual <= 1e-5);
  CHECK(derivative_relation_residual(f, 1.0, kI, 2, 1e-2).residual <= 1e-4);
  CHECK(derivative_relation_residual(f, 1.0, cplx(0.4, 2.0), 3, 1e-2).residual <= 1e-4);
  CHECK_THROWS_AS(derivative_relation_residual(f, 1.0, kI, 1, 1.0), lwf::configuration_error);
  CHECK_THROWS_AS(derivative_relation_residual(f, 1.0, kI, 1, 1e-15), lwf::configuration_error);
}
