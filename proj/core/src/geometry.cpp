#include "lwf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lwf/parallel.hpp"

namespace lwf::geometry {

namespace {

constexpr cplx kI{0.0, 1.0};

std::string point_text(cplx z) { return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")"; }

struct Span {
  int lo, hi;
};

// Rows j whose height a^j lies strictly inside (y_lo, y_hi).
Span rows_inside(double a, double y_lo, double y_hi) {
  const double la = std::log(a);
  int lo = static_cast<int>(std::floor(std::log(y_lo) / la));
  while (std::pow(a, lo) <= y_lo) ++lo;
  int hi = static_cast<int>(std::ceil(std::log(y_hi) / la));
  while (std::pow(a, hi) >= y_hi) --hi;
  return {lo, hi};
}

double beurling_sum(const std::vector<cplx>& pts, Chart chart, cplx z_half, cplx w_disc, double r) {
  double sum = 0.0;
  for (const auto& p : pts) {
    const double rho = chart == Chart::half_plane ? pseudohyperbolic_distance_halfplane(p, z_half)
                                                  : pseudohyperbolic_distance(p, w_disc);
    if (rho < r) sum += 1.0 - rho;
  }
  return sum;
}

// Throws coverage_error unless every lattice point in the r-ball around z lies in the footprint.
void check_coverage(const HyperbolicLattice& lat, cplx z, cplx w, double r) {
  const auto ball = pseudohyperbolic_ball(z, r);
  const double y_lo = ball.centre.imag() - ball.radius;
  const double y_hi = ball.centre.imag() + ball.radius;
  if (lat.empty()) throw coverage_error("lower_density: empty footprint cannot cover " + point_text(w), w);
  if (!(y_lo > std::pow(lat.a, lat.j_min - 1)) || !(y_hi < std::pow(lat.a, lat.j_max + 1)))
    throw coverage_error("lower_density: ball around " + point_text(w) + " leaves the generated rows", w);
  const double x_lo = ball.centre.real() - ball.radius;
  const double x_hi = ball.centre.real() + ball.radius;
  const auto rows = rows_inside(lat.a, y_lo, y_hi);
  for (int j = rows.lo; j <= rows.hi; ++j) {
    const double step = std::pow(lat.a, j) * lat.b;
    if (!(x_lo > step * (lat.k_min - 1)) || !(x_hi < step * (lat.k_max + 1)))
      throw coverage_error("lower_density: ball around " + point_text(w) + " leaves the generated columns of row " +
                               std::to_string(j),
                           w);
  }
}

}  // namespace

void HyperbolicLattice::validate() const {
  if (!(a > 1.0)) throw domain_error("lattice: a must exceed 1, got " + std::to_string(a));
  if (!(b > 0.0)) throw domain_error("lattice: b must be positive, got " + std::to_string(b));
}

std::size_t HyperbolicLattice::size() const {
  if (empty()) return 0;
  return static_cast<std::size_t>(j_max - j_min + 1) * static_cast<std::size_t>(k_max - k_min + 1);
}

double HyperbolicLattice::theoretical_density() const {
  validate();
  return 2.0 * std::numbers::pi / (b * std::log(a));
}

PointSequence PointSequence::make(std::vector<cplx> points, Chart chart) {
  for (const auto& p : points) {
    if (chart == Chart::half_plane && !(p.imag() > 0.0))
      throw domain_error("point sequence: half-plane point " + point_text(p) + " has Im <= 0");
    if (chart == Chart::disc && !(std::abs(p) < 1.0))
      throw domain_error("point sequence: disc point " + point_text(p) + " has modulus >= 1");
  }
  PointSequence s;
  s.points = std::move(points);
  s.chart = chart;
  return s;
}

bool PointSequence::has_duplicates() const {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i] - points[j]) <= 1e-12) return true;
  return false;
}

PointSequence PointSequence::to_disc() const {
  if (chart == Chart::disc) return *this;
  PointSequence out = *this;
  out.chart = Chart::disc;
  for (auto& p : out.points) p = cayley_to_disc(p);
  return out;
}

PointSequence PointSequence::to_half_plane() const {
  if (chart == Chart::half_plane) return *this;
  PointSequence out = *this;
  out.chart = Chart::half_plane;
  for (auto& p : out.points) p = cayley_to_halfplane(p);
  return out;
}

cplx cayley_to_disc(cplx z) {
  if (!(z.imag() > 0.0)) throw domain_error("cayley_to_disc: requires Im z > 0, got " + point_text(z));
  return (z - kI) / (z + kI);
}

cplx cayley_to_halfplane(cplx w) {
  if (!(std::abs(w) < 1.0)) throw domain_error("cayley_to_halfplane: requires |w| < 1, got " + point_text(w));
  return kI * (1.0 + w) / (1.0 - w);
}

double pseudohyperbolic_distance(cplx z, cplx zeta) {
  if (!(std::abs(z) < 1.0) || !(std::abs(zeta) < 1.0))
    throw domain_error("pseudohyperbolic_distance: points must lie in the unit disc");
  return std::abs((z - zeta) / (1.0 - std::conj(zeta) * z));
}

double pseudohyperbolic_distance_halfplane(cplx z, cplx zeta) {
  if (!(z.imag() > 0.0) || !(zeta.imag() > 0.0))
    throw domain_error("pseudohyperbolic_distance_halfplane: points must lie in the upper half-plane");
  return std::abs(z - zeta) / std::abs(z - std::conj(zeta));
}

double separation_constant(const PointSequence& seq) {
  const std::size_t n = seq.points.size();
  if (n < 2) throw degenerate_input_error("separation_constant: need at least two points");
  std::vector<double> row_min(n, std::numeric_limits<double>::infinity());
  parallel_for(n, [&](std::size_t i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = seq.chart == Chart::half_plane ? pseudohyperbolic_distance_halfplane(seq.points[i], seq.points[j])
                                                      : pseudohyperbolic_distance(seq.points[i], seq.points[j]);
      best = std::min(best, d);
    }
    row_min[i] = best;
  });
  return *std::min_element(row_min.begin(), row_min.end());
}

PointSequence generate_lattice(const HyperbolicLattice& lat) {
  lat.validate();
  PointSequence s;
  s.chart = Chart::half_plane;
  s.footprint = lat;
  s.points.reserve(lat.size());
  for (int j = lat.j_min; j <= lat.j_max; ++j) {
    const double aj = std::pow(lat.a, j);
    for (int k = lat.k_min; k <= lat.k_max; ++k) s.points.emplace_back(aj * lat.b * k, aj);
  }
  return s;
}

double lattice_separation_bound(double a, double b) {
  HyperbolicLattice{a, b}.validate();
  return std::min(b / std::sqrt(b * b + 4.0), (a - 1.0) / (a + 1.0));
}

EuclideanDisc pseudohyperbolic_ball(cplx z, double r) {
  if (!(z.imag() > 0.0)) throw domain_error("pseudohyperbolic_ball: requires Im z > 0");
  if (!(r > 0.0 && r < 1.0)) throw domain_error("pseudohyperbolic_ball: radius must lie in (0, 1)");
  const double q = 1.0 - r * r;
  return {cplx(z.real(), z.imag() * (1.0 + r * r) / q), z.imag() * 2.0 * r / q};
}

HyperbolicLattice covering_footprint(double a, double b, double r, const std::vector<cplx>& grid_half_plane) {
  HyperbolicLattice lat{a, b};
  lat.validate();
  if (grid_half_plane.empty()) throw degenerate_input_error("covering_footprint: empty grid");
  lat.j_min = lat.k_min = std::numeric_limits<int>::max();
  lat.j_max = lat.k_max = std::numeric_limits<int>::min();
  for (const auto& z : grid_half_plane) {
    const auto ball = pseudohyperbolic_ball(z, r);
    const auto rows = rows_inside(a, ball.centre.imag() - ball.radius, ball.centre.imag() + ball.radius);
    lat.j_min = std::min(lat.j_min, rows.lo);
    lat.j_max = std::max(lat.j_max, rows.hi);
    for (int j = rows.lo; j <= rows.hi; ++j) {
      const double step = std::pow(a, j) * b;
      lat.k_min = std::min(lat.k_min, static_cast<int>(std::floor((ball.centre.real() - ball.radius) / step)));
      lat.k_max = std::max(lat.k_max, static_cast<int>(std::ceil((ball.centre.real() + ball.radius) / step)));
    }
  }
  return lat;
}

double lower_density(const PointSequence& seq, double r, const std::vector<cplx>& eval_grid_disc) {
  if (!(r > 0.0 && r < 1.0)) throw domain_error("lower_density: radius must lie in (0, 1)");
  if (seq.points.empty()) return 0.0;
  if (eval_grid_disc.empty()) throw degenerate_input_error("lower_density: empty evaluation grid");
  const double norm = std::log(1.0 / (1.0 - r));
  std::vector<double> sums(eval_grid_disc.size());
  for (const auto& w : eval_grid_disc) {
    const cplx z = cayley_to_halfplane(w);
    if (seq.footprint) check_coverage(*seq.footprint, z, w, r);
  }
  parallel_for(eval_grid_disc.size(), [&](std::size_t g) {
    const cplx w = eval_grid_disc[g];
    sums[g] = beurling_sum(seq.points, seq.chart, cayley_to_halfplane(w), w, r);
  });
  return *std::min_element(sums.begin(), sums.end()) / norm;
}

std::vector<cplx> lattice_row_grid(double a, double b, int j, int k_lo, int k_hi) {
  HyperbolicLattice{a, b}.validate();
  std::vector<cplx> grid;
  const double aj = std::pow(a, j);
  for (int k = k_lo; k <= k_hi; ++k) grid.push_back(cayley_to_disc(cplx(aj * b * k, aj)));
  return grid;
}

LatticeDensityReport lattice_lower_density(double a, double b, double r) {
  const auto grid = lattice_row_grid(a, b, 0, -2, 2);
  std::vector<cplx> grid_u;
  for (const auto& w : grid) grid_u.push_back(cayley_to_halfplane(w));

  LatticeDensityReport rep;
  rep.footprint = covering_footprint(a, b, r, grid_u);
  rep.theoretical = rep.footprint.theoretical_density();
  const auto seq = generate_lattice(rep.footprint);
  rep.estimate = lower_density(seq, r, grid);

  auto grown = rep.footprint;
  --grown.j_min, ++grown.j_max, --grown.k_min, ++grown.k_max;
  const auto bigger = generate_lattice(grown);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double s0 = beurling_sum(seq.points, seq.chart, grid_u[g], grid[g], r);
    const double s1 = beurling_sum(bigger.points, bigger.chart, grid_u[g], grid[g], r);
    rep.extension_change = std::max(rep.extension_change, std::abs(s1 - s0));
  }
  if (rep.extension_change >= 1e-6)
    throw coverage_error("lattice_lower_density: footprint growth changed a Beurling sum by " +
                             std::to_string(rep.extension_change),
                         grid.front());
  return rep;
}

DensityThresholds density_thresholds(const special::WaveletOrder& order) {
  special::validate(order);
  DensityThresholds t;
  t.disc_threshold = order.n + 0.5 * order.alpha;
  const double denom = 2.0 * order.n + order.alpha;
  t.lattice_threshold = denom > 0.0 ? 4.0 * std::numbers::pi / denom : std::numeric_limits<double>::infinity();
  return t;
}

double bergman_dictionary_alpha(const special::WaveletOrder& order) { return 2.0 * (order.n + 0.5 * order.alpha) + 1.0; }

double sampling_threshold(double alpha_prime) { return 0.5 * alpha_prime - 0.5; }

}  // namespace lwf::geometry
