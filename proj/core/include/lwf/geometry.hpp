#pragma once

// Upper half-plane U and unit disc D: Cayley maps, the pseudohyperbolic metric, hyperbolic
// lattices {a^j(bk+i)}, separation and finite-radius lower Beurling density.

#include <optional>
#include <vector>

#include "lwf/errors.hpp"
#include "lwf/special.hpp"

namespace lwf::geometry {

enum class Chart { half_plane, disc };

struct HyperbolicLattice {
  double a = 2.0;
  double b = 1.0;
  int j_min = 0, j_max = -1;
  int k_min = 0, k_max = -1;

  /// Throws lwf::domain_error unless a > 1 and b > 0.
  void validate() const;
  bool empty() const { return j_max < j_min || k_max < k_min; }
  std::size_t size() const;
  /// 2π / (b log a).
  double theoretical_density() const;
};

/// Points with their chart. `footprint`, when present, records that the points are exactly the
/// lattice's generated set; lower_density uses it to verify ball coverage.
/// Repeated points are allowed (they make the separation constant 0).
struct PointSequence {
  std::vector<cplx> points;
  Chart chart = Chart::half_plane;
  std::optional<HyperbolicLattice> footprint;

  /// Validates chart membership (Im > 0, or |w| < 1); throws lwf::domain_error otherwise.
  static PointSequence make(std::vector<cplx> points, Chart chart);
  /// True if two points lie within 1e−12 of each other.
  bool has_duplicates() const;
  PointSequence to_disc() const;
  PointSequence to_half_plane() const;
};

/// w = (z−i)/(z+i). Throws lwf::domain_error for Im z ≤ 0.
cplx cayley_to_disc(cplx z);
/// z = i(1+w)/(1−w). Throws lwf::domain_error for |w| ≥ 1.
cplx cayley_to_halfplane(cplx w);

/// ϱ(z, ζ) = |(z−ζ)/(1−conj(ζ)z)| on D.
double pseudohyperbolic_distance(cplx z, cplx zeta);
/// The same metric in the U chart, |(z−ζ)/(z−conj(ζ))|; equals the disc value of the Cayley images.
double pseudohyperbolic_distance_halfplane(cplx z, cplx zeta);

/// inf over pairs of ϱ, evaluated in the sequence's own chart (Möbius invariance makes the charts
/// agree; the half-plane formula avoids cancellation for points near ∂D).
/// Throws lwf::degenerate_input_error for fewer than two points.
double separation_constant(const PointSequence& seq);

/// Points a^j(bk+i), j-major then k; the result carries the lattice as footprint.
PointSequence generate_lattice(const HyperbolicLattice& lat);

/// Closed-form separation of an untruncated lattice row pair: min(b/√(b²+4), (a−1)/(a+1)).
double lattice_separation_bound(double a, double b);

/// The pseudohyperbolic r-ball around z ∈ U is the Euclidean disc with this centre and radius.
struct EuclideanDisc {
  cplx centre;
  double radius;
};
EuclideanDisc pseudohyperbolic_ball(cplx z, double r);

/// Smallest lattice footprint that contains every lattice point in the r-balls around the grid points.
HyperbolicLattice covering_footprint(double a, double b, double r, const std::vector<cplx>& grid_half_plane);

/// min over grid points w of Σ_{ϱ(z_j,w)<r} (1−ϱ(z_j,w)) / log(1/(1−r)). The grid is given in the
/// disc chart. If the sequence carries a lattice footprint, each ball is checked to be fully
/// populated and lwf::coverage_error names the first grid point that is not.
double lower_density(const PointSequence& seq, double r, const std::vector<cplx>& eval_grid_disc);

/// Disc images of a^{j}(bk+i) for the given row j and k in [k_lo, k_hi]: the default evaluation grid.
std::vector<cplx> lattice_row_grid(double a, double b, int j, int k_lo, int k_hi);

struct LatticeDensityReport {
  double estimate = 0.0;
  double theoretical = 0.0;
  HyperbolicLattice footprint;
  double extension_change = 0.0;  // max |Δ Beurling sum| after growing every range by one
};

/// lower_density of Γ(a, b) at radius r on the grid of row 0, k ∈ [−2, 2], over the footprint
/// computed by covering_footprint; the footprint is then grown by one in every direction and the
/// change in every grid point's sum is recorded (and must stay below 1e−6).
LatticeDensityReport lattice_lower_density(double a, double b, double r);

struct DensityThresholds {
  double disc_threshold = 0.0;     // n + α/2
  double lattice_threshold = 0.0;  // 4π/(2n+α), +∞ when 2n+α ≤ 0
};
DensityThresholds density_thresholds(const special::WaveletOrder& order);

/// Weighted-Bergman exponent α' = 2(n + α/2) + 1 paired with the wavelet (n, α).
double bergman_dictionary_alpha(const special::WaveletOrder& order);
/// Sampling threshold α'/2 − 1/2 for A_{α'}.
double sampling_threshold(double alpha_prime);

}  // namespace lwf::geometry
