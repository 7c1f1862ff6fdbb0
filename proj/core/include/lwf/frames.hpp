#pragma once

// Frame operators of the wavelet system {T_x D_s S_n^α(·/2)} compressed to the span of the first M
// orthonormal Laguerre basis functions ẽ_m, their extreme eigenvalues, threshold sweeps and the
// Bergman-space sampling ratio.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lwf/errors.hpp"
#include "lwf/geometry.hpp"
#include "lwf/special.hpp"

namespace lwf::frames {

using special::WaveletOrder;

class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  /// Leading m×m block.
  HermitianMatrix leading(int m) const;
  /// max |S_ij − conj(S_ji)|.
  double hermitian_defect() const;
  double max_abs() const;

 private:
  int n_ = 0;
  std::vector<cplx> data_;
};

/// Accumulates S = Σ_g v_g v_g^H one atom at a time, in the order atoms are added.
class FrameMatrixBuilder {
 public:
  explicit FrameMatrixBuilder(int basis_size) : s_(basis_size) {}
  /// v[m] = ⟨ẽ_m, g⟩.
  void add_atom(const std::vector<cplx>& v);
  std::size_t atom_count() const { return atoms_; }
  const HermitianMatrix& matrix() const { return s_; }

 private:
  HermitianMatrix s_;
  std::size_t atoms_ = 0;
};

/// Lattice Γ(a, b) with every row complete in k and rows added outward from j = 0 until the row
/// contributions (and their geometric tail estimate) fall below `tolerance` in trace.
struct AutoLattice {
  double a = 2.0;
  double b = 1.0;
  double tolerance = 1e-8;
  int max_rows = 4000;
};

struct FrameAnalysisConfig {
  WaveletOrder order{0, 2.0};
  std::optional<geometry::HyperbolicLattice> lattice;  // fixed ranges
  std::optional<AutoLattice> auto_lattice;             // adaptive ranges
  std::optional<geometry::PointSequence> sequence;     // explicit atoms at z = x + is
  int basis_size = 8;
  double basis_alpha = 2.0;
  int quadrature_order = 0;  // 0 picks the exact pairing rule

  /// Throws lwf::domain_error / lwf::configuration_error with a readable message.
  void validate() const;
};

/// Truncation actually used. `full_row` marks a row summed over all k ∈ ℤ.
struct RowRange {
  int j = 0;
  int k_min = 0;
  int k_max = -1;
  bool full_row = false;
};

/// Σ_{k∈ℤ} v v^H over the atoms at (k·step, s), by Poisson summation in k:
///   (2π/step) Σ_ℓ ∫ h_m(t) h_{m'}(t − 2πℓ/step) dt,  h_m(t) = ẽ_m(t) 2√s l_n^α(2st),
/// each overlap integrated by a Gauss–Laguerre rule after the substitution v = (1+2s)u. The shift
/// terms are added until they drop below 1e−3 · tolerance. The result is real symmetric.
HermitianMatrix full_row_operator(const WaveletOrder& order, double basis_alpha, int basis_size, double s,
                                  double step, double tolerance = 1e-8);

struct FrameMatrixResult {
  HermitianMatrix matrix;
  std::size_t atom_count = 0;  // atoms summed individually; full rows are not counted
  std::vector<RowRange> rows;
  int quadrature_order = 0;
};

FrameMatrixResult frame_matrix(const FrameAnalysisConfig& cfg);

/// Smallest and largest eigenvalue of a Hermitian matrix: cyclic Jacobi rotations on the real
/// symmetric 2M×2M embedding until the off-diagonal Frobenius norm is ≤ 1e−12 of the total.
/// Throws lwf::contract_error if the Hermitian defect exceeds 1e−10 (scaled by max(1, max|S|)).
struct Extremes {
  double min = 0.0;
  double max = 0.0;
};
Extremes extreme_eigenvalues(const HermitianMatrix& s);

/// All eigenvalues (ascending) by the same method.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& s);

struct FrameReport {
  double a_est = 0.0;
  double b_est = 0.0;
  double density_estimate = 0.0;  // NaN when no lattice is attached
  double disc_threshold = 0.0;
  double lattice_threshold = 0.0;
  double atom_norm_sq = 0.0;      // 2Γ(n+α+1)/n!
  double separation = 0.0;        // NaN when fewer than two atoms
  std::size_t atom_count = 0;
  int basis_size = 0;
  double basis_alpha = 0.0;
  int quadrature_order = 0;
  std::vector<RowRange> rows;
};

/// Frame bounds on span{ẽ_0..ẽ_{M−1}} (optimistic for A), plus density and threshold fields.
FrameReport frame_bounds(const FrameAnalysisConfig& cfg);

/// Reports for each M in the schedule from one frame matrix built at max(schedule): the smaller
/// reports use its leading blocks, which are the frame operator compressed to the smaller span.
std::vector<FrameReport> frame_bounds_schedule(const FrameAnalysisConfig& cfg, const std::vector<int>& m_schedule);

struct SweepRow {
  double a = 0.0, b = 0.0;
  double blog_a = 0.0;
  double density_estimate = 0.0;
  double threshold = 0.0;
  bool inside = false;
  int m = 0;
  double a_est = 0.0;
  double b_est = 0.0;
  bool failed = false;
  std::string error;
};

/// One row per (pair, M); a pair that throws yields failed rows and the sweep continues.
std::vector<SweepRow> threshold_sweep(const WaveletOrder& order, const std::vector<std::pair<double, double>>& lattice_points,
                                      const std::vector<int>& m_schedule, double basis_alpha, double tolerance = 1e-8);

struct BergmanNormQuadrature {
  double y_lo = 1e-6;
  double y_hi = 1e6;
  int ny = 1201;
  double v_max = 8.0;  // x = (y + 1/2) sinh(v), |v| ≤ v_max
  int nv = 401;
};

struct SamplingReport {
  double ratio = 0.0;
  double sample_sum = 0.0;
  double norm_sq = 0.0;
  double tail_estimate = 0.0;  // boundary-row magnitude of the y-integrand
};

/// Σ_j |F(z_j)|² y_j^α / ‖F‖²_{A_α(U)}, ‖F‖² = ∬_U |F|² y^{α−2} dx dy on the truncated half-plane.
/// The x-substitution is centred on z = −i/2, the pole shared by every Ψ_m^ν.
/// Throws lwf::degenerate_input_error if ‖F‖² < 1e−12.
SamplingReport sampling_ratio(const geometry::PointSequence& seq, double bergman_alpha,
                              const std::function<cplx(cplx)>& test_fn, const BergmanNormQuadrature& quad = {});

}  // namespace lwf::frames
