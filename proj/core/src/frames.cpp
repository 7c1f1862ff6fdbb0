#include "lwf/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lwf/parallel.hpp"
#include "lwf/quadrature.hpp"
#include "lwf/transforms.hpp"

namespace lwf::frames {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

quad::QuadratureRule make_rule(const FrameAnalysisConfig& cfg) {
  const double c = 0.5 * (cfg.order.alpha + cfg.basis_alpha);
  if (cfg.quadrature_order == 0) return transforms::pairing_rule(cfg.order, cfg.basis_alpha, cfg.basis_size);
  const int degree = cfg.basis_size - 1 + cfg.order.n;
  if (degree > 2 * cfg.quadrature_order - 1)
    throw configuration_error("frame_matrix: quadrature order " + std::to_string(cfg.quadrature_order) +
                              " is below the exactness budget " + std::to_string(degree / 2 + 1) +
                              " for basis size " + std::to_string(cfg.basis_size));
  return quad::gauss_laguerre_rule(cfg.quadrature_order, c);
}

struct AtomSource {
  const FrameAnalysisConfig& cfg;
  const quad::QuadratureRule& rule;
  std::vector<cplx> operator()(double x, double s) const {
    return transforms::atom_basis_pairings(cfg.order, cfg.basis_alpha, cfg.basis_size, {x, s}, rule);
  }
};

// Pairings for an explicit list of atoms, computed in parallel into index-addressed slots.
std::vector<std::vector<cplx>> pairings_for(const AtomSource& src, const std::vector<cplx>& zs) {
  std::vector<std::vector<cplx>> out(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) { out[i] = src(zs[i].real(), zs[i].imag()); });
  return out;
}

FrameMatrixResult auto_frame_matrix(const FrameAnalysisConfig& cfg, const AutoLattice& al) {
  const int m = cfg.basis_size;
  auto row_at = [&](int j) {
    const double s = std::pow(al.a, j);
    return full_row_operator(cfg.order, cfg.basis_alpha, m, s, s * al.b, al.tolerance);
  };
  auto trace = [m](const HermitianMatrix& r) {
    double t = 0.0;
    for (int i = 0; i < m; ++i) t += r(i, i).real();
    return t;
  };
  std::vector<std::pair<int, HermitianMatrix>> rows;
  rows.emplace_back(0, row_at(0));
  for (int dir : {-1, 1}) {
    double prev = trace(rows.front().second);
    int quiet = 0;
    for (int step = 1;; ++step) {
      if (step > al.max_rows) throw convergence_error("frame_matrix: row growth did not converge");
      auto row = row_at(dir * step);
      const double t = trace(row);
      const double ratio = prev > 0.0 ? t / prev : 0.0;
      const double tail = ratio < 1.0 ? t * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
      rows.emplace_back(dir * step, std::move(row));
      prev = t;
      quiet = (t < al.tolerance && tail < al.tolerance) ? quiet + 1 : 0;
      if (quiet >= 2) break;
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  FrameMatrixResult out;
  out.matrix = HermitianMatrix(m);
  for (const auto& [j, r] : rows) {
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) out.matrix(i, k) += r(i, k);
    out.rows.push_back({j, 0, -1, true});
  }
  return out;
}

// Real symmetric Jacobi eigenvalues (cyclic sweeps).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  double total = 0.0;
  for (double v : a) total += v * v;
  const double target = 1e-12 * std::sqrt(total);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) <= target) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

HermitianMatrix full_row_operator(const WaveletOrder& order, double basis_alpha, int basis_size, double s, double step,
                                  double tolerance) {
  special::validate(order);
  if (!(s > 0.0) || !(step > 0.0)) throw domain_error("full_row_operator: scale and step must be positive");
  const int m_count = basis_size;
  const double c = 0.5 * (order.alpha + basis_alpha);
  const double decay = 0.5 + s;
  const int q0 = m_count + order.n + 2;
  const int q1 = m_count + order.n + static_cast<int>(std::ceil(0.5 * std::max(c, 0.0))) + 2;
  const auto rule0 = quad::gauss_laguerre_rule(q0, 2.0 * c);
  const auto rule1 = quad::gauss_laguerre_rule(q1, c);

  std::vector<double> norm(m_count);
  for (int m = 0; m < m_count; ++m) norm[m] = transforms::basis_normalizer(basis_alpha, m);
  // A_m(t) = N_m L_m^β(t) L_n^α(2st)
  auto amplitudes = [&](double t, std::vector<double>& out) {
    special::laguerre_sequence<double>(basis_alpha, t, out);
    const double ln = special::laguerre_value<double>(order.n, order.alpha, 2.0 * s * t);
    for (int m = 0; m < m_count; ++m) out[m] *= norm[m] * ln;
  };

  const double log_pref = std::log(4.0 * s) + order.alpha * std::log(2.0 * s) - (2.0 * c + 1.0) * std::log(2.0 * decay) +
                          std::log(2.0 * std::numbers::pi / step);
  std::vector<double> acc(static_cast<std::size_t>(m_count) * m_count, 0.0);
  std::vector<double> a(m_count), b(m_count);

  for (std::size_t i = 0; i < rule0.nodes.size(); ++i) {
    if (rule0.weights[i] == 0.0) continue;
    amplitudes(rule0.nodes[i] / (2.0 * decay), a);
    for (int p = 0; p < m_count; ++p)
      for (int q = 0; q < m_count; ++q) acc[p * m_count + q] += rule0.weights[i] * a[p] * a[q];
  }
  const double pref = std::exp(log_pref);
  for (auto& v : acc) v *= pref;

  const double tau1 = 2.0 * std::numbers::pi / step;
  std::vector<double> shift(static_cast<std::size_t>(m_count) * m_count);
  int quiet = 0;
  for (int ell = 1; quiet < 2; ++ell) {
    if (ell > 1000000) throw convergence_error("full_row_operator: shift series did not converge");
    const double tau = ell * tau1;
    const double log_env = log_pref - decay * tau;
    if (log_env < -700.0) break;
    std::fill(shift.begin(), shift.end(), 0.0);
    for (std::size_t i = 0; i < rule1.nodes.size(); ++i) {
      if (rule1.weights[i] == 0.0) continue;
      const double v = rule1.nodes[i];
      const double u = v / (2.0 * decay);
      amplitudes(u + tau, a);
      amplitudes(u, b);
      const double w = rule1.weights[i] * std::exp(log_env + c * std::log(v + 2.0 * decay * tau));
      for (int p = 0; p < m_count; ++p)
        for (int q = 0; q < m_count; ++q) shift[p * m_count + q] += w * a[p] * b[q];
    }
    double largest = 0.0;
    for (int p = 0; p < m_count; ++p)
      for (int q = 0; q < m_count; ++q) {
        const double sym = shift[p * m_count + q] + shift[q * m_count + p];
        acc[p * m_count + q] += sym;
        largest = std::max(largest, std::abs(sym));
      }
    quiet = largest < 1e-3 * tolerance ? quiet + 1 : 0;
  }

  // (w a_p) a_q and (w a_q) a_p round differently; mirror the upper triangle.
  HermitianMatrix out(m_count);
  for (int p = 0; p < m_count; ++p)
    for (int q = p; q < m_count; ++q) out(p, q) = out(q, p) = acc[p * m_count + q];
  return out;
}

HermitianMatrix HermitianMatrix::leading(int m) const {
  if (m > n_ || m < 0) throw contract_error("HermitianMatrix::leading: block larger than matrix");
  HermitianMatrix out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = (*this)(i, j);
  return out;
}

double HermitianMatrix::hermitian_defect() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

double HermitianMatrix::max_abs() const {
  double d = 0.0;
  for (const auto& v : data_) d = std::max(d, std::abs(v));
  return d;
}

void FrameMatrixBuilder::add_atom(const std::vector<cplx>& v) {
  const int m = s_.size();
  if (static_cast<int>(v.size()) != m) throw contract_error("FrameMatrixBuilder: atom length differs from basis size");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s_(i, j) += v[i] * std::conj(v[j]);
  ++atoms_;
}

void FrameAnalysisConfig::validate() const {
  special::validate(order);
  if (!(basis_alpha > -1.0)) throw domain_error("frame config: basis_alpha must exceed -1");
  if (basis_size < 1) throw configuration_error("frame config: basis size must be at least 1");
  if (quadrature_order < 0) throw configuration_error("frame config: quadrature order must be non-negative");
  const int sources = int(lattice.has_value()) + int(auto_lattice.has_value()) + int(sequence.has_value());
  if (sources != 1) throw configuration_error("frame config: give exactly one of lattice, auto lattice or sequence");
  if (lattice) lattice->validate();
  if (auto_lattice) geometry::HyperbolicLattice{auto_lattice->a, auto_lattice->b}.validate();
}

FrameMatrixResult frame_matrix(const FrameAnalysisConfig& cfg) {
  cfg.validate();
  const auto rule = make_rule(cfg);
  const AtomSource src{cfg, rule};
  FrameMatrixResult out;
  if (cfg.auto_lattice) {
    out = auto_frame_matrix(cfg, *cfg.auto_lattice);
  } else {
    std::vector<cplx> zs;
    if (cfg.lattice) {
      zs = geometry::generate_lattice(*cfg.lattice).points;
      if (!cfg.lattice->empty())
        for (int j = cfg.lattice->j_min; j <= cfg.lattice->j_max; ++j)
          out.rows.push_back({j, cfg.lattice->k_min, cfg.lattice->k_max});
    } else {
      zs = cfg.sequence->to_half_plane().points;
    }
    FrameMatrixBuilder builder(cfg.basis_size);
    constexpr std::size_t kBlock = 4096;
    for (std::size_t start = 0; start < zs.size(); start += kBlock) {
      std::vector<cplx> part(zs.begin() + start, zs.begin() + std::min(zs.size(), start + kBlock));
      for (const auto& v : pairings_for(src, part)) builder.add_atom(v);
    }
    out.matrix = builder.matrix();
    out.atom_count = builder.atom_count();
  }
  out.quadrature_order = rule.order;
  return out;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& s) {
  const int m = s.size();
  if (m == 0) return {};
  if (s.hermitian_defect() > 1e-10 * std::max(1.0, s.max_abs()))
    throw contract_error("extreme_eigenvalues: matrix is not Hermitian");
  // [[Re, −Im], [Im, Re]] has every eigenvalue of S twice.
  const int n = 2 * m;
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const cplx v = 0.5 * (s(i, j) + std::conj(s(j, i)));
      a[static_cast<std::size_t>(i) * n + j] = v.real();
      a[static_cast<std::size_t>(i) * n + j + m] = -v.imag();
      a[static_cast<std::size_t>(i + m) * n + j] = v.imag();
      a[static_cast<std::size_t>(i + m) * n + j + m] = v.real();
    }
  const auto doubled = jacobi_eigenvalues(std::move(a), n);
  std::vector<double> ev(m);
  for (int i = 0; i < m; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return ev;
}

Extremes extreme_eigenvalues(const HermitianMatrix& s) {
  const auto ev = hermitian_eigenvalues(s);
  if (ev.empty()) return {};
  return {ev.front(), ev.back()};
}

std::vector<FrameReport> frame_bounds_schedule(const FrameAnalysisConfig& cfg, const std::vector<int>& m_schedule) {
  if (m_schedule.empty()) throw configuration_error("frame_bounds_schedule: empty schedule");
  for (int m : m_schedule)
    if (m < 1) throw configuration_error("frame_bounds_schedule: basis sizes must be positive");
  FrameAnalysisConfig big = cfg;
  big.basis_size = *std::max_element(m_schedule.begin(), m_schedule.end());
  big.validate();

  FrameReport base;
  const auto th = geometry::density_thresholds(cfg.order);
  base.disc_threshold = th.disc_threshold;
  base.lattice_threshold = th.lattice_threshold;
  base.atom_norm_sq =
      2.0 * std::exp(std::lgamma(cfg.order.n + cfg.order.alpha + 1.0) - std::lgamma(cfg.order.n + 1.0));
  base.basis_alpha = cfg.basis_alpha;
  base.density_estimate = kNaN;
  base.separation = kNaN;

  std::optional<std::pair<double, double>> ab;
  if (cfg.lattice) ab = {cfg.lattice->a, cfg.lattice->b};
  if (cfg.auto_lattice) ab = {cfg.auto_lattice->a, cfg.auto_lattice->b};

  const bool empty_fixed = cfg.lattice && cfg.lattice->empty();
  const bool empty_seq = cfg.sequence && cfg.sequence->points.empty();
  std::vector<FrameReport> out;
  if (empty_fixed || empty_seq) {
    for (int m : m_schedule) {
      FrameReport r = base;
      r.basis_size = m;
      out.push_back(r);
    }
    return out;
  }

  if (ab) {
    base.density_estimate = geometry::lattice_lower_density(ab->first, ab->second, 0.99).estimate;
    base.separation = geometry::lattice_separation_bound(ab->first, ab->second);
  } else if (cfg.sequence->points.size() >= 2) {
    base.separation = geometry::separation_constant(*cfg.sequence);
  }

  const auto fm = frame_matrix(big);
  base.atom_count = fm.atom_count;
  base.quadrature_order = fm.quadrature_order;
  base.rows = fm.rows;
  for (int m : m_schedule) {
    FrameReport r = base;
    r.basis_size = m;
    const auto ex = extreme_eigenvalues(fm.matrix.leading(m));
    r.a_est = std::max(0.0, ex.min);
    r.b_est = ex.max;
    out.push_back(r);
  }
  return out;
}

FrameReport frame_bounds(const FrameAnalysisConfig& cfg) { return frame_bounds_schedule(cfg, {cfg.basis_size}).front(); }

std::vector<SweepRow> threshold_sweep(const WaveletOrder& order, const std::vector<std::pair<double, double>>& lattice_points,
                                      const std::vector<int>& m_schedule, double basis_alpha, double tolerance) {
  const double threshold = geometry::density_thresholds(order).lattice_threshold;
  std::vector<SweepRow> rows;
  for (const auto& [a, b] : lattice_points) {
    SweepRow proto;
    proto.a = a;
    proto.b = b;
    proto.blog_a = (a > 0.0) ? b * std::log(a) : kNaN;
    proto.threshold = threshold;
    proto.inside = proto.blog_a < threshold;
    try {
      FrameAnalysisConfig cfg;
      cfg.order = order;
      cfg.basis_alpha = basis_alpha;
      cfg.auto_lattice = AutoLattice{a, b, tolerance};
      const auto reports = frame_bounds_schedule(cfg, m_schedule);
      for (const auto& rep : reports) {
        SweepRow r = proto;
        r.density_estimate = rep.density_estimate;
        r.m = rep.basis_size;
        r.a_est = rep.a_est;
        r.b_est = rep.b_est;
        rows.push_back(r);
      }
    } catch (const std::exception& e) {
      for (int m : m_schedule) {
        SweepRow r = proto;
        r.m = m;
        r.density_estimate = r.a_est = r.b_est = kNaN;
        r.failed = true;
        r.error = e.what();
        rows.push_back(r);
      }
    }
  }
  return rows;
}

SamplingReport sampling_ratio(const geometry::PointSequence& seq, double bergman_alpha,
                              const std::function<cplx(cplx)>& test_fn, const BergmanNormQuadrature& q) {
  if (!(bergman_alpha > 1.0)) throw domain_error("sampling_ratio: Bergman exponent must exceed 1");
  if (q.ny < 2 || q.nv < 2 || !(q.y_lo > 0.0) || !(q.y_hi > q.y_lo) || !(q.v_max > 0.0))
    throw configuration_error("sampling_ratio: invalid norm quadrature");
  const double u_lo = std::log(q.y_lo);
  const double hu = (std::log(q.y_hi) - u_lo) / (q.ny - 1);
  const double hv = 2.0 * q.v_max / (q.nv - 1);
  std::vector<double> rows(q.ny);
  parallel_for(static_cast<std::size_t>(q.ny), [&](std::size_t i) {
    const double y = std::exp(u_lo + hu * static_cast<double>(i));
    const double scale = y + 0.5;
    double acc = 0.0;
    for (int k = 0; k < q.nv; ++k) {
      const double v = -q.v_max + hv * k;
      const double x = scale * std::sinh(v);
      const double wk = (k == 0 || k == q.nv - 1) ? 0.5 : 1.0;
      acc += wk * std::norm(test_fn(cplx(x, y))) * scale * std::cosh(v);
    }
    rows[i] = acc * hv * std::pow(y, bergman_alpha - 2.0) * y;  // dy = y du
  });
  SamplingReport rep;
  for (int i = 0; i < q.ny; ++i) rep.norm_sq += ((i == 0 || i == q.ny - 1) ? 0.5 : 1.0) * rows[i];
  rep.norm_sq *= hu;
  rep.tail_estimate = rows.front() + rows.back();
  if (!(rep.norm_sq >= 1e-12)) throw degenerate_input_error("sampling_ratio: test function norm below 1e-12");
  for (const auto& p : seq.to_half_plane().points) rep.sample_sum += std::norm(test_fn(p)) * std::pow(p.imag(), bergman_alpha);
  rep.ratio = rep.sample_sum / rep.norm_sq;
  return rep;
}

}  // namespace lwf::frames
