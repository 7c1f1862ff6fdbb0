// lwf: command-line front end for the wavelet-frame library.
// Exit codes: 0 ok, 1 invariant failure, 2 bad input, 3 coverage or convergence failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lwf/frames.hpp"
#include "lwf/geometry.hpp"
#include "lwf/special.hpp"
#include "lwf/transforms.hpp"
#include "lwf/verify.hpp"
#include "output.hpp"

using json = nlohmann::json;
using lwf::cplx;
using lwf::cli::csv_row;
using lwf::cli::fmt_double;
using lwf::cli::write_text;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCoverage = 3;

struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw BadInput("not a number: '" + s + "'");
  }
  if (used != s.size()) throw BadInput("not a number: '" + s + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) {
    const double v = parse_double(item);
    if (v != std::floor(v)) throw BadInput("not an integer: '" + item + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// "re" or "re:im" per comma-separated entry.
std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> out;
  for (const auto& item : split(s, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) out.emplace_back(parse_double(parts[0]), 0.0);
    else if (parts.size() == 2) out.emplace_back(parse_double(parts[0]), parse_double(parts[1]));
    else throw BadInput("malformed complex entry '" + item + "'");
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  if (n == 1) v.push_back(lo);
  for (int i = 0; i < n && n > 1; ++i) v.push_back(i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
  return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v;
  for (double u : linspace(std::log(lo), std::log(hi), n)) v.push_back(std::exp(u));
  if (n > 1) v.front() = lo, v.back() = hi;
  return v;
}

// Fills options not given on the command line from a flat JSON object. Keys match long option
// names, with '_' accepted for '-'.
void apply_config(CLI::App* sub, const std::string& path) {
  if (path.empty()) return;
  std::ifstream f(path);
  if (!f) throw BadInput("cannot read config '" + path + "'");
  json cfg;
  try {
    cfg = json::parse(f);
  } catch (const json::exception& e) {
    throw BadInput("config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) throw BadInput("config '" + path + "' must hold a JSON object");
  for (auto* opt : sub->get_options()) {
    if (opt->count() > 0 || opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    std::string alt = name;
    for (auto& c : alt)
      if (c == '-') c = '_';
    const json* v = cfg.contains(name) ? &cfg[name] : (cfg.contains(alt) ? &cfg[alt] : nullptr);
    if (!v) continue;
    auto add = [&](const json& x) {
      if (x.is_string()) opt->add_result(x.get<std::string>());
      else if (x.is_boolean()) opt->add_result(x.get<bool>() ? "true" : "false");
      else if (x.is_number()) opt->add_result(x.dump());
      else throw BadInput("config key '" + name + "' has an unsupported type");
    };
    if (v->is_array()) {
      std::string joined;
      for (const auto& x : *v) {
        if (!joined.empty()) joined += ',';
        joined += x.is_string() ? x.get<std::string>() : x.dump();
      }
      opt->add_result(joined);
    } else {
      add(*v);
    }
    opt->run_callback();
  }
}

bool given(CLI::App* sub, const std::string& name) { return sub->get_option(name)->count() > 0; }

json frame_report_json(const lwf::frames::FrameReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    if (row.full_row) rows.push_back({{"j", row.j}, {"k", "all"}});
    else rows.push_back({{"j", row.j}, {"k_min", row.k_min}, {"k_max", row.k_max}});
  }
  auto num = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  return {{"a_est", r.a_est},
          {"b_est", r.b_est},
          {"density_estimate", num(r.density_estimate)},
          {"disc_threshold", r.disc_threshold},
          {"lattice_threshold", num(r.lattice_threshold)},
          {"atom_norm_sq", r.atom_norm_sq},
          {"metadata",
           {{"basis_size", r.basis_size},
            {"basis_alpha", r.basis_alpha},
            {"quadrature_order", r.quadrature_order},
            {"atom_count", r.atom_count},
            {"separation", num(r.separation)},
            {"rows", rows}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelet frames from Fourier transforms of Laguerre functions"};
  app.require_subcommand(1);

  // Shared option values; each subcommand binds the subset it uses.
  int n = 0;
  double alpha = 0.0;
  double a = std::numbers::e, b = 2.0 * std::numbers::pi;
  int jmin = -3, jmax = 3, kmin = -10, kmax = 10;
  int basis_size = 8;
  double basis_alpha = 2.0;
  int quad_order = 0;
  std::string config, out, format = "csv";

  auto common = [&](CLI::App* sub, bool order, bool lattice) {
    if (order) {
      sub->add_option("--n", n, "polynomial degree n")->check(CLI::NonNegativeNumber);
      sub->add_option("--alpha", alpha, "Laguerre parameter alpha");
    }
    if (lattice) {
      sub->add_option("--a", a, "dilation base a > 1");
      sub->add_option("--b", b, "translation step b > 0");
      sub->add_option("--jmin", jmin);
      sub->add_option("--jmax", jmax);
      sub->add_option("--kmin", kmin);
      sub->add_option("--kmax", kmax);
    }
    sub->add_option("--config", config, "JSON config; flags override its values");
    sub->add_option("--out", out, "output path (default stdout)");
  };

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate S_n^a, Laguerre, circular Jacobi or Paul functions on a grid");
  std::string family = "S";
  std::string t_list, x_list;
  double t_min = -5.0, t_max = 5.0, radius = 1.0;
  int points = 0;
  common(eval, true, false);
  eval->add_option("--family", family, "S | S-disc | laguerre | laguerre-fn | circular-jacobi | paul")
      ->check(CLI::IsMember({"S", "S-disc", "laguerre", "laguerre-fn", "circular-jacobi", "paul"}));
  eval->add_option("--t", t_list, "comma-separated t values (angle for circular-jacobi)");
  eval->add_option("--x", x_list, "comma-separated x values for real families");
  eval->add_option("--t-min", t_min);
  eval->add_option("--t-max", t_max);
  eval->add_option("--points", points, "uniform grid size on [t-min, t-max]");
  eval->add_option("--radius", radius, "|z| for circular-jacobi");
  eval->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // lattice
  auto* lattice = app.add_subcommand("lattice", "generate a hyperbolic lattice with density summary");
  double r = 0.99;
  std::string density_mode = "auto", summary_path;
  common(lattice, true, true);
  lattice->add_option("--r", r, "pseudohyperbolic radius for the density estimate");
  lattice->add_option("--density", density_mode, "auto (self-extending ranges) | fixed (given ranges)")
      ->check(CLI::IsMember({"auto", "fixed"}));
  lattice->add_option("--summary", summary_path, "JSON summary path (default stderr)");
  lattice->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // transform
  auto* transform = app.add_subcommand("transform", "wavelet coefficients on an (x, s) grid");
  std::string coeffs = "1";
  double x0 = 0.0, x_min = -5.0, x_max = 5.0, s_min = 0.1, s_max = 10.0;
  int nx = 11, ns = 5;
  common(transform, true, false);
  transform->add_option("--basis-alpha", basis_alpha);
  transform->add_option("--coeffs", coeffs, "signal coefficients, re or re:im, comma-separated");
  transform->add_option("--x0", x0, "signal translation");
  transform->add_option("--x-min", x_min);
  transform->add_option("--x-max", x_max);
  transform->add_option("--nx", nx);
  transform->add_option("--s-min", s_min);
  transform->add_option("--s-max", s_max);
  transform->add_option("--ns", ns);
  transform->add_option("--quad-order", quad_order);
  transform->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  // framebounds
  auto* framebounds = app.add_subcommand("framebounds", "frame bounds on a truncated Laguerre basis");
  std::string m_schedule;
  double tolerance = 1e-8;
  common(framebounds, true, true);
  framebounds->add_option("--basis-size", basis_size);
  framebounds->add_option("--basis-alpha", basis_alpha);
  framebounds->add_option("--quad-order", quad_order);
  framebounds->add_option("--m-schedule", m_schedule, "comma-separated basis sizes");
  framebounds->add_option("--tolerance", tolerance, "row truncation tolerance (self-extending lattice)");
  framebounds->add_option("--format", format)->check(CLI::IsMember({"json"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "frame bounds across several (a, b)");
  std::string pairs, blog_list;
  common(sweep, true, false);
  sweep->add_option("--a", a, "dilation base used with --blog");
  sweep->add_option("--pairs", pairs, "a:b,a:b,...");
  sweep->add_option("--blog", blog_list, "comma-separated b log a values at the given --a");
  sweep->add_option("--m-schedule", m_schedule);
  sweep->add_option("--basis-alpha", basis_alpha);
  sweep->add_option("--tolerance", tolerance);
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  std::string only;
  double inject = -1.0;
  bool all = false;
  verify->add_option("--only", only, "comma-separated suite ids");
  verify->add_flag("--all", all, "include suites outside the default run");
  verify->add_option("--inject-tolerance", inject, "replace every suite tolerance (harness self-test)");
  verify->add_option("--config", config);
  verify->add_option("--out", out, "JSON report path");
  verify->add_option("--format", format, "table | json")->check(CLI::IsMember({"csv", "table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    for (auto* sub : app.get_subcommands()) apply_config(sub, config);

    if (*eval) {
      const bool real_family = family == "laguerre" || family == "laguerre-fn";
      std::vector<double> grid;
      const std::string& list = real_family && !x_list.empty() ? x_list : t_list;
      for (const auto& item : split(list, ',')) grid.push_back(parse_double(item));
      if (grid.empty() && points > 0) grid = linspace(t_min, t_max, points);
      if (grid.empty()) throw BadInput("eval: give --t/--x values or --points");
      const lwf::special::WaveletOrder order{n, alpha};
      lwf::special::validate(order);
      std::string text = real_family ? csv_row({"x", "value"}) : csv_row({"t", "re", "im"});
      json arr = json::array();
      for (double t : grid) {
        if (real_family) {
          const double v = family == "laguerre" ? lwf::special::laguerre_polynomial(order, t)
                                                : lwf::special::laguerre_function(order, t);
          text += csv_row({fmt_double(t), fmt_double(v)});
          arr.push_back({{"x", t}, {"value", v}});
          continue;
        }
        cplx v;
        if (family == "S") v = lwf::special::s_eval(order, t);
        else if (family == "S-disc") v = lwf::special::s_eval_via_disc(order, t);
        else if (family == "paul") v = lwf::transforms::paul_wavelet(alpha, t);
        else v = lwf::special::circular_jacobi(order, std::polar(radius, t));
        text += csv_row({fmt_double(t), fmt_double(v.real()), fmt_double(v.imag())});
        arr.push_back({{"t", t}, {"re", v.real()}, {"im", v.imag()}});
      }
      write_text(out, format == "json" ? arr.dump(2) + "\n" : text);
      return kExitOk;
    }

    if (*lattice) {
      const lwf::geometry::HyperbolicLattice lat{a, b, jmin, jmax, kmin, kmax};
      lat.validate();
      if (!(r > 0.0 && r < 1.0)) throw BadInput("lattice: --r must lie in (0, 1)");
      const lwf::special::WaveletOrder order{n, alpha};
      const auto seq = lwf::geometry::generate_lattice(lat);
      const auto th = lwf::geometry::density_thresholds(order);

      double density = 0.0;
      if (!lat.empty()) {
        if (density_mode == "auto") {
          density = lwf::geometry::lattice_lower_density(a, b, r).estimate;
        } else {
          const int jc = (jmin + jmax) / 2;
          const int kc = (kmin + kmax) / 2;
          density = lwf::geometry::lower_density(seq, r, lwf::geometry::lattice_row_grid(a, b, jc, kc - 2, kc + 2));
        }
      }
      json separated = nullptr;
      if (seq.points.size() >= 2) separated = lwf::geometry::separation_constant(seq) > 1e-9;
      const json summary = {{"density_estimate", density},
                            {"theoretical_density", lat.theoretical_density()},
                            {"disc_threshold", th.disc_threshold},
                            {"lattice_threshold", std::isfinite(th.lattice_threshold) ? json(th.lattice_threshold)
                                                                                       : json(nullptr)},
                            {"separated", separated}};

      std::string text = csv_row({"j", "k", "re_u", "im_u", "re_d", "im_d"});
      json arr = json::array();
      std::size_t idx = 0;
      for (int j = lat.j_min; j <= lat.j_max && !lat.empty(); ++j)
        for (int k = lat.k_min; k <= lat.k_max; ++k, ++idx) {
          const cplx z = seq.points[idx];
          const cplx w = lwf::geometry::cayley_to_disc(z);
          text += csv_row({std::to_string(j), std::to_string(k), fmt_double(z.real()), fmt_double(z.imag()),
                           fmt_double(w.real()), fmt_double(w.imag())});
          arr.push_back({{"j", j}, {"k", k}, {"re_u", z.real()}, {"im_u", z.imag()}, {"re_d", w.real()}, {"im_d", w.imag()}});
        }
      if (format == "json") {
        write_text(out, json{{"points", arr}, {"summary", summary}}.dump(2) + "\n");
      } else {
        write_text(out, text);
        if (summary_path.empty()) std::cerr << summary.dump(2) << "\n";
        else write_text(summary_path, summary.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (*transform) {
      const lwf::special::WaveletOrder order{n, alpha};
      lwf::special::validate(order);
      if (!(basis_alpha > -1.0)) throw BadInput("transform: --basis-alpha must exceed -1");
      if (nx < 1 || ns < 1 || !(s_min > 0.0) || s_max < s_min) throw BadInput("transform: invalid grid");
      lwf::transforms::SpectralSignal f;
      f.basis_alpha = basis_alpha;
      f.coefficients = parse_complex_list(coeffs);
      f.translation = x0;
      const int m_count = std::max<int>(1, f.coefficients.size());
      const auto rule = quad_order > 0
                            ? lwf::quad::gauss_laguerre_rule(quad_order, 0.5 * (alpha + basis_alpha))
                            : lwf::transforms::pairing_rule(order, basis_alpha, m_count);
      std::string text = csv_row({"x", "s", "re", "im"});
      json arr = json::array();
      for (double s : ns == 1 ? std::vector<double>{s_min} : logspace(s_min, s_max, ns))
        for (double x : linspace(x_min, x_max, nx)) {
          const cplx w = lwf::transforms::wavelet_coefficient(f, order, {x, s}, rule);
          text += csv_row({fmt_double(x), fmt_double(s), fmt_double(w.real()), fmt_double(w.imag())});
          arr.push_back({{"x", x}, {"s", s}, {"re", w.real()}, {"im", w.imag()}});
        }
      write_text(out, format == "json" ? arr.dump(2) + "\n" : text);
      return kExitOk;
    }

    if (*framebounds) {
      lwf::frames::FrameAnalysisConfig cfg;
      cfg.order = {n, alpha};
      cfg.basis_size = basis_size;
      cfg.basis_alpha = basis_alpha;
      cfg.quadrature_order = quad_order;
      const bool fixed = given(framebounds, "--jmin") || given(framebounds, "--jmax") ||
                         given(framebounds, "--kmin") || given(framebounds, "--kmax");
      if (fixed) cfg.lattice = lwf::geometry::HyperbolicLattice{a, b, jmin, jmax, kmin, kmax};
      else cfg.auto_lattice = lwf::frames::AutoLattice{a, b, tolerance};
      auto schedule = m_schedule.empty() ? std::vector<int>{basis_size} : parse_int_list(m_schedule);
      const auto reports = lwf::frames::frame_bounds_schedule(cfg, schedule);
      json doc;
      if (reports.size() == 1) {
        doc = frame_report_json(reports.front());
      } else {
        doc = json::array();
        for (const auto& rep : reports) doc.push_back(frame_report_json(rep));
      }
      write_text(out, doc.dump(2) + "\n");
      return kExitOk;
    }

    if (*sweep) {
      std::vector<std::pair<double, double>> list;
      for (const auto& item : split(pairs, ',')) {
        // A malformed pair stays in the list as NaN so the sweep reports it as a failed row.
        const auto parts = split(item, ':');
        double pa = std::nan(""), pb = std::nan("");
        try {
          if (parts.size() == 2) pa = parse_double(parts[0]), pb = parse_double(parts[1]);
        } catch (const BadInput&) {
          pa = pb = std::nan("");
        }
        list.emplace_back(pa, pb);
      }
      for (const auto& item : split(blog_list, ',')) list.emplace_back(a, parse_double(item) / std::log(a));
      if (list.empty()) throw BadInput("sweep: give --pairs or --blog");
      const auto schedule = m_schedule.empty() ? std::vector<int>{8, 16, 32} : parse_int_list(m_schedule);
      const auto rows = lwf::frames::threshold_sweep({n, alpha}, list, schedule, basis_alpha, tolerance);
      std::string text = csv_row({"blog_a", "density_est", "threshold", "inside", "M", "a_est", "b_est"});
      for (const auto& row : rows) {
        text += csv_row({fmt_double(row.blog_a), fmt_double(row.density_estimate), fmt_double(row.threshold),
                         row.failed ? "failed" : (row.inside ? "true" : "false"), std::to_string(row.m),
                         fmt_double(row.a_est), fmt_double(row.b_est)});
        if (row.failed) std::cerr << "sweep: row a=" << row.a << " b=" << row.b << " failed: " << row.error << "\n";
      }
      write_text(out, text);
      return kExitOk;
    }

    if (*verify) {
      std::vector<std::string> ids;
      if (!only.empty()) {
        ids = split(only, ',');
      } else {
        for (const auto& s : lwf::verify::suites())
          if (s.in_default_run || all) ids.push_back(s.id);
      }
      std::optional<double> override;
      if (inject >= 0.0) override = inject;
      bool ok = true;
      json report = json::array();
      std::string table;
      for (const auto& id : ids) {
        lwf::verify::SuiteResult res;
        try {
          res = lwf::verify::run_suite(id, override);
        } catch (const std::invalid_argument& e) {
          throw BadInput(e.what());
        }
        ok = ok && res.pass;
        char line[256];
        std::snprintf(line, sizeof line, "%-4s  %-10s  metric=%-12.4g tol=%-10.3g %7.2fs  ", res.pass ? "PASS" : "FAIL",
                      res.id.c_str(), res.metric, res.tolerance, res.seconds);
        table += line + res.title + "\n      " + res.detail + "\n";
        report.push_back({{"id", res.id},
                          {"title", res.title},
                          {"pass", res.pass},
                          {"metric", std::isfinite(res.metric) ? json(res.metric) : json(nullptr)},
                          {"tolerance", res.tolerance},
                          {"seconds", res.seconds},
                          {"detail", res.detail}});
      }
      const json doc = {{"pass", ok}, {"suites", report}};
      if (format == "json") {
        write_text(out, doc.dump(2) + "\n");
      } else {
        std::cout << table << (ok ? "all suites passed" : "some suites FAILED") << "\n";
        if (!out.empty()) write_text(out, doc.dump(2) + "\n");
      }
      return ok ? kExitOk : kExitInvariant;
    }
  } catch (const lwf::coverage_error& e) {
    std::cerr << "coverage error: " << e.what() << "\n";
    return kExitCoverage;
  } catch (const lwf::convergence_error& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitCoverage;
  } catch (const lwf::contract_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {  // bad input, configuration errors, degenerate inputs
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
