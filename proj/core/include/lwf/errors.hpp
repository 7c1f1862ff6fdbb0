#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lwf {

using cplx = std::complex<double>;

/// Argument outside the mathematical domain of an operation (α ≤ −1, Im z ≤ 0, |w| ≥ 1, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integral that diverges for the requested parameters.
class divergence_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Inputs too small or too degenerate to produce a meaningful answer.
class degenerate_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configuration that violates an analysis budget (e.g. quadrature order too low).
class configuration_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller broke a structural precondition (non-Hermitian matrix, mismatched bases, ...).
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iteration or series that did not settle within its budget.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pseudohyperbolic ball around an evaluation point is not fully populated.
class coverage_error : public std::runtime_error {
 public:
  coverage_error(const std::string& what, cplx grid_point)
      : std::runtime_error(what), grid_point_(grid_point) {}
  cplx grid_point() const noexcept { return grid_point_; }

 private:
  cplx grid_point_;
};

}  // namespace lwf
