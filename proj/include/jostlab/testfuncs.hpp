#pragma once

#include <optional>
#include <string>
#include <utility>

#include "jostlab/surface.hpp"

namespace jostlab {

enum class Family { CompactBump, GelfandShilov, Gaussian, HardyRational };
enum class Domain { HalfLine, FullLine };

const char* to_string(Family f);
const char* to_string(Domain d);

struct TestFunctionParams {
  double A = 1.0;       // bump half-width
  double center = 0.0;  // bump center
  double alpha = 1.0;   // Gelfand-Shilov decay strength
  double a_gs = 2.0;    // Gelfand-Shilov decay order
  double sigma = 1.0;   // Gaussian width
  cplx z0{0.0, 1.0};    // HardyRational pole
  double amplitude = 1.0;
};

//! Position-space test function with a certified decay class.
/*! HardyRational is the exception: it lives in the energy representation
    only and has no position-space values. */
class TestFunction {
 public:
  Family family() const { return family_; }
  Domain domain() const { return domain_; }
  const TestFunctionParams& params() const { return params_; }

  //! Value at x (position space). Throws PreconditionError for HardyRational.
  double operator()(double x) const;

  //! log|f(x)|, finite wherever f(x) != 0; lets callers combine f with
  //! large kernels without overflow. Sign of f is sign(amplitude).
  double log_abs(double x) const;

  //! 1/(E - z0) for HardyRational; throws for the position-space families.
  cplx energy_value(cplx E) const;

  //! log of the certified bound: log|f(x)| <= log_envelope(x). -inf off support.
  double log_envelope(double x) const;

  //! Closed support [lo, hi] for the bump, nullopt otherwise.
  std::optional<std::pair<double, double>> support() const;

  //! Conjugate exponent b_gs with 1/a_gs + 1/b_gs = 1.
  double conjugate_exponent() const;

  //! c * f. A zero amplitude gives the zero function of the same family.
  TestFunction scaled(double c) const {
    TestFunction t = *this;
    t.params_.amplitude *= c;
    return t;
  }

  //! Same function re-tagged to another domain.
  TestFunction on(Domain d) const {
    TestFunction t = *this;
    t.domain_ = d;
    return t;
  }

 private:
  friend TestFunction make_bump(double, double, Domain);
  friend TestFunction make_gs(double, double, Domain);
  friend TestFunction make_gaussian(double, Domain);
  friend TestFunction make_hardy_rational(cplx);

  double shape(double x) const;
  double shape_log_envelope(double x) const;

  TestFunction(Family f, Domain d, TestFunctionParams p) : family_(f), domain_(d), params_(p) {}

  Family family_;
  Domain domain_;
  TestFunctionParams params_;
};

//! x -> exp(-1/(1 - ((x - center)/A)^2)) on |x - center| < A, zero outside.
TestFunction make_bump(double A, double center = 0.0, Domain domain = Domain::FullLine);

//! x -> exp(-alpha (1 + x^2)^{a_gs/2} / a_gs), alpha > 0, a_gs > 1.
TestFunction make_gs(double alpha, double a_gs, Domain domain = Domain::FullLine);

//! x -> exp(-x^2 / (2 sigma^2)).
TestFunction make_gaussian(double sigma, Domain domain = Domain::FullLine);

//! E -> 1/(E - z0) with Im z0 > 0. Throws PoleInLowerHalfPlane otherwise.
TestFunction make_hardy_rational(cplx z0);

//! 1/a + 1/b = 1.
double conjugate_exponent(double a_gs);

}  // namespace jostlab
