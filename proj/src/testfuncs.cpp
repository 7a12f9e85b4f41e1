#include "jostlab/testfuncs.hpp"

#include <cmath>
#include <limits>

#include "jostlab/errors.hpp"

namespace jostlab {

const char* to_string(Family f) {
  switch (f) {
    case Family::CompactBump: return "bump";
    case Family::GelfandShilov: return "gelfand_shilov";
    case Family::Gaussian: return "gaussian";
    case Family::HardyRational: return "hardy_rational";
  }
  return "?";
}

const char* to_string(Domain d) { return d == Domain::HalfLine ? "half_line" : "full_line"; }

double conjugate_exponent(double a_gs) {
  if (!(a_gs > 1.0)) throw PreconditionError("Gelfand-Shilov order needs a_gs > 1");
  return a_gs / (a_gs - 1.0);
}

TestFunction make_bump(double A, double center, Domain domain) {
  if (!(A > 0.0)) throw PreconditionError("bump needs A > 0");
  TestFunctionParams p;
  p.A = A;
  p.center = center;
  return TestFunction(Family::CompactBump, domain, p);
}

TestFunction make_gs(double alpha, double a_gs, Domain domain) {
  if (!(alpha > 0.0)) throw PreconditionError("Gelfand-Shilov function needs alpha > 0");
  if (!(a_gs > 1.0)) throw PreconditionError("Gelfand-Shilov function needs a_gs > 1");
  TestFunctionParams p;
  p.alpha = alpha;
  p.a_gs = a_gs;
  return TestFunction(Family::GelfandShilov, domain, p);
}

TestFunction make_gaussian(double sigma, Domain domain) {
  if (!(sigma > 0.0)) throw PreconditionError("Gaussian needs sigma > 0");
  TestFunctionParams p;
  p.sigma = sigma;
  return TestFunction(Family::Gaussian, domain, p);
}

TestFunction make_hardy_rational(cplx z0) {
  if (!(z0.imag() > 0.0))
    throw PoleInLowerHalfPlane("Hardy-class-from-below rational needs Im z0 > 0");
  TestFunctionParams p;
  p.z0 = z0;
  return TestFunction(Family::HardyRational, Domain::HalfLine, p);
}

double TestFunction::operator()(double x) const { return params_.amplitude * shape(x); }

double TestFunction::shape(double x) const {
  const auto& p = params_;
  switch (family_) {
    case Family::CompactBump: {
      const double u = (x - p.center) / p.A;
      if (std::abs(u) >= 1.0) return 0.0;
      return std::exp(-1.0 / (1.0 - u * u));
    }
    case Family::GelfandShilov:
      return std::exp(-p.alpha * std::pow(1.0 + x * x, 0.5 * p.a_gs) / p.a_gs);
    case Family::Gaussian:
      return std::exp(-x * x / (2.0 * p.sigma * p.sigma));
    case Family::HardyRational:
      break;
  }
  throw PreconditionError("the Hardy rational family has no position-space values");
}

double TestFunction::log_abs(double x) const {
  const auto& p = params_;
  const double lc = std::log(std::abs(p.amplitude));
  switch (family_) {
    case Family::CompactBump: {
      const double u = (x - p.center) / p.A;
      if (std::abs(u) >= 1.0) return -std::numeric_limits<double>::infinity();
      return lc - 1.0 / (1.0 - u * u);
    }
    case Family::GelfandShilov:
      return lc - p.alpha * std::pow(1.0 + x * x, 0.5 * p.a_gs) / p.a_gs;
    case Family::Gaussian:
      return lc - x * x / (2.0 * p.sigma * p.sigma);
    case Family::HardyRational:
      break;
  }
  throw PreconditionError("the Hardy rational family has no position-space values");
}

cplx TestFunction::energy_value(cplx E) const {
  if (family_ != Family::HardyRational)
    throw PreconditionError("energy_value is only defined for the Hardy rational family");
  return params_.amplitude / (E - params_.z0);
}

double TestFunction::log_envelope(double x) const {
  const auto& p = params_;
  if (p.amplitude == 0.0 && family_ != Family::HardyRational)
    return -std::numeric_limits<double>::infinity();
  const double lc = std::log(std::abs(p.amplitude));
  return lc + shape_log_envelope(x);
}

double TestFunction::shape_log_envelope(double x) const {
  const auto& p = params_;
  switch (family_) {
    case Family::CompactBump:
      return std::abs(x - p.center) < p.A ? -1.0 : -std::numeric_limits<double>::infinity();
    case Family::GelfandShilov:
      // (1 + x^2)^{a/2} >= |x|^a, so C = 1 certifies the class bound
      return -p.alpha * std::pow(std::abs(x), p.a_gs) / p.a_gs;
    case Family::Gaussian:
      return -x * x / (2.0 * p.sigma * p.sigma);
    case Family::HardyRational:
      break;
  }
  throw PreconditionError("the Hardy rational family has no position-space decay certificate");
}

std::optional<std::pair<double, double>> TestFunction::support() const {
  if (family_ != Family::CompactBump) return std::nullopt;
  return std::make_pair(params_.center - params_.A, params_.center + params_.A);
}

double TestFunction::conjugate_exponent() const {
  if (family_ != Family::GelfandShilov) {
    if (family_ == Family::Gaussian) return 2.0;
    throw PreconditionError("conjugate exponent is defined for Gelfand-Shilov and Gaussian inputs");
  }
  return jostlab::conjugate_exponent(params_.a_gs);
}

}  // namespace jostlab
