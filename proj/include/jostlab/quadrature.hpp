#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace jostlab {

//! Knobs shared by every adaptive quadrature in the library.
struct QuadratureConfig {
  double rel_tol = 1e-10;
  int max_subdivisions = 18;  // bisection depth per segment
  bool oscillation_splitting = true;
  double abs_tol = 0.0;  // per unit length; stops refinement once the integrand is below the noise

  //! Throws PreconditionError unless rel_tol lies in (0, 1e-4], depth > 0 and abs_tol >= 0.
  void validate() const;
};

struct QuadratureResult {
  std::complex<double> value;
  double abs_error = 0.0;
  double l1_norm = 0.0;  // integral of |f|, the natural scale for cancellation
};

//! Adaptive Gauss-Kronrod integral of f over [lo, hi].
/*! The interval is first cut at the breakpoints and, if the config allows,
    at every period 2 pi/omega of the kernel's oscillation so that each
    segment carries at most one period. */
QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double lo,
                           double hi, const QuadratureConfig& cfg, double omega = 0.0,
                           std::span<const double> breakpoints = {});

//! Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

}  // namespace jostlab
