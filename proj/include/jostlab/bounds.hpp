#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jostlab/surface.hpp"

namespace jostlab {

enum class BoundKind { RegularSolution, LSPlusMinus, Free, Gamow, Sine, GelfandShilov, PaleyWiener };

const char* to_string(BoundKind k);

//! One growth estimate with its constants.
/*! Radial kinds (RegularSolution, LSPlusMinus, Free, Gamow, Sine) are
    functions of (z, r); GelfandShilov and PaleyWiener read the momentum of
    the surface point as the Fourier variable q. */
struct BoundSpec {
  BoundKind kind = BoundKind::RegularSolution;
  double C = 1.0;           // C, C_n or C_N
  double A = 1.0;           // support radius (PaleyWiener)
  double beta = 1.0;        // growth strength (GelfandShilov)
  double b_gs = 2.0;        // growth order (GelfandShilov)
  int N = 0;                // polynomial order (PaleyWiener, GelfandShilov)
  double jost_abs = 1.0;    // |J_{+-}(z)| (LSPlusMinus)
  double rate_scale = 1.0;  // multiplies the exponential rate; 1 is the literal bound

  //! Throws PreconditionError unless the constants are positive.
  void validate() const;
  bool needs_radius() const;
};

//! Right-hand side of the inequality selected by spec.kind at (p, r).
/*! Throws MissingRadius when a radial kind is evaluated without r. */
double bound_rhs(const BoundSpec& spec, const SurfacePoint& p, std::optional<double> r = std::nullopt);

struct BoundSample {
  SurfacePoint point;
  std::optional<double> r;
};

struct BoundCheck {
  double fitted_constant = 0.0;    // smallest C valid on every sample
  double training_constant = 0.0;  // smallest C valid on the training half
  std::vector<std::size_t> violations;  // test samples needing more than 10x the training C
  std::size_t n_train = 0, n_test = 0;
};

//! Empirical check of one inequality.
/*! Samples are ordered by |k| (1 + r); the lower half trains the constant,
    the upper half is tested against ten times that constant. Violations are
    data, not errors. */
BoundCheck verify_bound(const std::function<double(const SurfacePoint&, std::optional<double>)>& lhs,
                        const BoundSpec& spec, const std::vector<BoundSample>& samples);

}  // namespace jostlab
