#pragma once

namespace jostlab {

//! Radial step V(r) = V0 on a < r < b, zero elsewhere (s-wave, hbar^2/2m = 1).
struct ShellPotential {
  double a = 1.0;
  double b = 2.0;
  double V0 = 0.0;

  //! Checks 0 < a < b and a finite V0; throws PreconditionError otherwise.
  static ShellPotential make(double a, double b, double V0);

  double operator()(double r) const { return (r > a && r < b) ? V0 : 0.0; }
};

//! One-dimensional rectangular barrier V(x) = V0 on a < x < b.
struct BarrierPotential {
  double a = 0.0;
  double b = 1.0;
  double V0 = 0.0;

  static BarrierPotential make(double a, double b, double V0);

  double operator()(double x) const { return (x > a && x < b) ? V0 : 0.0; }
};

}  // namespace jostlab
