#pragma once

#include <functional>
#include <vector>

#include "jostlab/quadrature.hpp"
#include "jostlab/surface.hpp"
#include "jostlab/testfuncs.hpp"

namespace jostlab {

struct Pole {
  cplx z;
  cplx residue;
};

//! An energy wave function on the real line.
/*! Rational functions (sums of simple poles) carry their poles so that the
    tails of time integrals are known in closed form; other functions are
    black boxes whose tails are estimated by integration by parts. */
class SpectralFunction {
 public:
  static SpectralFunction rational(std::vector<Pole> poles);
  static SpectralFunction generic(std::function<cplx(double)> f);
  //! The energy representation 1/(E - z0) of a Hardy rational test function.
  static SpectralFunction from(const TestFunction& hardy_rational);

  cplx operator()(double E) const;
  bool is_rational() const { return rational_; }
  const std::vector<Pole>& poles() const { return poles_; }

 private:
  SpectralFunction() = default;
  bool rational_ = false;
  std::vector<Pole> poles_;
  std::function<cplx(double)> f_;
};

struct TimeSignalConfig {
  double E_max = 1e3;
  bool half_line = false;  // integrate over [0, inf) instead of the whole line
  QuadratureConfig quad;
};

struct TimeSignal {
  std::vector<double> t_grid;
  std::vector<cplx> values;
  std::vector<double> errors;    // per-point error estimate (quadrature + tail)
  double quadrature_error = 0.0; // max over the grid
};

//! phi(t) = integral of e^{-iEt} fhat(E) dE over the whole line (or [0, inf)).
/*! Oscillation-segmented quadrature on [-E_max, E_max] plus the tails:
    exact exponential-integral tails for rational inputs, integration by
    parts otherwise. At t = 0 the full-line rational tail is the symmetric
    limit. Throws TailNotControlled when the tail error exceeds 1e-6 of
    max(|value|, L1 norm of the window). */
TimeSignal time_signal(const SpectralFunction& fhat, const std::vector<double>& t_grid,
                       const TimeSignalConfig& cfg = {});

//! Closed form of the full-line signal for a sum of simple poles.
/*! t > 0: -2 pi i sum over Im z < 0 of res e^{-izt}; t < 0: +2 pi i sum over
    Im z > 0; t = 0: the mean of the two. Throws PoleOnRealAxis. */
cplx residue_oracle(const std::vector<Pole>& poles, double t);

//! integral over E >= 0 of e^{-iEt} |fhat(E)|^2, the Schrodinger evolution
//! of the state as seen by its own energy distribution.
TimeSignal spectral_evolution(const SpectralFunction& fhat, const std::vector<double>& t_grid,
                              const TimeSignalConfig& cfg = {});

//! E_1(s), principal branch.
cplx expint_e1(cplx s);

}  // namespace jostlab
