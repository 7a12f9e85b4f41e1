#pragma once

#include <functional>

#include "jostlab/potentials.hpp"
#include "jostlab/quadrature.hpp"
#include "jostlab/scattering.hpp"
#include "jostlab/surface.hpp"
#include "jostlab/testfuncs.hpp"

namespace jostlab {

struct TransformResult {
  cplx value;
  double abs_error_estimate = 0.0;
  double truncation_radius = 0.0;  // upper end of the integration range
  bool support_exact = false;      // true when the range is the full support of f
};

//! Energy representation by the free eigenfunctions, continued to complex k.
/*! Returns the integral over r >= 0 of conj(chi_0(r; conj k)) f(r). The
    kernel is analytic in k. Requires a HalfLine input; the range is cut
    where the decay certificate of f times the kernel envelope drops below
    1e-16 of the running value. Throws DivergentIntegrand when f carries no
    position-space certificate. */
TransformResult transform_free(const TestFunction& f, const SurfacePoint& p,
                               const QuadratureConfig& cfg = {});

//! Same with the Lippmann-Schwinger eigenfunctions chi^{+-} of the shell.
/*! Throws PoleAtRequestedPoint when the kernel has a pole at p, i.e. when
    J_{+-}(conj k) vanishes. */
TransformResult transform_ls(const ShellPotential& pot, const TestFunction& f,
                             const SurfacePoint& p, Sign sign, const QuadratureConfig& cfg = {});

//! (1/sqrt(2 pi)) times the integral over the line of e^{-+ i q x} f(x).
/*! Sign::Minus selects e^{-iqx}. Requires a FullLine input. */
TransformResult fourier_line(const TestFunction& f, cplx q, Sign sign = Sign::Minus,
                             const QuadratureConfig& cfg = {});

/// phi(k) = sqrt(2k) phi(E).
cplx wavefun_E_to_k(cplx phi_E, cplx k);
/// phi(E) = phi(k) / sqrt(2k).
cplx wavefun_k_to_E(cplx phi_k, cplx k);

//! Total wave-number function on the real line from its two components.
/*! Both components are given as functions of |k| >= 0: the left one fills
    k >= 0, the right one fills k < 0. */
cplx combine_left_right(double k, const std::function<cplx(double)>& left,
                        const std::function<cplx(double)>& right);

struct NormResult {
  double value = 0.0;      // squared norm including the tail
  double tail = 0.0;       // extrapolated contribution beyond the cutoff
  double abs_error = 0.0;
};

//! Integral over E >= 0 of |fhat(E)|^2, computed as 2k |fhat(k^2)|^2 dk.
/*! The range beyond k_max is extrapolated from a power law fitted to the
    two last dyadic blocks. Throws TailNotControlled if the fitted decay is
    not integrable. */
NormResult energy_norm_squared(const std::function<cplx(double)>& fhat, double k_max,
                               const QuadratureConfig& cfg = {});

//! A density with a known norm whose tail resembles the one being measured.
struct NormControl {
  std::function<cplx(double)> fhat;
  NormResult norm;
};

//! Same integral written as control.norm plus the integral of the density
//! difference. Useful when fhat has oscillating corrections that spoil the
//! power-law tail fit but share their leading decay with the control.
NormResult energy_norm_squared(const std::function<cplx(double)>& fhat, const NormControl& control,
                               double k_max, const QuadratureConfig& cfg = {});

//! Integral over the real line of |g(q)|^2 with the same tail treatment.
NormResult line_norm_squared(const std::function<cplx(double)>& g, double q_max,
                             const QuadratureConfig& cfg = {});

//! Integral of |f|^2 over the domain of f.
double position_norm_squared(const TestFunction& f, const QuadratureConfig& cfg = {});

}  // namespace jostlab
