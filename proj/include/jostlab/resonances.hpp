#pragma once

#include <vector>

#include "jostlab/potentials.hpp"
#include "jostlab/scattering.hpp"
#include "jostlab/surface.hpp"

namespace jostlab {

//! Axis-aligned rectangle in the k-plane.
struct KRectangle {
  double re_min, re_max;
  double im_min, im_max;

  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  bool contains(cplx k) const {
    return k.real() >= re_min && k.real() <= re_max && k.imag() >= im_min && k.imag() <= im_max;
  }
};

//! An S-matrix pole (zero of J+) below the real k axis.
struct Resonance {
  SurfacePoint point;
  cplx zn;            // k_n^2
  double gamma;       // -2 Im z_n
  cplx normalization{1.0, 0.0};
  double jplus_abs;   // |J+(k_n)| after refinement

  static Resonance at(cplx kn, cplx jplus);
};

inline constexpr int kDefaultBoundaryPoints = 4096;
inline constexpr double kContourClearance = 1e-6;

//! (1/2 pi i) of the contour integral of J+'/J+ around rect, unrounded.
/*! boundary_points sets the initial Gauss panels; panels are bisected until
    their halves agree to 1e-10. Throws ZeroOnContour if |J+| <= 1e-6 at any
    node or the refinement does not settle. */
double winding_number(const ShellPotential& pot, const KRectangle& rect,
                      int boundary_points = kDefaultBoundaryPoints);

//! Number of zeros of J+ inside rect, counted with multiplicity.
/*! Throws NonIntegerWinding when the quadrature is more than 1e-3 away
    from an integer. */
int count_zeros(const ShellPotential& pot, const KRectangle& rect,
                int boundary_points = kDefaultBoundaryPoints);

//! All zeros of J+ in rect, refined to |J+| < tol, sorted by Re k.
std::vector<Resonance> find_resonances(const ShellPotential& pot, const KRectangle& rect,
                                       double tol = 1e-10);

//! Default search box Re k in (0, k_max], Im k in [-im_max, 0).
KRectangle resonance_search_box(double k_max, double im_max);

//! Gamow state u(r; z_n): outgoing e^{i k_n r} beyond b, matched inside.
cplx gamow_state(const ShellPotential& pot, const Resonance& res, double r);

}  // namespace jostlab
