#include "jostlab/surface.hpp"

#include "jostlab/errors.hpp"

namespace jostlab {

SurfacePoint SurfacePoint::from_energy(cplx E, Sheet sheet) {
  if (E == cplx(0.0, 0.0) && sheet == Sheet::II)
    throw ZeroEnergyOnSheetII("E = 0 is the branch point; it has no sheet II image");

  // drop a negative zero so std::sqrt does not land on the wrong lip of the cut
  if (E.imag() == 0.0) E = cplx(E.real(), 0.0);
  cplx k = std::sqrt(E);
  if (sheet == Sheet::I && k.imag() < 0.0) k = -k;
  if (sheet == Sheet::II && k.imag() > 0.0) k = -k;
  return SurfacePoint(k, sheet);
}

const char* to_string(Sheet s) { return s == Sheet::I ? "I" : "II"; }

}  // namespace jostlab
