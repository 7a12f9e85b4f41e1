#pragma once

#include <complex>

namespace jostlab {

using cplx = std::complex<double>;

enum class Sheet { I, II };

//! A point of the two-sheeted energy surface, stored by its momentum.
/*! The surface of sqrt(E) is flattened onto the k-plane: sheet I is the
    closed upper half-plane and sheet II the closed lower half-plane. On the
    real axis both sheets meet; from_momentum() assigns real k to sheet I. */
class SurfacePoint {
 public:
  SurfacePoint() = default;

  static SurfacePoint from_momentum(cplx k) {
    return SurfacePoint(k, k.imag() >= 0.0 ? Sheet::I : Sheet::II);
  }

  //! Throws ZeroEnergyOnSheetII for E = 0 on sheet II (the branch point).
  static SurfacePoint from_energy(cplx E, Sheet sheet);

  cplx k() const { return k_; }
  Sheet sheet() const { return sheet_; }
  cplx energy() const { return k_ * k_; }

  //! The point whose momentum is conj(k). It carries the energy conj(E) and
  //! lies on the opposite sheet unless k is real.
  SurfacePoint conjugate() const { return from_momentum(std::conj(k_)); }

 private:
  SurfacePoint(cplx k, Sheet s) : k_(k), sheet_(s) {}

  cplx k_{1.0, 0.0};
  Sheet sheet_ = Sheet::I;
};

inline SurfacePoint from_energy(cplx E, Sheet sheet) {
  return SurfacePoint::from_energy(E, sheet);
}

const char* to_string(Sheet s);

}  // namespace jostlab
