#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "jostlab/dual.hpp"
#include "jostlab/errors.hpp"
#include "jostlab/potentials.hpp"
#include "jostlab/surface.hpp"

namespace jostlab {

enum class Sign { Plus, Minus };
enum class Side { Left, Right };

//! Which root of z - V0 is used for the inner momentum. Physical results
//! (J3, J4, chi) do not depend on it; J1 and J2 trade places.
enum class InnerBranch { Principal, Flipped };

//! Matching data of the regular solution at one momentum.
template <typename Scalar>
struct JostData {
  Scalar J1, J2, J3, J4;
  Scalar Jplus, Jminus;
  Scalar S;

  const Scalar& jost(Sign s) const { return s == Sign::Plus ? Jplus : Jminus; }
};

namespace detail {

inline constexpr double kSingularDeterminant = 1e-30;

// cos(sqrt(w) x) and sin(sqrt(w) x)/sqrt(w): even in sqrt(w), so branch free.
template <typename Scalar>
Scalar cos_even(const Scalar& w, double x) {
  using std::cos; using std::sqrt; using std::abs;
  if (abs(value_of(w)) * x * x < 1e-4) {
    const Scalar u = w * (x * x);
    return 1.0 - u / 2.0 * (1.0 - u / 12.0 * (1.0 - u / 30.0 * (1.0 - u / 56.0)));
  }
  return cos(sqrt(w) * x);
}

template <typename Scalar>
Scalar sinc_even(const Scalar& w, double x) {
  using std::sin; using std::sqrt; using std::abs;
  if (abs(value_of(w)) * x * x < 1e-4) {
    const Scalar u = w * (x * x);
    return x * (1.0 - u / 6.0 * (1.0 - u / 20.0 * (1.0 - u / 42.0 * (1.0 - u / 72.0))));
  }
  const Scalar kap = sqrt(w);
  return sin(kap * x) / kap;
}

template <typename Scalar>
void check_determinant(const Scalar& det, const char* where) {
  if (std::abs(value_of(det)) < kSingularDeterminant)
    throw SingularMatching(std::string("matching system singular at r = ") + where);
}

}  // namespace detail

//! Solves the continuity systems of the shell problem at momentum k.
/*! J1, J2 come from the value/derivative system at r = a and J3, J4 from
    the one at r = b. The interior solution is carried from a to b in its
    branch-free cos/sinc form, so J3 and J4 never see the choice of inner
    root. Works for Scalar = std::complex<double> and DualC. */
template <typename Scalar>
JostData<Scalar> match_shell(const ShellPotential& pot, const Scalar& k,
                             InnerBranch branch = InnerBranch::Principal) {
  using std::cos; using std::exp; using std::sin; using std::sqrt;
  using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
  using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
  const std::complex<double> I(0.0, 1.0);

  const Scalar w = k * k - pot.V0;
  Scalar kap = sqrt(w);
  if (branch == InnerBranch::Flipped) kap = -kap;

  const Scalar sa = sin(k * pot.a);
  const Scalar ca = cos(k * pot.a);

  JostData<Scalar> out;

  {
    const Scalar ep = exp(I * kap * pot.a);
    const Scalar em = exp(-I * kap * pot.a);
    Mat2 M;
    M << ep, em, I * kap * ep, -I * kap * em;
    const Scalar det = M.determinant();
    detail::check_determinant(det, "a");
    Vec2 rhs(sa, k * ca);
    const Vec2 c = M.inverse() * rhs;
    out.J1 = c(0);
    out.J2 = c(1);
  }

  const double d = pot.b - pot.a;
  const Scalar cd = detail::cos_even(w, d);
  const Scalar sd = detail::sinc_even(w, d);
  const Scalar chi_b = sa * cd + k * ca * sd;
  const Scalar dchi_b = -sa * w * sd + k * ca * cd;

  {
    const Scalar ep = exp(I * k * pot.b);
    const Scalar em = exp(-I * k * pot.b);
    Mat2 M;
    M << ep, em, I * k * ep, -I * k * em;
    const Scalar det = M.determinant();
    detail::check_determinant(det, "b");
    Vec2 rhs(chi_b, dchi_b);
    const Vec2 c = M.inverse() * rhs;
    out.J3 = c(0);
    out.J4 = c(1);
  }

  out.Jplus = -2.0 * I * out.J4;
  out.Jminus = 2.0 * I * out.J3;
  out.S = out.Jminus / out.Jplus;
  return out;
}

//! Regular solution chi(r; k) given precomputed matching data.
template <typename Scalar>
Scalar evaluate_regular(const ShellPotential& pot, const Scalar& k,
                        const JostData<Scalar>& jd, double r) {
  using std::cos; using std::exp; using std::sin;
  const std::complex<double> I(0.0, 1.0);
  if (r <= pot.a) return sin(k * r);
  if (r <= pot.b) {
    const Scalar w = k * k - pot.V0;
    const double x = r - pot.a;
    return sin(k * pot.a) * detail::cos_even(w, x) + k * cos(k * pot.a) * detail::sinc_even(w, x);
  }
  return jd.J3 * exp(I * k * r) + jd.J4 * exp(-I * k * r);
}

//! Jost data at a surface point (complex double path).
JostData<cplx> jost_coefficients(const ShellPotential& pot, const SurfacePoint& p,
                                 InnerBranch branch = InnerBranch::Principal);

//! J+(k) together with dJ+/dk.
std::pair<cplx, cplx> jost_plus_with_derivative(const ShellPotential& pot, cplx k);

//! chi(r; z) = sin(k r) inside, matched piecewise form outside.
cplx regular_solution(const ShellPotential& pot, const SurfacePoint& p, double r);

//! chi and d chi / dr at r (one-sided from the region containing r).
std::pair<cplx, cplx> regular_solution_with_derivative(const ShellPotential& pot,
                                                       const SurfacePoint& p, double r);

enum class EigenKind {
  Regular,
  LSPlus,
  LSMinus,
  Free,
  BarrierLeftPlus,
  BarrierRightPlus,
  BarrierLeftMinus,
  BarrierRightMinus
};

const char* to_string(EigenKind k);

//! |f(r)| <= exp(log_scale + rate * |r|) for |r| >= valid_from.
struct Envelope {
  double log_scale = 0.0;
  double rate = 0.0;
  double valid_from = 0.0;
};

//! A scattering eigenfunction frozen at one surface point.
class Eigenfunction {
 public:
  Eigenfunction(EigenKind kind, SurfacePoint point, std::function<cplx(double)> eval,
                Envelope env)
      : kind_(kind), point_(point), eval_(std::move(eval)), env_(env) {}

  cplx operator()(double r) const { return eval_(r); }

  EigenKind kind() const { return kind_; }
  const SurfacePoint& point() const { return point_; }
  const Envelope& envelope() const { return env_; }

 private:
  EigenKind kind_;
  SurfacePoint point_;
  std::function<cplx(double)> eval_;
  Envelope env_;
};

inline constexpr double kJostZeroThreshold = 1e-12;

Eigenfunction regular_eigenfunction(const ShellPotential& pot, const SurfacePoint& p);

//! chi^{+-}(r; E) = sqrt(1/(pi sqrt(E))) chi(r; E) / J_{+-}(E), sqrt(E) = p.k().
/*! Throws PoleAtRequestedPoint when |J_{+-}| < 1e-12. */
Eigenfunction ls_eigenfunction(const ShellPotential& pot, const SurfacePoint& p, Sign sign);

//! chi_0(r; E) = sqrt(1/(pi sqrt(E))) sin(sqrt(E) r).
Eigenfunction free_eigenfunction(const SurfacePoint& p);

//! Plane-wave amplitudes of the barrier problem for unit incidence.
struct BarrierAmplitudes {
  cplx reflected;      // R
  cplx transmitted;    // T
  cplx inner_plus;     // coefficient of exp(+i kappa x) on (a, b)
  cplx inner_minus;    // coefficient of exp(-i kappa x) on (a, b)
  cplx denominator;    // incident amplitude for unit transmission; zero at poles of T
};

//! Outgoing-wave (+) amplitudes for incidence from the given side.
BarrierAmplitudes barrier_amplitudes(const BarrierPotential& pot, cplx k, Side side);

//! chi^{+-}_{l,r}(x; E) with prefactor 1/sqrt(4 pi k).
/*! The minus solutions are the Schwarz reflections of the plus ones,
    chi^-(x; k) = conj(chi^+(x; conj k)), which for real k is time reversal. */
Eigenfunction barrier_eigenfunction(const BarrierPotential& pot, const SurfacePoint& p,
                                    Side side, Sign sign);

}  // namespace jostlab
