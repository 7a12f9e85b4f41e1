#include "jostlab/scattering.hpp"

#include <cmath>
#include <memory>
#include <numbers>

namespace jostlab {

namespace {

constexpr cplx kI(0.0, 1.0);

void require_nonzero_momentum(const SurfacePoint& p, const char* what) {
  if (p.k() == cplx(0.0, 0.0))
    throw PreconditionError(std::string(what) + " is undefined at k = 0");
}

// sqrt(1/(pi sqrt(E))) with sqrt(E) = k
cplx delta_prefactor(cplx k) { return 1.0 / std::sqrt(std::numbers::pi * k); }

}  // namespace

JostData<cplx> jost_coefficients(const ShellPotential& pot, const SurfacePoint& p,
                                 InnerBranch branch) {
  require_nonzero_momentum(p, "jost_coefficients");
  return match_shell<cplx>(pot, p.k(), branch);
}

std::pair<cplx, cplx> jost_plus_with_derivative(const ShellPotential& pot, cplx k) {
  const auto jd = match_shell<DualC>(pot, DualC::variable(k));
  return {jd.Jplus.v, jd.Jplus.d};
}

cplx regular_solution(const ShellPotential& pot, const SurfacePoint& p, double r) {
  if (r < 0.0) throw PreconditionError("regular_solution needs r >= 0");
  const cplx k = p.k();
  if (r <= pot.a) return std::sin(k * r);
  const auto jd = match_shell<cplx>(pot, k);
  return evaluate_regular(pot, k, jd, r);
}

std::pair<cplx, cplx> regular_solution_with_derivative(const ShellPotential& pot,
                                                       const SurfacePoint& p, double r) {
  if (r < 0.0) throw PreconditionError("regular_solution needs r >= 0");
  const cplx k = p.k();
  if (r <= pot.a) return {std::sin(k * r), k * std::cos(k * r)};
  if (r <= pot.b) {
    const cplx w = k * k - pot.V0;
    const double x = r - pot.a;
    const cplx sa = std::sin(k * pot.a), ca = std::cos(k * pot.a);
    const cplx c = detail::cos_even(w, x), s = detail::sinc_even(w, x);
    return {sa * c + k * ca * s, -sa * w * s + k * ca * c};
  }
  const auto jd = match_shell<cplx>(pot, k);
  const cplx ep = std::exp(kI * k * r), em = std::exp(-kI * k * r);
  return {jd.J3 * ep + jd.J4 * em, kI * k * (jd.J3 * ep - jd.J4 * em)};
}

const char* to_string(EigenKind k) {
  switch (k) {
    case EigenKind::Regular: return "regular";
    case EigenKind::LSPlus: return "ls_plus";
    case EigenKind::LSMinus: return "ls_minus";
    case EigenKind::Free: return "free";
    case EigenKind::BarrierLeftPlus: return "barrier_l_plus";
    case EigenKind::BarrierRightPlus: return "barrier_r_plus";
    case EigenKind::BarrierLeftMinus: return "barrier_l_minus";
    case EigenKind::BarrierRightMinus: return "barrier_r_minus";
  }
  return "?";
}

Eigenfunction regular_eigenfunction(const ShellPotential& pot, const SurfacePoint& p) {
  require_nonzero_momentum(p, "regular_eigenfunction");
  const cplx k = p.k();
  const auto jd = match_shell<cplx>(pot, k);
  Envelope env{std::log(std::abs(jd.J3) + std::abs(jd.J4)), std::abs(k.imag()), pot.b};
  return Eigenfunction(
      EigenKind::Regular, p, [pot, k, jd](double r) { return evaluate_regular(pot, k, jd, r); },
      env);
}

Eigenfunction ls_eigenfunction(const ShellPotential& pot, const SurfacePoint& p, Sign sign) {
  require_nonzero_momentum(p, "ls_eigenfunction");
  const cplx k = p.k();
  const auto jd = match_shell<cplx>(pot, k);
  const cplx J = jd.jost(sign);
  if (std::abs(J) < kJostZeroThreshold)
    throw PoleAtRequestedPoint("J" + std::string(sign == Sign::Plus ? "+" : "-") +
                               " vanishes at the requested point (|J| = " +
                               std::to_string(std::abs(J)) + ")");
  const cplx scale = delta_prefactor(k) / J;
  Envelope env{std::log(std::abs(scale) * (std::abs(jd.J3) + std::abs(jd.J4))),
               std::abs(k.imag()), pot.b};
  return Eigenfunction(sign == Sign::Plus ? EigenKind::LSPlus : EigenKind::LSMinus, p,
                       [pot, k, jd, scale](double r) {
                         return scale * evaluate_regular(pot, k, jd, r);
                       },
                       env);
}

Eigenfunction free_eigenfunction(const SurfacePoint& p) {
  require_nonzero_momentum(p, "free_eigenfunction");
  const cplx k = p.k();
  const cplx scale = delta_prefactor(k);
  // |sin(k r)| <= cosh(Im k r) <= exp(|Im k| r)
  Envelope env{std::log(std::abs(scale)), std::abs(k.imag()), 0.0};
  return Eigenfunction(EigenKind::Free, p,
                       [k, scale](double r) { return scale * std::sin(k * r); }, env);
}

BarrierAmplitudes barrier_amplitudes(const BarrierPotential& pot, cplx k, Side side) {
  if (k == cplx(0.0, 0.0)) throw PreconditionError("barrier amplitudes undefined at k = 0");
  using Mat2 = Eigen::Matrix2cd;
  using Vec2 = Eigen::Vector2cd;
  const cplx kap = std::sqrt(k * k - pot.V0);

  // columns: (exp(i q x), exp(-i q x)) and their derivatives at x
  auto plane = [](cplx q, double x) {
    Mat2 M;
    const cplx ep = std::exp(kI * q * x), em = std::exp(-kI * q * x);
    M << ep, em, kI * q * ep, -kI * q * em;
    return M;
  };
  auto solve = [](const Mat2& M, const Vec2& rhs, const char* where) {
    detail::check_determinant(M.determinant(), where);
    return Vec2(M.inverse() * rhs);
  };

  BarrierAmplitudes out;
  if (side == Side::Left) {
    // unit transmission on the right, carried back to the left region
    const Vec2 right = plane(k, pot.b) * Vec2(1.0, 0.0);
    const Vec2 inner = solve(plane(kap, pot.b), right, "b");
    const Vec2 left = solve(plane(k, pot.a), plane(kap, pot.a) * inner, "a");
    const cplx incident = left(0);
    out.denominator = incident;
    out.reflected = left(1) / incident;
    out.transmitted = 1.0 / incident;
    out.inner_plus = inner(0) / incident;
    out.inner_minus = inner(1) / incident;
  } else {
    const Vec2 left = plane(k, pot.a) * Vec2(0.0, 1.0);
    const Vec2 inner = solve(plane(kap, pot.a), left, "a");
    const Vec2 right = solve(plane(k, pot.b), plane(kap, pot.b) * inner, "b");
    const cplx incident = right(1);
    out.denominator = incident;
    out.reflected = right(0) / incident;
    out.transmitted = 1.0 / incident;
    out.inner_plus = inner(0) / incident;
    out.inner_minus = inner(1) / incident;
  }
  return out;
}

namespace {

cplx barrier_plus_value(const BarrierPotential& pot, cplx k, cplx kap,
                        const BarrierAmplitudes& amp, Side side, double x) {
  const cplx pref = 1.0 / std::sqrt(4.0 * std::numbers::pi * k);
  if (x > pot.a && x < pot.b)
    return pref * (amp.inner_plus * std::exp(kI * kap * x) + amp.inner_minus * std::exp(-kI * kap * x));
  if (side == Side::Left) {
    if (x <= pot.a) return pref * (std::exp(kI * k * x) + amp.reflected * std::exp(-kI * k * x));
    return pref * amp.transmitted * std::exp(kI * k * x);
  }
  if (x >= pot.b) return pref * (std::exp(-kI * k * x) + amp.reflected * std::exp(kI * k * x));
  return pref * amp.transmitted * std::exp(-kI * k * x);
}

}  // namespace

Eigenfunction barrier_eigenfunction(const BarrierPotential& pot, const SurfacePoint& p,
                                    Side side, Sign sign) {
  require_nonzero_momentum(p, "barrier_eigenfunction");
  const cplx k = sign == Sign::Plus ? p.k() : std::conj(p.k());
  const auto amp = barrier_amplitudes(pot, k, side);
  if (std::abs(amp.denominator) < kJostZeroThreshold)
    throw PoleAtRequestedPoint("transmission denominator vanishes at the requested point");
  const cplx kap = std::sqrt(k * k - pot.V0);

  const double growth = std::abs(k.imag());
  const double amp_max = 1.0 + std::max({std::abs(amp.reflected), std::abs(amp.transmitted)});
  Envelope env{std::log(amp_max / std::sqrt(4.0 * std::numbers::pi * std::abs(k))), growth,
               std::max(std::abs(pot.a), std::abs(pot.b))};

  EigenKind kind;
  if (side == Side::Left)
    kind = sign == Sign::Plus ? EigenKind::BarrierLeftPlus : EigenKind::BarrierLeftMinus;
  else
    kind = sign == Sign::Plus ? EigenKind::BarrierRightPlus : EigenKind::BarrierRightMinus;

  if (sign == Sign::Plus)
    return Eigenfunction(kind, p, [=](double x) { return barrier_plus_value(pot, k, kap, amp, side, x); }, env);
  return Eigenfunction(kind, p, [=](double x) {
    return std::conj(barrier_plus_value(pot, k, kap, amp, side, x));
  }, env);
}

}  // namespace jostlab
