#pragma once

// Independent reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

#include "jostlab/potentials.hpp"

namespace oracle {

using cplx = std::complex<double>;
constexpr cplx I(0.0, 1.0);

//! Classical RK4 for -u'' + V u = k^2 u, u(0) = 0, u'(0) = k, integrated to r.
/// Steps land exactly on a and b so the jump of V never sits inside a step.
inline std::pair<cplx, cplx> rk4_regular(const jostlab::ShellPotential& pot, cplx k, double r,
                                         int steps_per_unit = 20000) {
  const cplx z = k * k;
  cplx u = 0.0, du = k;
  auto advance = [&](double lo, double hi, double V) {
    if (hi <= lo) return;
    const int n = std::max(1, static_cast<int>(std::ceil((hi - lo) * steps_per_unit)));
    const double h = (hi - lo) / n;
    auto f = [&](cplx y, cplx dy) { return std::pair<cplx, cplx>(dy, (V - z) * y); };
    for (int i = 0; i < n; ++i) {
      const auto [a1, b1] = f(u, du);
      const auto [a2, b2] = f(u + 0.5 * h * a1, du + 0.5 * h * b1);
      const auto [a3, b3] = f(u + 0.5 * h * a2, du + 0.5 * h * b2);
      const auto [a4, b4] = f(u + h * a3, du + h * b3);
      u += h / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
      du += h / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
    }
  };
  advance(0.0, std::min(r, pot.a), 0.0);
  advance(pot.a, std::min(r, pot.b), pot.V0);
  advance(pot.b, r, 0.0);
  return {u, du};
}

//! u and u' at r = b by propagating through the shell with cos(kappa x) and
//! sin(kappa x)/kappa, both even in kappa, so no branch choice enters.
inline std::pair<cplx, cplx> propagate(const jostlab::ShellPotential& pot, cplx k) {
  const cplx ua = std::sin(k * pot.a), dua = k * std::cos(k * pot.a);
  const cplx kappa = std::sqrt(k * k - pot.V0);
  const double d = pot.b - pot.a;
  const cplx c = std::cos(kappa * d);
  const cplx s = std::abs(kappa) < 1e-12 ? cplx(d) : std::sin(kappa * d) / kappa;
  return {ua * c + dua * s, -ua * kappa * kappa * s + dua * c};
}

//! Coefficient of e^{-ikr} beyond b, in the convention J+ = 1 for the free case.
inline cplx jplus(const jostlab::ShellPotential& pot, cplx k) {
  const auto [u, du] = propagate(pot, k);
  return -(I * k * u - du) * std::exp(I * k * pot.b) / k;
}

inline cplx jminus(const jostlab::ShellPotential& pot, cplx k) {
  const auto [u, du] = propagate(pot, k);
  return (I * k * u + du) * std::exp(-I * k * pot.b) / k;
}

//! Winding number of f around the rectangle by tracking the argument along
//! the edges, refining any step whose phase jump exceeds pi/8.
inline int winding(const std::function<cplx(cplx)>& f, double re0, double re1, double im0, double im1) {
  const cplx corners[5] = {{re0, im0}, {re1, im0}, {re1, im1}, {re0, im1}, {re0, im0}};
  double total = 0.0;
  std::function<void(cplx, cplx, cplx, cplx, int)> edge = [&](cplx a, cplx b, cplx fa, cplx fb, int depth) {
    const double d = std::arg(fb / fa);
    if (std::abs(d) > std::numbers::pi / 8 && depth < 40) {
      const cplx m = 0.5 * (a + b), fm = f(m);
      edge(a, m, fa, fm, depth + 1);
      edge(m, b, fm, fb, depth + 1);
    } else {
      total += d;
    }
  };
  for (int e = 0; e < 4; ++e) {
    const int n = 256;
    cplx prev = corners[e], fprev = f(prev);
    for (int i = 1; i <= n; ++i) {
      const cplx next = corners[e] + (corners[e + 1] - corners[e]) * (double(i) / n);
      const cplx fnext = f(next);
      edge(prev, next, fprev, fnext, 0);
      prev = next;
      fprev = fnext;
    }
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

//! Secant iteration on f from two nearby seeds.
inline cplx secant(const std::function<cplx(cplx)>& f, cplx x0, cplx x1) {
  cplx f0 = f(x0), f1 = f(x1);
  for (int it = 0; it < 100 && f1 != f0; ++it) {
    const cplx x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f(x1);
    if (std::abs(x1 - x0) < 1e-15 * std::abs(x1)) break;
  }
  return x1;
}

//! Zeros of f in the rectangle by recursive bisection of the winding number.
inline void bisect_zeros(const std::function<cplx(cplx)>& f, double re0, double re1, double im0, double im1,
                         std::vector<cplx>& out, int depth = 0) {
  const int n = winding(f, re0, re1, im0, im1);
  if (n == 0) return;
  const double w = re1 - re0, h = im1 - im0;
  if ((n == 1 && std::max(w, h) < 1e-3) || depth > 60) {
    const cplx c(0.5 * (re0 + re1), 0.5 * (im0 + im1));
    out.push_back(secant(f, c, c + cplx(1e-5, 1e-5)));
    return;
  }
  // cut a little off centre so the new edge is unlikely to meet a zero
  if (w >= h) {
    const double m = re0 + 0.4871 * w;
    bisect_zeros(f, re0, m, im0, im1, out, depth + 1);
    bisect_zeros(f, m, re1, im0, im1, out, depth + 1);
  } else {
    const double m = im0 + 0.4871 * h;
    bisect_zeros(f, re0, re1, im0, m, out, depth + 1);
    bisect_zeros(f, re0, re1, m, im1, out, depth + 1);
  }
}

//! Composite Simpson rule on a uniform grid, for smooth real integrands.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n % 2) ++n;
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return s * h / 3.0;
}

}  // namespace oracle
