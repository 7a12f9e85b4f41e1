#include "jostlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "jostlab/errors.hpp"

namespace jostlab {

namespace {

constexpr double kLogEps = -36.841361487904734;  // log(1e-16)
constexpr double kLogOverflow = 700.0;
constexpr double kMaxRadius = 1e6;
constexpr int kCutRefinements = 8;

using Integrand = std::function<cplx(double)>;
using LogBound = std::function<double(double)>;

// A bound on the integrand that is concave in r on [start, inf), as for
// every certified family times an exponential kernel envelope.
struct Certificate {
  LogBound g;
  double start;
};

// First r past the peak of g (g is concave, so g decreasing from there on).
double past_peak(const Certificate& c, double& peak) {
  double r = std::max(c.start, 0.5);
  double gr = c.g(r);
  peak = std::max(gr, c.g(c.start));
  for (;;) {
    const double r2 = 2.0 * r;
    const double g2 = c.g(r2);
    peak = std::max(peak, g2);
    if (g2 < gr) return r2;
    if (r2 > kMaxRadius)
      throw DivergentIntegrand("decay certificate does not dominate the kernel growth");
    r = r2;
    gr = g2;
  }
}

// Smallest r >= from (on the decreasing branch) with g(r) <= target.
double cut_at(const Certificate& c, double from, double target) {
  if (c.g(from) <= target) return from;
  double lo = from, hi = from;
  while (c.g(hi) > target) {
    lo = hi;
    hi *= 1.5;
    if (hi > kMaxRadius)
      throw DivergentIntegrand("integrand does not fall below 1e-16 of the value at finite r");
  }
  for (int i = 0; i < 60 && hi - lo > 1e-9 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (c.g(mid) > target ? lo : hi) = mid;
  }
  return hi;
}

// Tail bound of the integral of exp(g) beyond R for concave decreasing g.
double tail_bound(const Certificate& c, double R) {
  const double h = 1e-3 * std::max(1.0, R);
  const double slope = (c.g(R + h) - c.g(R)) / h;
  const double gR = c.g(R);
  if (!(slope < 0.0)) return std::exp(gR) * R;
  return std::exp(gR) / -slope;
}

// Integral of f over [lo, inf) with the range cut by the certificate.
TransformResult certified(const Integrand& f, double lo, const Certificate& cert, double omega,
                          std::vector<double> breaks, const QuadratureConfig& cfg) {
  double peak = 0.0;
  const double beyond = past_peak(cert, peak);
  if (peak > kLogOverflow)
    throw DivergentIntegrand("integrand envelope exceeds the double range (log peak " +
                             std::to_string(peak) + ")");
  if (peak == -std::numeric_limits<double>::infinity()) return {0.0, 0.0, lo, false};

  double R = cut_at(cert, beyond, kLogEps + peak);
  auto res = integrate(f, lo, R, cfg, omega, breaks);
  for (int it = 0; it < kCutRefinements; ++it) {
    const double mag = std::abs(res.value);
    if (mag == 0.0) break;
    const double target = kLogEps + std::log(mag);
    if (cert.g(R) <= target) break;
    const double R2 = cut_at(cert, R, target);
    const auto more = integrate(f, R, R2, cfg, omega, breaks);
    res.value += more.value;
    res.abs_error += more.abs_error;
    R = R2;
  }
  return {res.value, res.abs_error + tail_bound(cert, R), R, false};
}

void require_position_space(const TestFunction& f) {
  if (f.family() == Family::HardyRational)
    throw DivergentIntegrand("a Hardy rational input has no position-space decay certificate");
}

TransformResult half_line(const TestFunction& f, const Eigenfunction& ef, double omega,
                          std::vector<double> breaks, const QuadratureConfig& cfg) {
  cfg.validate();
  require_position_space(f);
  if (f.domain() != Domain::HalfLine)
    throw PreconditionError("radial transforms need a HalfLine test function");

  // literal kernel conj(chi(r; conj z)); ef is built at the conjugate point
  const Integrand integrand = [&](double r) {
    const double fr = f(r);
    if (fr == 0.0) return cplx(0.0, 0.0);
    const cplx v = std::conj(ef(r)) * fr;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DivergentIntegrand("kernel exceeds the double range at r = " + std::to_string(r));
    return v;
  };

  if (auto s = f.support()) {
    const double lo = std::max(0.0, s->first), hi = std::max(0.0, s->second);
    const auto res = integrate(integrand, lo, hi, cfg, omega, breaks);
    return {res.value, res.abs_error, hi, true};
  }
  const Envelope env = ef.envelope();
  Certificate cert{[&](double r) { return env.log_scale + env.rate * r + f.log_envelope(r); },
                   env.valid_from};
  return certified(integrand, 0.0, cert, omega, std::move(breaks), cfg);
}

// integral over [0, inf) of h with the tail past x_max fitted as c x^{-p}.
// With `strict` unset a density whose blocks do not decay cleanly (sign
// changes, no decay) gets no tail and an error of one block instead.
NormResult power_tail(const std::function<double(double)>& h, double x_max,
                      const QuadratureConfig& cfg, bool strict = true) {
  // geometric blocks [x_max / s^{j+1}, x_max / s^j], kept close to x_max so
  // that the fit only sees the asymptotic regime
  const double s = std::numbers::sqrt2;
  const Integrand hc = [&](double x) { return cplx(h(x), 0.0); };
  const double q1 = x_max / (s * s * s), q2 = x_max / (s * s), q3 = x_max / s;
  const double body = integrate(hc, 0.0, q1, cfg).value.real();
  // below this density the blocks are rounding noise of h itself
  QuadratureConfig bcfg = cfg;
  bcfg.abs_tol = std::max(cfg.abs_tol, 1e-18 * std::abs(body) / x_max);
  const double b1 = integrate(hc, q1, q2, bcfg).value.real();
  const double b2 = integrate(hc, q2, q3, bcfg).value.real();
  const double b3 = integrate(hc, q3, x_max, bcfg).value.real();
  const double total = body + b1 + b2 + b3;

  NormResult out;
  out.value = total;
  if (std::abs(b3) <= 1e-17 * std::abs(total) || std::abs(b3) < 1e-300) return out;

  // blocks of a power law c x^{-p} shrink by s^{p-1}
  const double rho = b2 / b3, rho_prev = b1 / b2;
  if (!(rho > 1.0 + 1e-3 && rho_prev > 1.0 + 1e-3)) {
    if (strict)
      throw TailNotControlled("spectral density does not decay fast enough to extrapolate the tail");
    out.abs_error = std::abs(b3);
    return out;
  }
  const double v_full = total + b3 / (rho - 1.0);
  const double v_prev = total - b3 + b2 / (rho_prev - 1.0);
  // a relative x^{-2} correction to the power law leaves an error ~ x_max^{-(p+1)}
  const double correction = (v_full - v_prev) / (rho * s * s - 1.0);
  out.value = v_full + correction;
  out.tail = out.value - total;
  out.abs_error = std::abs(correction);
  return out;
}

}  // namespace

TransformResult transform_free(const TestFunction& f, const SurfacePoint& p,
                               const QuadratureConfig& cfg) {
  const auto ef = free_eigenfunction(p.conjugate());
  return half_line(f, ef, 2.0 * std::abs(p.k().real()), {}, cfg);
}

TransformResult transform_ls(const ShellPotential& pot, const TestFunction& f,
                             const SurfacePoint& p, Sign sign, const QuadratureConfig& cfg) {
  const auto ef = ls_eigenfunction(pot, p.conjugate(), sign);
  return half_line(f, ef, 2.0 * std::abs(p.k().real()), {pot.a, pot.b}, cfg);
}

TransformResult fourier_line(const TestFunction& f, cplx q, Sign sign, const QuadratureConfig& cfg) {
  cfg.validate();
  require_position_space(f);
  if (f.domain() != Domain::FullLine)
    throw PreconditionError("the line Fourier transform needs a FullLine test function");

  const cplx phase = (sign == Sign::Minus ? -1.0 : 1.0) * cplx(0.0, 1.0) * q;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double sgn = f.params().amplitude < 0.0 ? -1.0 : 1.0;
  const Integrand integrand = [&](double x) {
    return sgn * std::exp(phase * x + std::log(norm) + f.log_abs(x));
  };
  const double omega = 2.0 * std::abs(q.real());

  if (auto s = f.support()) {
    const auto res = integrate(integrand, s->first, s->second, cfg, omega);
    return {res.value, res.abs_error, std::max(std::abs(s->first), std::abs(s->second)), true};
  }

  // even envelope: run the certificate on each half-line
  const double rate = std::abs(q.imag());
  Certificate cert{[&](double x) { return std::log(norm) + rate * x + f.log_envelope(x); }, 0.0};
  const auto right = certified(integrand, 0.0, cert, omega, {}, cfg);
  const Integrand mirrored = [&](double x) { return integrand(-x); };
  Certificate cert_left{[&](double x) { return std::log(norm) + rate * x + f.log_envelope(-x); },
                        0.0};
  const auto left = certified(mirrored, 0.0, cert_left, omega, {}, cfg);
  return {right.value + left.value, right.abs_error_estimate + left.abs_error_estimate,
          std::max(right.truncation_radius, left.truncation_radius), false};
}

cplx wavefun_E_to_k(cplx phi_E, cplx k) {
  if (k == cplx(0.0, 0.0)) throw PreconditionError("the k <-> E Jacobian is singular at k = 0");
  return std::sqrt(2.0 * k) * phi_E;
}

cplx wavefun_k_to_E(cplx phi_k, cplx k) {
  if (k == cplx(0.0, 0.0)) throw PreconditionError("the k <-> E Jacobian is singular at k = 0");
  return phi_k / std::sqrt(2.0 * k);
}

cplx combine_left_right(double k, const std::function<cplx(double)>& left,
                        const std::function<cplx(double)>& right) {
  return k >= 0.0 ? left(k) : right(-k);
}

NormResult energy_norm_squared(const std::function<cplx(double)>& fhat, double k_max,
                               const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(k_max > 0.0)) throw PreconditionError("energy_norm_squared needs k_max > 0");
  return power_tail([&](double k) { return 2.0 * k * std::norm(fhat(k * k)); }, k_max, cfg);
}

NormResult energy_norm_squared(const std::function<cplx(double)>& fhat, const NormControl& control,
                               double k_max, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(k_max > 0.0)) throw PreconditionError("energy_norm_squared needs k_max > 0");
  // the difference is orders of magnitude below either density; asking for
  // rel_tol on it would chase the rounding noise of the inner transforms
  QuadratureConfig dcfg = cfg;
  dcfg.rel_tol = std::min(1e-4, cfg.rel_tol * 1e4);
  const auto diff = power_tail(
      [&](double k) {
        const double E = k * k;
        return 2.0 * k * (std::norm(fhat(E)) - std::norm(control.fhat(E)));
      },
      k_max, dcfg, false);
  return {control.norm.value + diff.value, control.norm.tail + diff.tail,
          control.norm.abs_error + diff.abs_error};
}

NormResult line_norm_squared(const std::function<cplx(double)>& g, double q_max,
                             const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(q_max > 0.0)) throw PreconditionError("line_norm_squared needs q_max > 0");
  const auto right = power_tail([&](double q) { return std::norm(g(q)); }, q_max, cfg);
  const auto left = power_tail([&](double q) { return std::norm(g(-q)); }, q_max, cfg);
  return {right.value + left.value, right.tail + left.tail, right.abs_error + left.abs_error};
}

double position_norm_squared(const TestFunction& f, const QuadratureConfig& cfg) {
  cfg.validate();
  require_position_space(f);
  const Integrand sq = [&](double x) { return cplx(f(x) * f(x), 0.0); };
  const double lo_dom = f.domain() == Domain::HalfLine ? 0.0 : -std::numeric_limits<double>::infinity();
  if (auto s = f.support()) {
    const double lo = std::max(lo_dom, s->first);
    return s->second > lo ? integrate(sq, lo, s->second, cfg).value.real() : 0.0;
  }
  Certificate cert{[&](double x) { return 2.0 * f.log_envelope(x); }, 0.0};
  double total = certified(sq, 0.0, cert, 0.0, {}, cfg).value.real();
  if (f.domain() == Domain::FullLine) {
    const Integrand mirrored = [&](double x) { return sq(-x); };
    Certificate cl{[&](double x) { return 2.0 * f.log_envelope(-x); }, 0.0};
    total += certified(mirrored, 0.0, cl, 0.0, {}, cfg).value.real();
  }
  return total;
}

}  // namespace jostlab
