#include "jostlab/qat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jostlab/errors.hpp"

namespace jostlab {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr double kTailTolerance = 1e-6;

struct Piece {
  cplx value;
  double error;
  double l1;
};

// integral of e^{-iEt} g(E) over [M, inf), g smooth and decaying
Piece ibp_tail(const std::function<cplx(double)>& g, double M, double t) {
  const double h = 1e-3 * M;
  const cplx g0 = g(M);
  const cplx gp = g(M + h), gm = g(M - h);
  const cplx g1 = (gp - gm) / (2.0 * h);
  const cplx g2 = (gp - 2.0 * g0 + gm) / (h * h);
  if (t == 0.0) {
    // power-law tail c E^{-p}
    const double a = std::abs(g0), b = std::abs(g(2.0 * M)), c = std::abs(g(4.0 * M));
    if (a == 0.0) return {0.0, 0.0, 0.0};
    const double p = std::log2(a / b), p2 = std::log2(b / c);
    if (!(p > 1.0 && p2 > 1.0)) return {0.0, INFINITY, 0.0};
    const cplx tail = g0 * M / (p - 1.0);
    return {tail, std::abs(tail - g0 * M / (p2 - 1.0)) + std::abs(tail) * std::abs(p - p2), 0.0};
  }
  const cplx it = kI * t;
  // three integrations by parts; the remainder is bounded by |g''(M)| / |t|^3
  const cplx v = std::exp(-it * M) * (g0 / it + g1 / (it * it) + g2 / (it * it * it));
  return {v, std::abs(g2) / std::pow(std::abs(t), 3), 0.0};
}

// integral of e^{-iEt} / (E - z) over [M, inf), t != 0
cplx pole_tail(cplx z, double M, double t) {
  return std::exp(-kI * z * t) * expint_e1(kI * t * (M - z));
}

Piece window(const std::function<cplx(double)>& f, double lo, double hi, double t,
             const std::vector<double>& breaks, const QuadratureConfig& cfg) {
  const auto r = integrate([&](double E) { return std::exp(-kI * E * t) * f(E); }, lo, hi, cfg,
                           std::abs(t), breaks);
  return {r.value, r.abs_error, r.l1_norm};
}

TimeSignal run(const std::function<cplx(double)>& f, const std::vector<Pole>* poles,
               const std::vector<double>& t_grid, const TimeSignalConfig& cfg) {
  cfg.quad.validate();
  if (!(cfg.E_max > 0.0)) throw PreconditionError("time signal needs E_max > 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1])) throw PreconditionError("time grid must be strictly increasing");

  const double M = cfg.E_max;
  const double lo = cfg.half_line ? 0.0 : -M;
  std::vector<double> breaks;
  if (poles)
    for (const auto& p : *poles) breaks.push_back(p.z.real());

  TimeSignal sig;
  sig.t_grid = t_grid;
  for (double t : t_grid) {
    const Piece body = window(f, lo, M, t, breaks, cfg.quad);
    Piece tail{0.0, 0.0, 0.0};
    if (poles) {
      for (const auto& p : *poles) {
        if (t == 0.0) {
          if (cfg.half_line) {
            tail.error = INFINITY;  // logarithmic divergence
            continue;
          }
          tail.value += p.residue * std::log((M + p.z) / (M - p.z));
        } else {
          tail.value += p.residue * pole_tail(p.z, M, t);
          if (!cfg.half_line) tail.value -= p.residue * pole_tail(-p.z, M, -t);
        }
      }
    } else {
      const Piece up = ibp_tail(f, M, t);
      tail = up;
      if (!cfg.half_line) {
        const Piece down = ibp_tail([&](double E) { return f(-E); }, M, -t);
        tail.value += down.value;
        tail.error += down.error;
      }
    }
    const cplx value = body.value + tail.value;
    const double scale = std::max(std::abs(value), body.l1);
    if (!(tail.error <= kTailTolerance * scale))
      throw TailNotControlled("time-signal tail at t = " + std::to_string(t) +
                              " is not controlled (error " + std::to_string(tail.error) + ")");
    sig.values.push_back(value);
    sig.errors.push_back(body.error + tail.error);
    sig.quadrature_error = std::max(sig.quadrature_error, body.error + tail.error);
  }
  return sig;
}

}  // namespace

SpectralFunction SpectralFunction::rational(std::vector<Pole> poles) {
  for (const auto& p : poles)
    if (p.z.imag() == 0.0) throw PoleOnRealAxis("a rational energy function needs poles off the real axis");
  SpectralFunction s;
  s.rational_ = true;
  s.poles_ = std::move(poles);
  return s;
}

SpectralFunction SpectralFunction::generic(std::function<cplx(double)> f) {
  SpectralFunction s;
  s.f_ = std::move(f);
  return s;
}

SpectralFunction SpectralFunction::from(const TestFunction& f) {
  if (f.family() != Family::HardyRational)
    throw PreconditionError("only Hardy rational test functions have a closed energy form");
  return rational({{f.params().z0, cplx(f.params().amplitude, 0.0)}});
}

cplx SpectralFunction::operator()(double E) const {
  if (!rational_) return f_(E);
  cplx s = 0.0;
  for (const auto& p : poles_) s += p.residue / (E - p.z);
  return s;
}

TimeSignal time_signal(const SpectralFunction& fhat, const std::vector<double>& t_grid,
                       const TimeSignalConfig& cfg) {
  const auto f = [&](double E) { return fhat(E); };
  return run(f, fhat.is_rational() ? &fhat.poles() : nullptr, t_grid, cfg);
}

cplx residue_oracle(const std::vector<Pole>& poles, double t) {
  cplx below = 0.0, above = 0.0;
  for (const auto& p : poles) {
    if (p.z.imag() == 0.0) throw PoleOnRealAxis("residue oracle needs poles off the real axis");
    const cplx term = p.residue * std::exp(-kI * p.z * t);
    (p.z.imag() < 0.0 ? below : above) += term;
  }
  const cplx lower = -2.0 * std::numbers::pi * kI * below;  // contour closed below
  const cplx upper = 2.0 * std::numbers::pi * kI * above;   // contour closed above
  if (t > 0.0) return lower;
  if (t < 0.0) return upper;
  return 0.5 * (lower + upper);
}

TimeSignal spectral_evolution(const SpectralFunction& fhat, const std::vector<double>& t_grid,
                              const TimeSignalConfig& cfg) {
  TimeSignalConfig half = cfg;
  half.half_line = true;
  const auto g = [&](double E) { return cplx(std::norm(fhat(E)), 0.0); };
  return run(g, nullptr, t_grid, half);
}

cplx expint_e1(cplx s) {
  if (s == cplx(0.0, 0.0)) throw PreconditionError("E1 is singular at 0");
  if (std::abs(s) <= 2.0) {
    // -gamma - log s - sum (-s)^n / (n n!)
    cplx sum = 0.0, term = 1.0;
    for (int n = 1; n < 200; ++n) {
      term *= -s / double(n);
      const cplx add = term / double(n);
      sum += add;
      if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return -std::numbers::egamma - std::log(s) - sum;
  }
  // continued fraction e^{-s} / (s + 1 - 1/(s + 3 - 4/(s + 5 - ...))), modified Lentz
  const double tiny = 1e-300;
  cplx b = s + 1.0;
  cplx c = 1.0 / tiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < 100000; ++i) {
    const double a = -double(i) * double(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-s);
}

}  // namespace jostlab
