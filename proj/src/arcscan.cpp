#include "jostlab/arcscan.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jostlab/errors.hpp"

namespace jostlab {

const char* to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::GrowsExponentially: return "grows_exponentially";
    case ScanVerdict::DecaysToZero: return "decays_to_zero";
    case ScanVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(HardyVerdict v) {
  switch (v) {
    case HardyVerdict::ConsistentWithHardy: return "consistent_with_hardy";
    case HardyVerdict::NotHardy: return "not_hardy";
    case HardyVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(GrowthModel m) {
  return m == GrowthModel::LinearInImSqrt ? "linear" : "power";
}

ScanConfig ScanConfig::ladder(int j_max, int samples_per_arc) {
  ScanConfig c;
  for (int j = 0; j <= j_max; ++j) c.radii.push_back(5.0 * std::ldexp(1.0, j));
  c.samples_per_arc = samples_per_arc;
  return c;
}

std::vector<double> arc_angles(int n) {
  if (n < 1) throw PreconditionError("an arc needs at least one sample");
  std::vector<double> th(n);
  for (int j = 0; j < n; ++j) th[j] = -std::numbers::pi + std::numbers::pi * (j + 0.5) / n;
  return th;
}

namespace {

struct LinearFit {
  Eigen::VectorXd coef;
  double residual;  // RMS / range
};

LinearFit least_squares(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  LinearFit f;
  f.coef = X.colPivHouseholderQr().solve(y);
  const double rms = std::sqrt((X * f.coef - y).squaredNorm() / double(y.size()));
  const double range = y.maxCoeff() - y.minCoeff();
  f.residual = range > 0.0 ? rms / range : (rms == 0.0 ? 0.0 : INFINITY);
  return f;
}

// window: every radius but the smallest
void window(const ArcScanReport& r, Eigen::VectorXd& x, Eigen::VectorXd& y) {
  const Eigen::Index n = static_cast<Eigen::Index>(r.radii.size()) - 1;
  x.resize(n);
  y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) = r.predictor[i + 1];
    y(i) = std::log(r.max_modulus[i + 1]);
  }
}

LinearFit fit_linear(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int terms) {
  Eigen::MatrixXd X(x.size(), terms);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double row[4] = {1.0, x(i), std::sqrt(x(i)), std::log(x(i))};
    for (int j = 0; j < terms; ++j) X(i, j) = row[j];
  }
  return least_squares(X, y);
}

LinearFit fit_power(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double b) {
  Eigen::MatrixXd X(x.size(), 2);
  X.col(0).setOnes();
  X.col(1) = x.array().pow(b).matrix();
  return least_squares(X, y);
}

}  // namespace

ArcScanReport arc_scan(const std::function<cplx(const SurfacePoint&)>& fhat, const ScanConfig& cfg) {
  if (cfg.radii.empty()) throw PreconditionError("arc_scan needs at least one radius");
  for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
    if (!(cfg.radii[i] > 0.0)) throw PreconditionError("scan radii must be positive");
    if (i > 0 && !(cfg.radii[i] > cfg.radii[i - 1]))
      throw PreconditionError("scan radii must be strictly increasing");
  }
  const auto angles = arc_angles(cfg.samples_per_arc);

  ArcScanReport rep;
  for (double R : cfg.radii) {
    double best = -1.0, best_th = 0.0, pred = 0.0;
    for (double th : angles) {
      const auto p = SurfacePoint::from_momentum(std::polar(R, th));
      pred = std::max(pred, std::abs(p.k().imag()));
      try {
        const double m = std::abs(fhat(p));
        if (!std::isfinite(m)) {
          rep.skipped.push_back({R, th, "non-finite value"});
          continue;
        }
        if (m > best) {
          best = m;
          best_th = th;
        }
      } catch (const NumericalError& e) {
        rep.skipped.push_back({R, th, e.what()});
      }
    }
    if (best < 0.0) continue;  // whole arc skipped
    rep.radii.push_back(R);
    rep.max_modulus.push_back(best);
    rep.argmax_angles.push_back(best_th);
    rep.predictor.push_back(pred);
  }

  const std::size_t n = rep.radii.size();
  if (n >= 2 && rep.max_modulus[n - 1] < kDecayTolerance && rep.max_modulus[n - 2] < kDecayTolerance) {
    rep.verdict = ScanVerdict::DecaysToZero;
    return rep;
  }
  if (n < 3) return rep;

  bool increasing = true;
  for (std::size_t i = 1; i < n; ++i) increasing = increasing && rep.max_modulus[i] > rep.max_modulus[i - 1];
  if (std::any_of(rep.max_modulus.begin(), rep.max_modulus.end(), [](double m) { return !(m > 0.0); }))
    return rep;

  Eigen::VectorXd x, y;
  window(rep, x, y);
  const auto lin = fit_linear(x, y, 2);
  rep.fitted_exponent = lin.coef(1);
  rep.fit_residual = lin.residual;
  const double growth = y(y.size() - 1) - y(0);
  if (increasing && lin.coef(1) > 0.0 && lin.residual <= kMaxFitResidual && growth >= 1.0)
    rep.verdict = ScanVerdict::GrowsExponentially;
  return rep;
}

GrowthFit fit_growth(const ArcScanReport& report, GrowthModel model) {
  if (report.radii.size() < 4) throw PreconditionError("fit_growth needs at least 4 radii");
  Eigen::VectorXd x, y;
  window(report, x, y);
  if ((x.array() <= 0.0).any()) throw PreconditionError("growth predictor must be positive");

  GrowthFit g;
  g.model = model;
  if (model == GrowthModel::LinearInImSqrt) {
    const int terms = std::min<int>(4, static_cast<int>(x.size()) - 1);
    const auto f = fit_linear(x, y, std::max(terms, 2));
    g.coefficient = f.coef(1);
    g.exponent = 1.0;
    g.beta = g.coefficient;
    g.residual = f.residual;
    g.terms.assign(f.coef.data(), f.coef.data() + f.coef.size());
  } else {
    // coarse scan of the exponent, then golden-section refinement
    auto rss = [&](double b) { return fit_power(x, y, b).residual; };
    double best_b = 1.05, best_r = rss(best_b);
    for (double b = 1.05; b <= 8.0; b += 0.05) {
      const double r = rss(b);
      if (r < best_r) {
        best_r = r;
        best_b = b;
      }
    }
    double lo = std::max(1.0001, best_b - 0.05), hi = best_b + 0.05;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
    for (int it = 0; it < 80; ++it) {
      if (rss(c) < rss(d)) hi = d; else lo = c;
      c = hi - phi * (hi - lo);
      d = lo + phi * (hi - lo);
    }
    const double b = 0.5 * (lo + hi);
    const auto f = fit_power(x, y, b);
    g.exponent = b;
    g.coefficient = f.coef(1);
    g.beta = g.coefficient * b;
    g.residual = f.residual;
    g.terms = {f.coef(0), f.coef(1)};
  }
  if (!(g.residual <= kMaxFitResidual))
    throw IllConditionedFit("growth fit residual " + std::to_string(g.residual) +
                            " exceeds 20% of the data range");
  return g;
}

double GrowthFit::predict_log(double x) const {
  if (model == GrowthModel::PowerBgs) return terms.at(0) + terms.at(1) * std::pow(x, exponent);
  const double basis[4] = {1.0, x, std::sqrt(x), std::log(x)};
  double y = 0.0;
  for (std::size_t j = 0; j < terms.size() && j < 4; ++j) y += terms[j] * basis[j];
  return y;
}

HardyReport hardy_verdict(const std::function<cplx(const SurfacePoint&)>& fhat, const ScanConfig& cfg) {
  HardyReport h{HardyVerdict::Inconclusive, arc_scan(fhat, cfg)};
  if (h.evidence.verdict == ScanVerdict::GrowsExponentially) h.verdict = HardyVerdict::NotHardy;
  if (h.evidence.verdict == ScanVerdict::DecaysToZero) h.verdict = HardyVerdict::ConsistentWithHardy;
  return h;
}

}  // namespace jostlab
