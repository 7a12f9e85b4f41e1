#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jostlab/surface.hpp"

namespace jostlab {

enum class ScanVerdict { GrowsExponentially, DecaysToZero, Inconclusive };
enum class HardyVerdict { ConsistentWithHardy, NotHardy, Inconclusive };
enum class GrowthModel { LinearInImSqrt, PowerBgs };

const char* to_string(ScanVerdict v);
const char* to_string(HardyVerdict v);
const char* to_string(GrowthModel m);

inline constexpr double kDecayTolerance = 1e-8;
inline constexpr double kMaxFitResidual = 0.2;

//! A sample dropped from a scan because fhat could not be evaluated there.
struct SkippedSample {
  double radius;
  double angle;
  std::string reason;
};

struct ArcScanReport {
  std::vector<double> radii;
  std::vector<double> max_modulus;
  std::vector<double> argmax_angles;
  std::vector<double> predictor;  // max |Im k| over the sampled arc
  double fitted_exponent = 0.0;   // slope of log max_modulus against predictor
  double fit_residual = 0.0;      // RMS residual over the range of log max_modulus
  ScanVerdict verdict = ScanVerdict::Inconclusive;
  std::vector<SkippedSample> skipped;
};

struct ScanConfig {
  std::vector<double> radii;
  int samples_per_arc = 33;  // odd counts include theta = -pi/2

  //! R = 5 * 2^j, j = 0..j_max.
  static ScanConfig ladder(int j_max = 5, int samples_per_arc = 33);
};

//! Angles theta_j = -pi + pi (j + 1/2) / n, the midpoints of n equal cuts of (-pi, 0).
std::vector<double> arc_angles(int samples_per_arc);

//! Max |fhat| over k = R e^{i theta}, theta in (-pi, 0), for every R.
/*! Samples where fhat throws a NumericalError or returns a non-finite
    value are recorded in `skipped`. Verdict: GrowsExponentially when the
    max modulus increases strictly, the linear fit over the window (all but
    the smallest radius) has positive slope, normalized residual <= 0.2 and
    a total log growth >= 1; DecaysToZero when the max modulus is below 1e-8
    at the two largest radii; Inconclusive otherwise. */
ArcScanReport arc_scan(const std::function<cplx(const SurfacePoint&)>& fhat, const ScanConfig& cfg);

struct GrowthFit {
  double coefficient = 0.0;  // A for the linear model, kappa in log M ~ kappa x^b for the power model
  double exponent = 1.0;     // b (1 for the linear model)
  double beta = 0.0;         // kappa * b, the strength in exp(beta x^b / b)
  double residual = 0.0;     // RMS residual over the range of log M
  GrowthModel model = GrowthModel::LinearInImSqrt;
  std::vector<double> terms; // linear: weights of [1, x, sqrt x, log x]; power: [c, kappa]

  //! Fitted log M at predictor x.
  double predict_log(double x) const;
};

//! Least-squares growth fit of log max_modulus against the predictor x.
/*! Linear: log M = c + A x + s sqrt(x) + g log x, the sqrt and log terms
    absorbing the sub-exponential corrections of smooth compact inputs
    (fewer terms on short windows). Power: log M = c + kappa x^b.
    The window drops the smallest radius. Needs >= 4 radii; throws
    IllConditionedFit when the residual exceeds 20% of the data range. */
GrowthFit fit_growth(const ArcScanReport& report, GrowthModel model);

struct HardyReport {
  HardyVerdict verdict;
  ArcScanReport evidence;
};

//! NotHardy iff the scan grows exponentially, ConsistentWithHardy iff it decays.
HardyReport hardy_verdict(const std::function<cplx(const SurfacePoint&)>& fhat, const ScanConfig& cfg);

}  // namespace jostlab
