#include "jostlab/quadrature.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "jostlab/errors.hpp"

namespace jostlab {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-4))
    throw PreconditionError("quadrature rel_tol must lie in (0, 1e-4]");
  if (max_subdivisions <= 0) throw PreconditionError("quadrature max_subdivisions must be positive");
  if (!(abs_tol >= 0.0)) throw PreconditionError("quadrature abs_tol must be non-negative");
}

namespace {

constexpr std::size_t kMaxSegments = 200000;

using GK = boost::math::quadrature::gauss_kronrod<double, 21>;

// Bisection with an absolute floor, which the library rule lacks.
void floored_segment(const std::function<std::complex<double>(double)>& f, double lo, double hi,
                     const QuadratureConfig& cfg, int depth, QuadratureResult& out) {
  double err = 0.0, l1 = 0.0;
  const std::complex<double> v = GK::integrate(f, lo, hi, 0, cfg.rel_tol, &err, &l1);
  if (depth >= cfg.max_subdivisions || err <= cfg.rel_tol * l1 || err <= cfg.abs_tol * (hi - lo)) {
    out.value += v;
    out.abs_error += err;
    out.l1_norm += l1;
    return;
  }
  const double mid = 0.5 * (lo + hi);
  floored_segment(f, lo, mid, cfg, depth + 1, out);
  floored_segment(f, mid, hi, cfg, depth + 1, out);
}

QuadratureResult integrate_segment(const std::function<std::complex<double>(double)>& f,
                                   double lo, double hi, const QuadratureConfig& cfg) {
  QuadratureResult r;
  if (cfg.abs_tol > 0.0) {
    floored_segment(f, lo, hi, cfg, 0, r);
    return r;
  }
  double err = 0.0, l1 = 0.0;
  r.value = GK::integrate(f, lo, hi, static_cast<unsigned>(cfg.max_subdivisions), cfg.rel_tol,
                          &err, &l1);
  r.abs_error = err;
  r.l1_norm = l1;
  return r;
}

}  // namespace

QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double lo,
                           double hi, const QuadratureConfig& cfg, double omega,
                           std::span<const double> breakpoints) {
  QuadratureResult total{0.0, 0.0, 0.0};
  if (!(hi > lo)) return total;

  std::vector<double> cuts{lo, hi};
  for (double b : breakpoints)
    if (b > lo && b < hi) cuts.push_back(b);

  omega = std::abs(omega);
  if (cfg.oscillation_splitting && omega > 0.0) {
    // one full period per segment
    const double period = 2.0 * std::numbers::pi / omega;
    const double n = std::ceil((hi - lo) / period);
    if (n > 1.0) {
      const auto count = static_cast<std::size_t>(std::min(n, double(kMaxSegments)));
      const double h = (hi - lo) / double(count);
      for (std::size_t i = 1; i < count; ++i) cuts.push_back(lo + h * double(i));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto seg = integrate_segment(f, cuts[i], cuts[i + 1], cfg);
    total.value += seg.value;
    total.abs_error += seg.abs_error;
    total.l1_norm += seg.l1_norm;
  }
  return total;
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Jacobi matrix of the Legendre recurrence
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double beta = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = beta;
    J(i - 1, i) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = 2.0 * v0 * v0;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace jostlab
