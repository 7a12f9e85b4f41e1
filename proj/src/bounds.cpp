#include "jostlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jostlab/errors.hpp"

namespace jostlab {

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::RegularSolution: return "regular_solution";
    case BoundKind::LSPlusMinus: return "ls_plus_minus";
    case BoundKind::Free: return "free";
    case BoundKind::Gamow: return "gamow";
    case BoundKind::Sine: return "sine";
    case BoundKind::GelfandShilov: return "gelfand_shilov";
    case BoundKind::PaleyWiener: return "paley_wiener";
  }
  return "?";
}

void BoundSpec::validate() const {
  if (!(C > 0.0 && A > 0.0 && beta > 0.0 && b_gs > 0.0 && jost_abs > 0.0 && rate_scale > 0.0))
    throw PreconditionError("bound constants must be positive");
  if (N < 0) throw PreconditionError("bound polynomial order must be non-negative");
  if (kind == BoundKind::GelfandShilov && !(b_gs > 1.0))
    throw PreconditionError("Gelfand-Shilov growth order needs b_gs > 1");
}

bool BoundSpec::needs_radius() const {
  return kind != BoundKind::GelfandShilov && kind != BoundKind::PaleyWiener;
}

double bound_rhs(const BoundSpec& spec, const SurfacePoint& p, std::optional<double> r) {
  spec.validate();
  const cplx k = p.k();
  const double abs_sqrt_z = std::abs(k);  // |z|^{1/2}
  const double im = std::abs(k.imag());   // |Im sqrt z|, or |Im q|

  if (spec.needs_radius()) {
    if (!r) throw MissingRadius(std::string(to_string(spec.kind)) + " bound needs a radius");
    if (*r < 0.0) throw PreconditionError("bound radius must be non-negative");
    const double x = abs_sqrt_z * *r;
    const double growth = std::exp(spec.rate_scale * im * *r);
    switch (spec.kind) {
      case BoundKind::RegularSolution:
      case BoundKind::Gamow:
      case BoundKind::Sine:
        return spec.C * x / (1.0 + x) * growth;
      case BoundKind::LSPlusMinus:
        return spec.C / spec.jost_abs * std::sqrt(abs_sqrt_z) * *r / (1.0 + x) * growth;
      case BoundKind::Free:
        return spec.C * std::sqrt(abs_sqrt_z) * *r / (1.0 + x) * growth;
      default:
        break;
    }
  }
  if (spec.kind == BoundKind::PaleyWiener)
    return spec.C * std::exp(spec.rate_scale * spec.A * im) / std::pow(1.0 + abs_sqrt_z, spec.N);
  // |q^N fhat(q)| <= C_N exp(beta |Im q|^b / b)
  const double g = std::exp(spec.rate_scale * spec.beta * std::pow(im, spec.b_gs) / spec.b_gs);
  return spec.N == 0 ? spec.C * g : spec.C * g / std::pow(abs_sqrt_z, spec.N);
}

BoundCheck verify_bound(const std::function<double(const SurfacePoint&, std::optional<double>)>& lhs,
                        const BoundSpec& spec, const std::vector<BoundSample>& samples) {
  if (samples.size() < 2) throw PreconditionError("verify_bound needs at least two samples");
  const auto scale = [](const BoundSample& s) { return std::abs(s.point.k()) * (1.0 + s.r.value_or(0.0)); };

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scale(samples[a]) < scale(samples[b]); });

  std::vector<double> ratio(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double rhs_unit = bound_rhs(spec, samples[i].point, samples[i].r) / spec.C;
    ratio[i] = lhs(samples[i].point, samples[i].r) / rhs_unit;
  }

  BoundCheck out;
  out.n_train = samples.size() / 2;
  out.n_test = samples.size() - out.n_train;
  for (std::size_t j = 0; j < out.n_train; ++j)
    out.training_constant = std::max(out.training_constant, ratio[order[j]]);
  for (double q : ratio) out.fitted_constant = std::max(out.fitted_constant, q);
  for (std::size_t j = out.n_train; j < samples.size(); ++j)
    if (!(ratio[order[j]] <= 10.0 * out.training_constant)) out.violations.push_back(order[j]);
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

}  // namespace jostlab
