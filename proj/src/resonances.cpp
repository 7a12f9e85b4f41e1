#include "jostlab/resonances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "jostlab/quadrature.hpp"

namespace jostlab {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr int kPanelNodes = 16;
constexpr double kMinBoxSide = 1e-6;
constexpr int kNewtonIterations = 100;

std::array<std::pair<cplx, cplx>, 4> edges(const KRectangle& r) {
  const cplx bl(r.re_min, r.im_min), br(r.re_max, r.im_min);
  const cplx tr(r.re_max, r.im_max), tl(r.re_min, r.im_max);
  return {{{bl, br}, {br, tr}, {tr, tl}, {tl, bl}}};
}

// Newton on J+ from `start`; nullopt if it leaves `fence` or stalls.
std::optional<std::pair<cplx, cplx>> newton(const ShellPotential& pot, cplx start,
                                            const KRectangle& fence, double tol) {
  cplx z = start;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const auto [J, dJ] = jost_plus_with_derivative(pot, z);
    if (!std::isfinite(std::abs(J)) || dJ == cplx(0.0, 0.0)) return std::nullopt;
    if (std::abs(J) < tol) {
      // one polishing step if it helps
      const cplx z2 = z - J / dJ;
      const cplx J2 = jost_plus_with_derivative(pot, z2).first;
      if (std::abs(J2) < std::abs(J)) return std::make_pair(z2, J2);
      return std::make_pair(z, J);
    }
    z -= J / dJ;
    if (!fence.contains(z)) return std::nullopt;
  }
  return std::nullopt;
}

KRectangle expanded(const KRectangle& r, double frac) {
  const double dx = r.width() * frac, dy = r.height() * frac;
  return {r.re_min - dx, r.re_max + dx, r.im_min - dy, r.im_max + dy};
}

void search(const ShellPotential& pot, const KRectangle& rect, int count, double tol,
            std::vector<cplx>& roots, std::vector<cplx>& values) {
  if (count == 0) return;

  const cplx center(0.5 * (rect.re_min + rect.re_max), 0.5 * (rect.im_min + rect.im_max));
  const bool tiny = std::max(rect.width(), rect.height()) < kMinBoxSide;

  if (count == 1 || tiny) {
    if (auto hit = newton(pot, center, expanded(rect, 0.5), tol)) {
      if (rect.contains(hit->first) || tiny) {
        for (int i = 0; i < count; ++i) {
          roots.push_back(hit->first);
          values.push_back(hit->second);
        }
        return;
      }
    }
    if (tiny)
      throw ConvergenceFailure("Newton failed to converge inside a box of side < 1e-6 near k = " +
                               std::to_string(center.real()) + " " +
                               std::to_string(center.imag()) + "i");
  }

  // quadrisect; nudge the split lines if one of them grazes a zero
  static constexpr std::array<double, 5> kSplits{0.5, 0.47, 0.53, 0.41, 0.59};
  for (double sx : kSplits) {
    for (double sy : kSplits) {
      const double xm = rect.re_min + sx * rect.width();
      const double ym = rect.im_min + sy * rect.height();
      const std::array<KRectangle, 4> kids{{{rect.re_min, xm, rect.im_min, ym},
                                            {xm, rect.re_max, rect.im_min, ym},
                                            {rect.re_min, xm, ym, rect.im_max},
                                            {xm, rect.re_max, ym, rect.im_max}}};
      std::array<int, 4> counts{};
      try {
        for (int i = 0; i < 4; ++i) counts[i] = count_zeros(pot, kids[i]);
      } catch (const ZeroOnContour&) {
        continue;
      } catch (const NonIntegerWinding&) {
        continue;
      }
      if (counts[0] + counts[1] + counts[2] + counts[3] != count) continue;
      for (int i = 0; i < 4; ++i) search(pot, kids[i], counts[i], tol, roots, values);
      return;
    }
  }
  throw ConvergenceFailure("could not subdivide the search box without crossing a zero");
}

}  // namespace

Resonance Resonance::at(cplx kn, cplx jplus) {
  Resonance r;
  r.point = SurfacePoint::from_momentum(kn);
  r.zn = kn * kn;
  r.gamma = -2.0 * r.zn.imag();
  r.jplus_abs = std::abs(jplus);
  return r;
}

namespace {

constexpr int kMaxPanelDepth = 48;
constexpr double kPanelTolerance = 1e-10;

cplx panel_integral(const ShellPotential& pot, cplx from, cplx to) {
  const auto& rule = gauss_legendre(kPanelNodes);
  const cplx mid = 0.5 * (from + to), half = 0.5 * (to - from);
  cplx sum(0.0, 0.0);
  for (int j = 0; j < kPanelNodes; ++j) {
    const cplx k = mid + half * rule.nodes[j];
    const auto [J, dJ] = jost_plus_with_derivative(pot, k);
    if (!(std::abs(J) > kContourClearance))
      throw ZeroOnContour("|J+| <= 1e-6 on the contour at k = " + std::to_string(k.real()) + " " +
                          std::to_string(k.imag()) + "i");
    sum += rule.weights[j] * half * dJ / J;
  }
  return sum;
}

// Bisect a panel until the two halves agree with the whole; a zero close to
// the contour pulls the refinement towards it.
cplx adaptive_panel(const ShellPotential& pot, cplx from, cplx to, cplx whole, int depth) {
  const cplx mid = 0.5 * (from + to);
  const cplx left = panel_integral(pot, from, mid), right = panel_integral(pot, mid, to);
  if (std::abs(left + right - whole) < kPanelTolerance) return left + right;
  if (depth >= kMaxPanelDepth)
    throw ZeroOnContour("contour integrand unresolved near k = " + std::to_string(mid.real()) + " " +
                        std::to_string(mid.imag()) + "i");
  return adaptive_panel(pot, from, mid, left, depth + 1) + adaptive_panel(pot, mid, to, right, depth + 1);
}

}  // namespace

double winding_number(const ShellPotential& pot, const KRectangle& rect, int boundary_points) {
  if (!(rect.width() > 0.0 && rect.height() > 0.0))
    throw PreconditionError("winding_number needs a rectangle of positive area");
  const int per_edge = std::max(kPanelNodes, boundary_points / 4);
  const int panels = std::max(1, per_edge / kPanelNodes);

  cplx total(0.0, 0.0);
  for (const auto& [from, to] : edges(rect)) {
    const cplx step = (to - from) / double(panels);
    for (int p = 0; p < panels; ++p) {
      const cplx a = from + step * double(p), b = from + step * double(p + 1);
      total += adaptive_panel(pot, a, b, panel_integral(pot, a, b), 0);
    }
  }
  return (total / (2.0 * std::numbers::pi * kI)).real();
}

int count_zeros(const ShellPotential& pot, const KRectangle& rect, int boundary_points) {
  const double w = winding_number(pot, rect, boundary_points);
  const double n = std::round(w);
  if (std::abs(w - n) > 1e-3)
    throw NonIntegerWinding("winding number " + std::to_string(w) + " is not an integer");
  return static_cast<int>(n);
}

std::vector<Resonance> find_resonances(const ShellPotential& pot, const KRectangle& rect,
                                       double tol) {
  if (!(tol > 0.0)) throw PreconditionError("find_resonances needs tol > 0");
  const int n = count_zeros(pot, rect);
  std::vector<cplx> roots, values;
  search(pot, rect, n, tol, roots, values);

  std::vector<Resonance> out;
  out.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) out.push_back(Resonance::at(roots[i], values[i]));
  std::sort(out.begin(), out.end(), [](const Resonance& a, const Resonance& b) {
    return a.point.k().real() < b.point.k().real();
  });
  return out;
}

KRectangle resonance_search_box(double k_max, double im_max) {
  if (!(k_max > 0.0 && im_max > 0.0))
    throw PreconditionError("resonance search box needs k_max > 0 and im_max > 0");
  return {0.0, k_max, -im_max, 0.0};
}

cplx gamow_state(const ShellPotential& pot, const Resonance& res, double r) {
  if (r < 0.0) throw PreconditionError("gamow_state needs r >= 0");
  const cplx k = res.point.k();
  if (!(k.imag() < 0.0)) throw PreconditionError("a resonance must lie below the real k axis");
  const auto jd = match_shell<cplx>(pot, k);
  const cplx N = res.normalization;
  if (r <= pot.a) return N * std::sin(k * r) / jd.J3;
  if (r <= pot.b) {
    const cplx kap = std::sqrt(k * k - pot.V0);
    return N * (jd.J1 / jd.J3 * std::exp(kI * kap * r) + jd.J2 / jd.J3 * std::exp(-kI * kap * r));
  }
  return N * std::exp(kI * k * r);
}

}  // namespace jostlab
