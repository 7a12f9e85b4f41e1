#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "jostlab/errors.hpp"
#include "jostlab/resonances.hpp"
#include "oracles.hpp"

using namespace jostlab;

namespace {
const ShellPotential kShell = ShellPotential::make(1.0, 2.0, 10.0);
const KRectangle kBox = resonance_search_box(6.0, 2.0);

std::vector<cplx> oracle_zeros() {
  std::vector<cplx> z;
  oracle::bisect_zeros([](cplx k) { return oracle::jplus(kShell, k); }, kBox.re_min + 1e-2, kBox.re_max, kBox.im_min,
                       kBox.im_max, z);
  std::sort(z.begin(), z.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  return z;
}
}  // namespace

TEST_CASE("no zeros without a potential") {
  const auto free = ShellPotential::make(1.0, 2.0, 0.0);
  CHECK(count_zeros(free, kBox) == 0);
  CHECK(count_zeros(free, {0.5, 3.0, -1.0, 1.0}) == 0);
  CHECK(find_resonances(free, kBox).empty());
}

TEST_CASE("positions and count agree with the bisection oracle") {
  const auto found = find_resonances(kShell, kBox, 1e-10);
  const auto ref = oracle_zeros();
  REQUIRE(ref.size() >= 1);
  REQUIRE(found.size() == ref.size());
  CHECK(count_zeros(kShell, kBox) == static_cast<int>(ref.size()));
  for (std::size_t i = 0; i < ref.size(); ++i) {
    CAPTURE(ref[i]);
    CHECK(std::abs(found[i].point.k() - ref[i]) < 1e-8);
    CHECK(found[i].point.sheet() == Sheet::II);
    CHECK(std::abs(found[i].zn - ref[i] * ref[i]) < 1e-7);
    CHECK(std::abs(found[i].gamma + 2.0 * found[i].zn.imag()) < 1e-14);
    CHECK(found[i].jplus_abs < 1e-10);
  }
}

TEST_CASE("reference positions for (1, 2, 10)") {
  const auto found = find_resonances(kShell, kBox);
  REQUIRE(found.size() == 3);
  CHECK(std::abs(found[0].point.k() - cplx(2.319099850205, -0.009303105481)) < 1e-11);
  CHECK(std::abs(found[1].point.k() - cplx(3.992510714008, -0.259149865119)) < 1e-11);
  CHECK(std::abs(found[2].point.k() - cplx(5.117149880684, -0.454008925570)) < 1e-11);
}

TEST_CASE("winding number is additive and stable") {
  const int whole = count_zeros(kShell, kBox);
  const double cut = 3.1;
  const int left = count_zeros(kShell, {kBox.re_min, cut, kBox.im_min, kBox.im_max});
  const int right = count_zeros(kShell, {cut, kBox.re_max, kBox.im_min, kBox.im_max});
  CHECK(left + right == whole);
  const KRectangle nudged{kBox.re_min + 1e-3, kBox.re_max - 1e-3, kBox.im_min + 1e-3, kBox.im_max - 1e-3};
  CHECK(count_zeros(kShell, nudged) == whole);
}

TEST_CASE("self-consistency, duality and mirror symmetry") {
  for (const auto& r : find_resonances(kShell, kBox)) {
    const cplx k = r.point.k();
    CHECK(count_zeros(kShell, {k.real() - 5e-5, k.real() + 5e-5, k.imag() - 5e-5, k.imag() + 5e-5}) == 1);
    // simple pole of S: |S| times the distance is constant
    const double s1 = std::abs(jost_coefficients(kShell, SurfacePoint::from_momentum(k + std::polar(1e-6, 0.7))).S);
    const double s2 = std::abs(jost_coefficients(kShell, SurfacePoint::from_momentum(k + std::polar(1e-7, 0.7))).S);
    CHECK(s2 > 1e3);
    CHECK(std::abs(s2 * 1e-7 / (s1 * 1e-6) - 1.0) < 1e-3);
    CHECK(std::abs(oracle::jplus(kShell, -std::conj(k))) < 1e-8);
    CHECK_THROWS_AS(ls_eigenfunction(kShell, r.point, Sign::Plus), PoleAtRequestedPoint);
  }
}

TEST_CASE("Gamow states solve the radial equation") {
  for (const auto& res : find_resonances(kShell, kBox)) {
    const cplx z = res.zn;
    CHECK(std::abs(gamow_state(kShell, res, 0.0)) < 1e-14);
    const double h = 1e-3;
    int checked = 0;
    for (int i = 0; checked < 100; ++i) {
      const double r = 0.05 + 0.069 * i;
      if (std::abs(r - kShell.a) < 5 * h || std::abs(r - kShell.b) < 5 * h) continue;
      auto u = [&](double x) { return gamow_state(kShell, res, x); };
      const cplx d2 = (-u(r + 2 * h) + 16.0 * u(r + h) - 30.0 * u(r) + 16.0 * u(r - h) - u(r - 2 * h)) / (12 * h * h);
      const cplx pot = (kShell(r) - z) * u(r);
      const double rel = std::abs(-d2 + pot) / (std::abs(d2) + std::abs(pot));
      CAPTURE(r);
      CHECK(rel < 1e-6);
      ++checked;
    }
  }
}

TEST_CASE("Gamow states grow with exactly |Im k| outside") {
  for (const auto& res : find_resonances(kShell, kBox)) {
    const double im = std::abs(res.point.k().imag());
    double lo = INFINITY, hi = -INFINITY;
    for (double r = kShell.b; r <= kShell.b + 50.0; r += 0.5) {
      const double g = std::log(std::abs(gamow_state(kShell, res, r))) - im * r;
      lo = std::min(lo, g);
      hi = std::max(hi, g);
    }
    CHECK(hi - lo < 1e-9);
  }
}

TEST_CASE("contour errors") {
  const auto found = find_resonances(kShell, kBox);
  const cplx k = found.front().point.k();
  CHECK_THROWS_AS(winding_number(kShell, {k.real(), k.real() + 1.0, k.imag() - 0.5, 0.0}), ZeroOnContour);
}
