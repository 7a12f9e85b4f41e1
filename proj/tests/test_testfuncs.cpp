#include <doctest.h>

#include <cmath>

#include "jostlab/errors.hpp"
#include "jostlab/quadrature.hpp"
#include "jostlab/testfuncs.hpp"
#include "oracles.hpp"

using namespace jostlab;

// Integral of the unit bump over its support, pinned by the Simpson oracle below.
constexpr double kBumpIntegral = 0.443993816168079;

TEST_CASE("bump values and support") {
  const auto b = make_bump(1.0);
  CHECK(b(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(b(1.0) == 0.0);
  CHECK(b(-1.0) == 0.0);
  CHECK(b(1.5) == 0.0);
  for (double h : {1e-2, 1e-3}) {
    CHECK(std::abs(b(1.0 - h) - b(1.0)) / h < 1e-15);
    CHECK(std::abs(b(-1.0 + h) - b(-1.0)) / h < 1e-15);
  }
  const auto shifted = make_bump(0.5, 1.5, Domain::HalfLine);
  REQUIRE(shifted.support());
  CHECK(shifted.support()->first == 1.0);
  CHECK(shifted.support()->second == 2.0);
  CHECK(shifted(1.5) == doctest::Approx(std::exp(-1.0)));
  CHECK_THROWS_AS(make_bump(0.0), PreconditionError);
}

TEST_CASE("bump integral") {
  const auto b = make_bump(1.0);
  const double simpson = oracle::simpson([&](double x) { return b(x); }, -1.0, 1.0, 40000);
  CHECK(std::abs(simpson - kBumpIntegral) < 1e-14);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  const auto q = integrate([&](double x) { return cplx(b(x)); }, -1.0, 1.0, cfg);
  CHECK(std::abs(q.value - kBumpIntegral) < 1e-13);
}

TEST_CASE("Gelfand-Shilov and Gaussian families") {
  const auto gs = make_gs(1.0, 2.0);
  for (double x : {0.0, 0.7, 3.0}) CHECK(gs(x) == doctest::Approx(std::exp(-(1 + x * x) / 2)).epsilon(1e-15));
  CHECK(conjugate_exponent(2.0) == 2.0);
  CHECK(conjugate_exponent(1.5) == doctest::Approx(3.0));
  CHECK(make_gs(1.0, 1.5).conjugate_exponent() == doctest::Approx(3.0));
  CHECK_THROWS_AS(make_gs(1.0, 1.0), PreconditionError);
  CHECK_THROWS_AS(make_gs(-1.0, 2.0), PreconditionError);

  CHECK(make_gaussian(1.0)(0.0) == 1.0);
  CHECK(make_gaussian(2.0)(2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(make_gaussian(1.0).conjugate_exponent() == 2.0);
  CHECK_THROWS_AS(make_gaussian(0.0), PreconditionError);
}

TEST_CASE("Hardy rational") {
  const auto h = make_hardy_rational(cplx(0.0, 1.0));
  CHECK(std::abs(h.energy_value(0.0) - cplx(0.0, 1.0)) < 1e-15);
  CHECK_THROWS_AS(make_hardy_rational(cplx(1.0, -1.0)), PoleInLowerHalfPlane);
  CHECK_THROWS_AS(make_hardy_rational(cplx(1.0, 0.0)), PoleInLowerHalfPlane);
  CHECK_THROWS_AS(h(0.3), PreconditionError);
  CHECK_THROWS_AS(make_gaussian(1.0).energy_value(1.0), PreconditionError);
  // decay on arcs in the lower half plane
  for (double R : {10.0, 100.0, 1000.0}) {
    double worst = 0.0;
    for (int j = 0; j < 64; ++j) {
      const cplx E = std::polar(R, -M_PI * (j + 0.5) / 64.0);
      worst = std::max(worst, std::abs(h.energy_value(E)));
    }
    CHECK(worst <= 1.0 / (R - 1.0));
  }
}

TEST_CASE("decay certificates hold at 10^4 points") {
  const TestFunction fs[] = {make_bump(1.0), make_bump(0.5, 1.5), make_gs(1.0, 1.5), make_gs(0.3, 3.0),
                             make_gaussian(1.0), make_gaussian(0.4)};
  for (const auto& f : fs) {
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const double x = -20.0 + 40.0 * i / 9999.0;
      const double v = std::abs(f(x));
      if (v < 1e-300) continue;  // subnormals carry no relative precision
      if (v > 0.0 && std::log(v) > f.log_envelope(x) + 1e-12) ++bad;
      if (v > 0.0 && std::abs(std::log(v) - f.log_abs(x)) > 1e-12 * std::max(1.0, std::abs(f.log_abs(x)))) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("scaling and domain tags") {
  const auto g = make_gaussian(1.0);
  CHECK(g.scaled(3.0)(0.5) == doctest::Approx(3.0 * g(0.5)));
  const auto zero = g.scaled(0.0);
  CHECK(zero(0.2) == 0.0);
  CHECK(std::isinf(zero.log_envelope(0.2)));
  CHECK(g.on(Domain::HalfLine).domain() == Domain::HalfLine);
  CHECK(g.domain() == Domain::FullLine);
}
