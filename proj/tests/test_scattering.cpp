#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jostlab/errors.hpp"
#include "jostlab/scattering.hpp"
#include "oracles.hpp"

using namespace jostlab;
using std::numbers::pi;

namespace {
const ShellPotential kShell = ShellPotential::make(1.0, 2.0, 10.0);
const cplx I(0.0, 1.0);
}  // namespace

TEST_CASE("surface points") {
  CHECK(std::abs(from_energy(4.0, Sheet::I).k() - cplx(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(from_energy(-1.0, Sheet::I).k() - I) < 1e-15);
  const auto p = from_energy(cplx(2.0, -0.5), Sheet::II);
  CHECK(p.k().imag() < 0.0);
  CHECK(std::abs(p.k() * p.k() - cplx(2.0, -0.5)) < 1e-14);
  CHECK(p.sheet() == Sheet::II);
  CHECK_THROWS_AS(from_energy(0.0, Sheet::II), ZeroEnergyOnSheetII);
  CHECK(SurfacePoint::from_momentum(cplx(3.0, 0.0)).sheet() == Sheet::I);
  CHECK(SurfacePoint::from_momentum(cplx(1.0, 2.0)).conjugate().k() == cplx(1.0, -2.0));
}

TEST_CASE("potential construction") {
  CHECK_THROWS_AS(ShellPotential::make(2.0, 1.0, 1.0), PreconditionError);
  CHECK_THROWS_AS(ShellPotential::make(0.0, 1.0, 1.0), PreconditionError);
  CHECK_THROWS_AS(BarrierPotential::make(1.0, 1.0, 1.0), PreconditionError);
  CHECK(kShell(1.5) == 10.0);
  CHECK(kShell(0.5) == 0.0);
}

TEST_CASE("regular solution: closed forms") {
  const auto p = SurfacePoint::from_momentum(1.0);
  CHECK(std::abs(regular_solution(kShell, p, 0.5) - std::sin(0.5)) < 1e-15);
  const auto free = ShellPotential::make(1.0, 2.0, 0.0);
  CHECK(std::abs(regular_solution(free, p, 5.0) - std::sin(5.0)) < 1e-14);
}

TEST_CASE("regular solution agrees with RK integration") {
  for (cplx k : {cplx(2.0, 0.0), cplx(2.0, -0.7), cplx(0.8, 0.3), cplx(4.5, -1.5)}) {
    const auto p = SurfacePoint::from_momentum(k);
    for (double r : {0.5, 1.5, 2.0, 3.7}) {
      const auto [u, du] = oracle::rk4_regular(kShell, k, r);
      const auto [v, dv] = regular_solution_with_derivative(kShell, p, r);
      CAPTURE(k);
      CAPTURE(r);
      CHECK(std::abs(v - u) < 1e-8 * std::max(1.0, std::abs(u)));
      CHECK(std::abs(dv - du) < 1e-8 * std::max(1.0, std::abs(du)));
    }
  }
  // the reference value of the worked example
  const auto [u, du] = oracle::rk4_regular(kShell, 2.0, 1.5);
  CHECK(std::abs(regular_solution(kShell, SurfacePoint::from_momentum(2.0), 1.5) - u) < 1e-8);
}

TEST_CASE("matching continuity at a and b") {
  for (cplx k : {cplx(3.0, 0.0), cplx(2.0, -1.0)}) {
    const auto p = SurfacePoint::from_momentum(k);
    for (double edge : {kShell.a, kShell.b}) {
      const double h = 1e-9;
      const auto [l, dl] = regular_solution_with_derivative(kShell, p, edge - h);
      const auto [r, dr] = regular_solution_with_derivative(kShell, p, edge + h);
      CHECK(std::abs(l - r) < 1e-7 * std::abs(l));
      CHECK(std::abs(dl - dr) < 1e-7 * std::max(std::abs(dl), 1.0));
    }
  }
}

TEST_CASE("Jost functions: free values and oracle agreement") {
  const auto free = ShellPotential::make(1.0, 2.0, 0.0);
  for (cplx k : {cplx(1.3, 0.0), cplx(2.0, -0.5)}) {
    const auto jd = jost_coefficients(free, SurfacePoint::from_momentum(k));
    CHECK(std::abs(jd.J3 - 1.0 / (2.0 * I)) < 1e-14);
    CHECK(std::abs(jd.J4 + 1.0 / (2.0 * I)) < 1e-14);
    CHECK(std::abs(jd.Jplus - 1.0) < 1e-14);
    CHECK(std::abs(jd.Jminus - 1.0) < 1e-14);
    CHECK(std::abs(jd.S - 1.0) < 1e-14);
  }
  for (cplx k : {cplx(3.0, 0.0), cplx(2.3, -0.4), cplx(5.0, -1.7), cplx(0.4, 0.9)}) {
    const auto jd = jost_coefficients(kShell, SurfacePoint::from_momentum(k));
    CHECK(std::abs(jd.Jplus - oracle::jplus(kShell, k)) < 1e-11 * std::abs(jd.Jplus) + 1e-13);
    CHECK(std::abs(jd.Jminus - oracle::jminus(kShell, k)) < 1e-11 * std::abs(jd.Jminus) + 1e-13);
  }
}

TEST_CASE("unitarity and Schwarz reflection on the real axis") {
  for (int i = 0; i < 200; ++i) {
    const double E = 0.1 + (50.0 - 0.1) * i / 199.0;
    const auto jd = jost_coefficients(kShell, from_energy(E, Sheet::I));
    CHECK(std::abs(std::abs(jd.S) - 1.0) < 1e-10);
    CHECK(std::abs(jd.Jminus - std::conj(jd.Jplus)) < 1e-10);
  }
}

TEST_CASE("inner branch independence") {
  for (cplx k : {cplx(2.0, 0.0), cplx(3.0, -1.0), cplx(1.0, -0.2)}) {
    const auto p = SurfacePoint::from_momentum(k);
    const auto a = jost_coefficients(kShell, p, InnerBranch::Principal);
    const auto b = jost_coefficients(kShell, p, InnerBranch::Flipped);
    CHECK(std::abs(a.J3 - b.J3) < 1e-12 * std::abs(a.J3));
    CHECK(std::abs(a.J4 - b.J4) < 1e-12 * std::abs(a.J4));
    CHECK(std::abs(a.J1 - b.J2) < 1e-12 * std::abs(a.J1));
    CHECK(std::abs(a.J2 - b.J1) < 1e-12 * std::abs(a.J2));
  }
}

TEST_CASE("free limit within 10 V0") {
  for (double V0 : {1e-4, 1e-5, 1e-6}) {
    const auto weak = ShellPotential::make(1.0, 2.0, V0);
    for (double E : {0.1, 1.0, 7.0, 50.0}) {
      const auto p = from_energy(E, Sheet::I);
      const auto jd = jost_coefficients(weak, p);
      CHECK(std::abs(jd.Jplus - 1.0) < 10.0 * V0);
      CHECK(std::abs(jd.Jminus - 1.0) < 10.0 * V0);
      CHECK(std::abs(jd.S - 1.0) < 10.0 * V0);
      const auto ls = ls_eigenfunction(weak, p, Sign::Plus);
      const auto f0 = free_eigenfunction(p);
      for (double r : {0.5, 1.5, 3.0}) CHECK(std::abs(ls(r) - f0(r)) < 10.0 * V0);
    }
  }
}

TEST_CASE("eigenfunction prefactors") {
  const auto free = ShellPotential::make(1.0, 2.0, 0.0);
  const auto p1 = from_energy(1.0, Sheet::I);
  const auto chi = ls_eigenfunction(free, p1, Sign::Plus);
  for (double r : {0.3, 1.7, 4.0}) CHECK(std::abs(chi(r) - std::sqrt(1.0 / pi) * std::sin(r)) < 1e-14);

  CHECK(std::abs(free_eigenfunction(p1)(pi / 2) - std::sqrt(1.0 / pi)) < 1e-15);
  const auto p4 = from_energy(4.0, Sheet::I);
  for (double r : {0.3, 2.5}) CHECK(std::abs(free_eigenfunction(p4)(r) - std::sqrt(1.0 / (2 * pi)) * std::sin(2 * r)) < 1e-15);

  const auto jp = jost_coefficients(kShell, p4).Jplus;
  CHECK(std::abs(ls_eigenfunction(kShell, p4, Sign::Plus)(0.5) - std::sqrt(1.0 / (2 * pi)) * std::sin(1.0) / jp) < 1e-14);
}

TEST_CASE("barrier: free plane wave, flux conservation, symmetric transmission") {
  const auto none = BarrierPotential::make(0.0, 1.0, 0.0);
  const auto p = SurfacePoint::from_momentum(1.7);
  const auto chi = barrier_eigenfunction(none, p, Side::Left, Sign::Plus);
  for (double x : {-2.0, 0.5, 3.0})
    CHECK(std::abs(chi(x) - std::exp(I * 1.7 * x) / std::sqrt(4 * pi * 1.7)) < 1e-14);

  for (double V0 : {2.0, 10.0, -3.0}) {
    const auto bar = BarrierPotential::make(-0.5, 1.0, V0);
    for (int i = 0; i < 200; ++i) {
      const double E = 0.1 + (50.0 - 0.1) * i / 199.0;
      const double k = std::sqrt(E);
      const auto L = barrier_amplitudes(bar, k, Side::Left);
      const auto R = barrier_amplitudes(bar, k, Side::Right);
      CHECK(std::abs(std::norm(L.reflected) + std::norm(L.transmitted) - 1.0) < 1e-10);
      CHECK(std::abs(std::norm(R.reflected) + std::norm(R.transmitted) - 1.0) < 1e-10);
      CHECK(std::abs(L.transmitted - R.transmitted) < 1e-10);
    }
  }
}

TEST_CASE("barrier minus solutions are Schwarz reflections") {
  const auto bar = BarrierPotential::make(0.0, 1.0, 5.0);
  const cplx k(2.0, -0.3);
  const auto minus = barrier_eigenfunction(bar, SurfacePoint::from_momentum(k), Side::Left, Sign::Minus);
  const auto plus = barrier_eigenfunction(bar, SurfacePoint::from_momentum(std::conj(k)), Side::Left, Sign::Plus);
  for (double x : {-1.0, 0.4, 2.0}) CHECK(std::abs(minus(x) - std::conj(plus(x))) < 1e-13);
}

TEST_CASE("growth envelope of the regular solution") {
  // a single constant C per potential; the sampled ratios stay bounded
  double worst = 0.0;
  for (int i = 0; i < 40; ++i)
    for (int j = 1; j <= 20; ++j) {
      const cplx k = std::polar(0.2 + 0.5 * i, -pi + 2 * pi * j / 21.0);
      const double r = 0.25 * j;
      const double x = std::abs(k) * r;
      const double rhs = x / (1 + x) * std::exp(std::abs(k.imag()) * r);
      worst = std::max(worst, std::abs(regular_solution(kShell, SurfacePoint::from_momentum(k), r)) / rhs);
    }
  CHECK(worst < 100.0);
}
