// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "jostlab/cli/output.hpp"
#include "jostlab/jostlab.hpp"
#include "oracles.hpp"

using namespace jostlab;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

const ShellPotential kShell = ShellPotential::make(1.0, 2.0, 10.0);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<double> real_energies(int n, double lo, double hi) {
  std::vector<double> e;
  for (int i = 0; i < n; ++i) e.push_back(lo + (hi - lo) * i / (n - 1));
  return e;
}

Outcome free_limit() {
  double weak = 0.0, exact = 0.0;
  const auto w = ShellPotential::make(1.0, 2.0, 1e-6), z = ShellPotential::make(1.0, 2.0, 0.0);
  for (double E : real_energies(200, 0.1, 50.0)) {
    const auto p = from_energy(E, Sheet::I);
    const auto a = jost_coefficients(w, p), b = jost_coefficients(z, p);
    weak = std::max({weak, std::abs(a.S - 1.0), std::abs(a.Jplus - 1.0), std::abs(a.Jminus - 1.0)});
    exact = std::max({exact, std::abs(b.S - 1.0), std::abs(b.Jplus - 1.0), std::abs(b.Jminus - 1.0)});
  }
  return {weak < 1e-4 && exact < 1e-12, "V0=1e-6 max dev " + num(weak) + ", V0=0 max dev " + num(exact)};
}

Outcome unitarity() {
  double s = 0.0, flux = 0.0;
  for (double E : real_energies(200, 0.1, 50.0)) {
    s = std::max(s, std::abs(std::abs(jost_coefficients(kShell, from_energy(E, Sheet::I)).S) - 1.0));
    for (Side side : {Side::Left, Side::Right}) {
      const auto amp = barrier_amplitudes(BarrierPotential::make(-0.5, 1.0, 10.0), std::sqrt(E), side);
      flux = std::max(flux, std::abs(std::norm(amp.reflected) + std::norm(amp.transmitted) - 1.0));
    }
  }
  return {s < 1e-8 && flux < 1e-8, "max ||S|-1| " + num(s) + ", max flux defect " + num(flux)};
}

Outcome resonance_oracle() {
  const auto box = resonance_search_box(6.0, 2.0);
  const auto found = find_resonances(kShell, box);
  std::vector<cplx> ref;
  // the oracle divides by k, so its box stays clear of k = 0
  oracle::bisect_zeros([](cplx k) { return oracle::jplus(kShell, k); }, box.re_min + 1e-2, box.re_max, box.im_min, box.im_max,
                       ref);
  std::sort(ref.begin(), ref.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  if (found.size() != ref.size())
    return {false, "count " + std::to_string(found.size()) + " vs oracle " + std::to_string(ref.size())};
  double dev = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) dev = std::max(dev, std::abs(found[i].point.k() - ref[i]));
  return {dev < 1e-8, std::to_string(found.size()) + " resonances, max position deviation " + num(dev)};
}

Outcome gamow_residual() {
  const auto found = find_resonances(kShell, resonance_search_box(6.0, 2.0));
  double worst = 0.0;
  const double h = 1e-3;
  for (const auto& res : found) {
    auto u = [&](double x) { return gamow_state(kShell, res, x); };
    int n = 0;
    for (int i = 0; n < 100; ++i) {
      const double r = 0.05 + 0.069 * i;
      if (std::abs(r - kShell.a) < 5 * h || std::abs(r - kShell.b) < 5 * h) continue;
      const cplx d2 = (-u(r + 2 * h) + 16.0 * u(r + h) - 30.0 * u(r) + 16.0 * u(r - h) - u(r - 2 * h)) / (12 * h * h);
      const cplx pot = (kShell(r) - res.zn) * u(r);
      worst = std::max(worst, std::abs(-d2 + pot) / (std::abs(d2) + std::abs(pot)));
      ++n;
    }
  }
  return {!found.empty() && worst < 1e-6, std::to_string(found.size()) + " states x 100 radii, max relative residual " + num(worst)};
}

Outcome isometry() {
  const auto f = make_gaussian(1.0, Domain::HalfLine);
  const double n = position_norm_squared(f);
  auto free = [&](double E) { return transform_free(f, from_energy(E, Sheet::I)).value; };
  const auto n0 = energy_norm_squared(free, 100.0);
  double dev = std::abs(std::sqrt(n0.value / n) - 1.0);
  std::string detail = "U0 " + num(dev);
  const NormControl control{free, n0};
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const auto ns = energy_norm_squared(
        [&](double E) { return transform_ls(kShell, f, from_energy(E, Sheet::I), s).value; }, control, 100.0);
    const double d = std::abs(std::sqrt(ns.value / n) - 1.0);
    detail += std::string(s == Sign::Plus ? ", U+ " : ", U- ") + num(d);
    dev = std::max(dev, d);
  }
  return {dev < 1e-6, "| ||Uf||/||f|| - 1 |: " + detail};
}

ScanConfig axis_scan(std::vector<double> radii) {
  ScanConfig c;
  c.radii = std::move(radii);
  c.samples_per_arc = 1;
  return c;
}

Outcome gaussian_oracle() {
  const auto g = make_gaussian(1.0);
  double dev = 0.0;
  for (double q : real_energies(100, -10.0, 10.0))
    dev = std::max(dev, std::abs(fourier_line(g, q).value - std::exp(-q * q / 2)));
  for (double y : real_energies(20, 0.25, 5.0)) {
    const cplx v = fourier_line(g, cplx(0.0, y)).value;
    dev = std::max(dev, std::abs(v - std::exp(y * y / 2)) / std::exp(y * y / 2));
  }
  std::vector<double> radii;
  for (double r : real_energies(20, 1.5, 30.0)) radii.push_back(r);
  const auto rep = arc_scan([&](const SurfacePoint& p) { return fourier_line(g, p.k()).value; }, axis_scan(radii));
  const auto fit = fit_growth(rep, GrowthModel::PowerBgs);
  const bool ok = dev < 1e-10 && std::abs(fit.exponent - 2.0) < 0.1 && std::abs(fit.coefficient - 0.5) < 0.025;
  return {ok, "max deviation " + num(dev) + " (relative on the imaginary axis), fitted b " + num(fit.exponent) +
                  ", coefficient " + num(fit.coefficient)};
}

Outcome paley_wiener() {
  std::string detail;
  bool ok = true;
  std::vector<double> radii;
  for (int j = 0; j <= 8; ++j) radii.push_back(10.0 * std::pow(2.0, j / 2.0));
  for (double A : {0.5, 1.0, 2.0}) {
    const auto b = make_bump(A);
    const auto rep = arc_scan([&](const SurfacePoint& p) { return fourier_line(b, p.k()).value; }, axis_scan(radii));
    const auto fit = fit_growth(rep, GrowthModel::LinearInImSqrt);
    ok = ok && std::abs(fit.coefficient - A) < 0.05 * A;
    detail += (detail.empty() ? "" : ", ") + std::string("A=") + num(A) + " -> " + num(fit.coefficient);
  }
  return {ok, detail};
}

Outcome gelfand_shilov() {
  const auto gs = make_gs(1.0, 1.5);
  const auto rep = arc_scan([&](const SurfacePoint& p) { return fourier_line(gs, p.k()).value; },
                            axis_scan(real_energies(20, 2.0, 10.0)));
  const auto fit = fit_growth(rep, GrowthModel::PowerBgs);
  return {std::abs(fit.exponent - 3.0) < 0.45, "fitted b " + num(fit.exponent) + " (expected 3)"};
}

Outcome central_claim() {
  const auto bump = make_bump(0.5, 1.5, Domain::HalfLine);
  const auto cfg = ScanConfig::ladder(5);
  bool ok = true;
  std::string detail;
  auto check = [&](const char* name, const std::function<cplx(const SurfacePoint&)>& f) {
    const auto h = hardy_verdict(f, cfg);
    const auto& m = h.evidence.max_modulus;
    const bool mono = std::is_sorted(m.begin(), m.end(), std::less_equal<>());
    ok = ok && mono && h.evidence.verdict == ScanVerdict::GrowsExponentially && h.verdict == HardyVerdict::NotHardy;
    detail += std::string(name) + ": " + to_string(h.evidence.verdict) + "/" + to_string(h.verdict) + ", ";
  };
  check("free", [&](const SurfacePoint& p) { return transform_free(bump, p).value; });
  check("ls+", [&](const SurfacePoint& p) { return transform_ls(kShell, bump, p, Sign::Plus).value; });
  const auto rational = make_hardy_rational(cplx(0.0, 1.0));
  const auto h = hardy_verdict([&](const SurfacePoint& p) { return rational.energy_value(p.energy()); },
                               ScanConfig::ladder(15));
  ok = ok && h.verdict == HardyVerdict::ConsistentWithHardy;
  detail += std::string("rational: ") + to_string(h.verdict);
  return {ok, detail};
}

Outcome qat_equivalence() {
  const auto f = SpectralFunction::from(make_hardy_rational(cplx(0.0, 1.0)));
  const std::vector<Pole> poles = f.poles();
  const std::vector<double> t{-1.0, 0.5, 1.0, 2.0, 5.0};
  const auto s = time_signal(f, t);
  double late = 0.0, oracle_dev = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] > 0) late = std::max(late, std::abs(s.values[i]));
    oracle_dev = std::max(oracle_dev, std::abs(s.values[i] - residue_oracle(poles, t[i])));
  }
  const double early = std::abs(std::abs(s.values[0]) - 2 * pi / std::exp(1.0));

  const auto h = make_gaussian(1.0, Domain::HalfLine);
  const auto f0 = SpectralFunction::generic(
      [&](double E) -> cplx { return E > 0.0 ? transform_free(h, from_energy(E, Sheet::I)).value : cplx(0.0); });
  TimeSignalConfig cfg;
  cfg.E_max = 200.0;
  cfg.half_line = true;
  const std::vector<double> tg{-5, -2, -1, -0.5, 0.5, 1, 2, 5};
  const auto g = time_signal(f0, tg, cfg);
  double peak = 0.0, causal = 0.0;
  for (std::size_t i = 0; i < tg.size(); ++i) {
    peak = std::max(peak, std::abs(g.values[i]));
    if (tg[i] > 0) causal = std::max(causal, std::abs(g.values[i]));
  }
  const bool ok = late < 1e-6 && early < 1e-6 && oracle_dev < 1e-6 && causal > 0.1 * peak;
  return {ok, "max |phi(t>0)| " + num(late) + ", ||phi(-1)| - 2pi/e| " + num(early) + ", vs residues " +
                  num(oracle_dev) + "; half-line Gaussian t>0/peak " + num(causal / peak)};
}

Outcome determinism() {
  const fs::path base = fs::temp_directory_path() / "jostlab_acceptance_determinism";
  fs::remove_all(base);
  std::string detail;
  bool ok = true;
  for (const char* config : {"verify_bounds.yaml", "arc_scan_bump.yaml", "transform.yaml"}) {
    std::vector<std::string> runs;
    for (int i = 0; i < 2; ++i) {
      const fs::path dir = base / (std::string(config) + std::to_string(i));
      const std::string cmd = std::string(JOSTLAB_TOOL) + " run " + JOSTLAB_CONFIGS + "/" + config +
                              " --quiet --output-dir " + dir.string();
      if (std::system(cmd.c_str()) != 0) return {false, std::string("run failed for ") + config};
      std::string all;
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".csv") all += cli::read_file(e.path());
      runs.push_back(all);
    }
    ok = ok && !runs[0].empty() && runs[0] == runs[1];
    detail += std::string(config) + (runs[0] == runs[1] ? " identical" : " DIFFERS") + ", ";
  }
  fs::remove_all(base);
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"free-limit identity", free_limit},
      {"unitarity and barrier flux", unitarity},
      {"resonance oracle agreement", resonance_oracle},
      {"Gamow ODE residual", gamow_residual},
      {"isometry of U0 and U+-", isometry},
      {"Gaussian Fourier oracle and growth fit", gaussian_oracle},
      {"Paley-Wiener slope", paley_wiener},
      {"Gelfand-Shilov conjugacy", gelfand_shilov},
      {"central claim: arc scans and Hardy verdicts", central_claim},
      {"time signal and residue equivalence", qat_equivalence},
      {"determinism of CSV output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s  %2zu  %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
