#include "jostlab/cli/runner.hpp"

#include <json.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>

#include "jostlab/cli/output.hpp"
#include "jostlab/cli/plot.hpp"
#include "jostlab/jostlab.hpp"

#ifndef JOSTLAB_VERSION
#define JOSTLAB_VERSION "0.0.0"
#endif

namespace jostlab::cli {

using json = nlohmann::json;

const char* tool_version() { return JOSTLAB_VERSION; }

namespace {

std::string num(double v) { return format_number(v); }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

//! Adds the artifact when its format is requested.
struct Sink {
  const OutputSpec& spec;
  std::vector<Artifact> out;

  void add(const std::string& format, const std::string& name, std::function<std::string()> render) {
    if (spec.wants(format)) out.push_back({name, render()});
  }
};

//! Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

std::function<TransformResult(const SurfacePoint&)> evaluator(const ExperimentConfig& cfg, TransformKind kind) {
  const TestFunction f = *cfg.testfunction;
  const QuadratureConfig q = cfg.quadrature;
  switch (kind) {
    case TransformKind::Free:
      return [f, q](const SurfacePoint& p) { return transform_free(f, p, q); };
    case TransformKind::LSPlus:
    case TransformKind::LSMinus: {
      const ShellPotential pot = *cfg.shell;
      const Sign s = kind == TransformKind::LSPlus ? Sign::Plus : Sign::Minus;
      return [f, q, pot, s](const SurfacePoint& p) { return transform_ls(pot, f, p, s, q); };
    }
    case TransformKind::Fourier:
      return [f, q](const SurfacePoint& p) { return fourier_line(f, p.k(), Sign::Minus, q); };
    case TransformKind::Energy:
      return [f](const SurfacePoint& p) { return TransformResult{f.energy_value(p.energy()), 0.0, 0.0, true}; };
  }
  throw PreconditionError("unknown transform kind");
}

// ---------------------------------------------------------------- resonances

std::vector<Artifact> resonances(const ExperimentConfig& cfg, std::string& summary) {
  const auto& o = cfg.resonances;
  const KRectangle box = resonance_search_box(o.k_max, o.im_max);
  const auto found = find_resonances(*cfg.shell, box, o.tol);

  Sink sink{cfg.output, {}};
  sink.add("csv", "resonances.csv", [&] {
    CsvTable t({"kn_re", "kn_im", "zn_re", "zn_im", "gamma", "jplus_abs"});
    for (const auto& r : found)
      t.add({num(r.point.k().real()), num(r.point.k().imag()), num(r.zn.real()), num(r.zn.imag()), num(r.gamma),
             num(r.jplus_abs)});
    return t.str();
  });
  sink.add("json", "resonances.json", [&] {
    json j;
    j["search_box"] = {{"re_min", box.re_min}, {"re_max", box.re_max}, {"im_min", box.im_min}, {"im_max", box.im_max}};
    j["count"] = found.size();
    j["resonances"] = json::array();
    for (const auto& r : found)
      j["resonances"].push_back({{"k", {r.point.k().real(), r.point.k().imag()}},
                                 {"z", {r.zn.real(), r.zn.imag()}},
                                 {"gamma", r.gamma},
                                 {"jplus_abs", r.jplus_abs}});
    return dump(j);
  });
  summary = std::to_string(found.size()) + " resonance(s) in the search box";
  return sink.out;
}

// ---------------------------------------------------------------- transform

std::vector<Artifact> transform(const ExperimentConfig& cfg, std::string& summary) {
  const auto& o = cfg.transform;
  const auto eval = evaluator(cfg, o.kind);
  std::vector<TransformResult> res;
  for (const auto& p : o.points) res.push_back(eval(p));

  const bool fourier = o.kind == TransformKind::Fourier;
  auto z_of = [&](const SurfacePoint& p) { return fourier ? p.k() : p.energy(); };
  auto sheet_of = [&](const SurfacePoint& p) { return fourier ? std::string("line") : std::string(to_string(p.sheet())); };

  Sink sink{cfg.output, {}};
  sink.add("csv", "transform.csv", [&] {
    CsvTable t({"z_re", "z_im", "sheet", "value_re", "value_im", "abs_err", "trunc_radius"});
    for (std::size_t i = 0; i < res.size(); ++i) {
      const cplx z = z_of(o.points[i]);
      t.add({num(z.real()), num(z.imag()), sheet_of(o.points[i]), num(res[i].value.real()), num(res[i].value.imag()),
             num(res[i].abs_error_estimate), num(res[i].truncation_radius)});
    }
    return t.str();
  });
  sink.add("json", "transform.json", [&] {
    json j;
    j["kind"] = to_string(o.kind);
    j["points"] = json::array();
    for (std::size_t i = 0; i < res.size(); ++i) {
      const cplx z = z_of(o.points[i]);
      j["points"].push_back({{"k", {o.points[i].k().real(), o.points[i].k().imag()}},
                             {"z", {z.real(), z.imag()}},
                             {"sheet", sheet_of(o.points[i])},
                             {"value", {res[i].value.real(), res[i].value.imag()}},
                             {"abs_err", res[i].abs_error_estimate},
                             {"trunc_radius", res[i].truncation_radius},
                             {"support_exact", res[i].support_exact}});
    }
    return dump(j);
  });
  summary = std::to_string(res.size()) + " transform value(s), kind " + to_string(o.kind);
  return sink.out;
}

// ---------------------------------------------------------------- arc-scan

std::vector<Artifact> arc_scan_experiment(const ExperimentConfig& cfg, std::string& summary) {
  const auto eval = evaluator(cfg, cfg.arc_scan.kind);
  const ArcScanReport rep = arc_scan([&](const SurfacePoint& p) { return eval(p).value; }, cfg.scan);

  HardyVerdict hardy = HardyVerdict::Inconclusive;
  if (rep.verdict == ScanVerdict::GrowsExponentially) hardy = HardyVerdict::NotHardy;
  if (rep.verdict == ScanVerdict::DecaysToZero) hardy = HardyVerdict::ConsistentWithHardy;

  std::optional<GrowthFit> fit;
  std::string fit_error;
  if (rep.radii.size() < 4) {
    fit_error = "fewer than 4 usable radii";
  } else {
    try {
      fit = fit_growth(rep, cfg.arc_scan.model);
    } catch (const NumericalError& e) {
      fit_error = e.what();
    } catch (const PreconditionError& e) {
      fit_error = e.what();
    }
  }

  Sink sink{cfg.output, {}};
  sink.add("csv", "arc_scan.csv", [&] {
    CsvTable t({"radius", "max_modulus", "argmax_angle", "predictor"});
    for (std::size_t i = 0; i < rep.radii.size(); ++i)
      t.add({num(rep.radii[i]), num(rep.max_modulus[i]), num(rep.argmax_angles[i]), num(rep.predictor[i])});
    return t.str();
  });
  sink.add("json", "arc_scan.json", [&] {
    json j;
    j["kind"] = to_string(cfg.arc_scan.kind);
    j["samples_per_arc"] = cfg.scan.samples_per_arc;
    j["radii"] = rep.radii;
    j["max_modulus"] = rep.max_modulus;
    j["argmax_angles"] = rep.argmax_angles;
    j["predictor"] = rep.predictor;
    j["fitted_exponent"] = number_or_null(rep.fitted_exponent);
    j["fit_residual"] = number_or_null(rep.fit_residual);
    j["verdict"] = to_string(rep.verdict);
    j["hardy_verdict"] = to_string(hardy);
    j["skipped"] = json::array();
    for (const auto& s : rep.skipped) j["skipped"].push_back({{"radius", s.radius}, {"angle", s.angle}, {"reason", s.reason}});
    if (fit) {
      j["fit"] = {{"model", to_string(fit->model)}, {"coefficient", fit->coefficient}, {"exponent", fit->exponent},
                  {"beta", fit->beta},              {"residual", fit->residual},       {"terms", fit->terms}};
    } else {
      j["fit"] = nullptr;
      j["fit_error"] = fit_error;
    }
    return dump(j);
  });
  if (!rep.radii.empty()) sink.add("svg", "arc_scan.svg", [&] { return render_svg(rep, fit); });

  summary = std::string("scan ") + to_string(rep.verdict) + ", hardy verdict " + to_string(hardy);
  if (fit) summary += std::string(", fitted ") + to_string(fit->model) + " coefficient " + num(fit->coefficient);
  return sink.out;
}

// ---------------------------------------------------------------- qat

std::vector<Artifact> qat(const ExperimentConfig& cfg, std::string& summary) {
  const auto& o = cfg.qat;
  const TestFunction f = *cfg.testfunction;
  const bool rational = f.family() == Family::HardyRational;
  const QuadratureConfig q = cfg.quadrature;

  const SpectralFunction fhat =
      rational ? SpectralFunction::from(f) : SpectralFunction::generic([f, q](double E) -> cplx {
        if (E <= 0.0) return 0.0;
        return transform_free(f, from_energy(E, Sheet::I), q).value;
      });
  TimeSignalConfig tc;
  tc.E_max = o.E_max;
  tc.half_line = o.half_line.value_or(!rational);
  tc.quad = q;
  const TimeSignal sig = o.evolution ? spectral_evolution(fhat, o.t, tc) : time_signal(fhat, o.t, tc);

  std::vector<cplx> oracle;
  if (rational && !tc.half_line && !o.evolution)
    for (double t : o.t) oracle.push_back(residue_oracle(fhat.poles(), t));

  double peak = 0.0, late = 0.0;
  for (std::size_t i = 0; i < o.t.size(); ++i) {
    peak = std::max(peak, std::abs(sig.values[i]));
    if (o.t[i] > 0.0) late = std::max(late, std::abs(sig.values[i]));
  }

  Sink sink{cfg.output, {}};
  sink.add("csv", "qat.csv", [&] {
    CsvTable t({"t", "value_re", "value_im", "abs_value", "oracle_re", "oracle_im", "error"});
    for (std::size_t i = 0; i < o.t.size(); ++i) {
      const cplx w = i < oracle.size() ? oracle[i] : cplx(NAN, NAN);
      t.add({num(o.t[i]), num(sig.values[i].real()), num(sig.values[i].imag()), num(std::abs(sig.values[i])),
             num(w.real()), num(w.imag()), num(sig.errors[i])});
    }
    return t.str();
  });
  sink.add("json", "qat.json", [&] {
    json j;
    j["mode"] = o.evolution ? "evolution" : "signal";
    j["half_line"] = tc.half_line;
    j["E_max"] = tc.E_max;
    j["rational"] = rational;
    j["peak_abs"] = peak;
    j["max_abs_positive_t"] = late;
    j["positive_t_fraction_of_peak"] = peak > 0.0 ? json(late / peak) : json(nullptr);
    j["quadrature_error"] = sig.quadrature_error;
    if (!oracle.empty()) {
      double dev = 0.0;
      for (std::size_t i = 0; i < oracle.size(); ++i) dev = std::max(dev, std::abs(sig.values[i] - oracle[i]));
      j["max_oracle_deviation"] = dev;
    }
    return dump(j);
  });
  sink.add("svg", "qat.svg", [&] { return render_svg(sig, oracle); });

  summary = "time signal at " + std::to_string(o.t.size()) + " point(s); max |phi| for t > 0 is " + num(late);
  return sink.out;
}

// ---------------------------------------------------------------- verify-bounds

std::vector<Artifact> verify_bounds(const ExperimentConfig& cfg, std::string& summary) {
  const auto& o = cfg.bounds;
  const BoundKind kind = o.spec.kind;
  std::mt19937_64 rng(cfg.seed);

  std::vector<Resonance> res;
  if (kind == BoundKind::Gamow) {
    res = find_resonances(*cfg.shell, resonance_search_box(cfg.resonances.k_max, cfg.resonances.im_max),
                          cfg.resonances.tol);
    if (res.empty()) throw PreconditionError("no resonances in the search box for the gamow bound");
  }

  std::vector<BoundSample> samples;
  for (int i = 0; i < o.samples; ++i) {
    const double u1 = uniform(rng), u2 = uniform(rng), u3 = uniform(rng);
    BoundSample s;
    if (kind == BoundKind::Gamow) {
      s.point = res[static_cast<std::size_t>(i) % res.size()].point;
    } else {
      const double R = o.k_min + (o.k_max - o.k_min) * u1;
      const double th = -std::numbers::pi + 2.0 * std::numbers::pi * u2;
      s.point = SurfacePoint::from_momentum(std::polar(R, th));
    }
    if (o.spec.needs_radius()) s.r = o.r_max * u3;
    samples.push_back(s);
  }

  std::function<double(const SurfacePoint&, std::optional<double>)> lhs;
  const QuadratureConfig q = cfg.quadrature;
  switch (kind) {
    case BoundKind::RegularSolution:
      lhs = [&](const SurfacePoint& p, std::optional<double> r) { return std::abs(regular_solution(*cfg.shell, p, *r)); };
      break;
    case BoundKind::LSPlusMinus:
      // |chi^{+-}| |J_{+-}|, so the bound is tested with jost_abs = 1
      lhs = [&](const SurfacePoint& p, std::optional<double> r) {
        const auto jd = jost_coefficients(*cfg.shell, p);
        const double plus = std::abs(ls_eigenfunction(*cfg.shell, p, Sign::Plus)(*r)) * std::abs(jd.Jplus);
        const double minus = std::abs(ls_eigenfunction(*cfg.shell, p, Sign::Minus)(*r)) * std::abs(jd.Jminus);
        return std::max(plus, minus);
      };
      break;
    case BoundKind::Free:
      lhs = [](const SurfacePoint& p, std::optional<double> r) { return std::abs(free_eigenfunction(p)(*r)); };
      break;
    case BoundKind::Gamow:
      lhs = [&](const SurfacePoint& p, std::optional<double> r) {
        for (const auto& rn : res)
          if (rn.point.k() == p.k()) return std::abs(gamow_state(*cfg.shell, rn, *r));
        throw PreconditionError("sample is not a resonance");
      };
      break;
    case BoundKind::Sine:
      lhs = [](const SurfacePoint& p, std::optional<double> r) { return std::abs(std::sin(p.k() * *r)); };
      break;
    case BoundKind::PaleyWiener:
    case BoundKind::GelfandShilov:
      lhs = [&, q](const SurfacePoint& p, std::optional<double>) {
        return std::abs(fourier_line(*cfg.testfunction, p.k(), Sign::Minus, q).value);
      };
      break;
  }

  BoundSpec spec = o.spec;
  const BoundCheck check = verify_bound(lhs, spec, samples);

  // Recompute the per-sample ratios for the table; verify_bound reports only the summary.
  std::vector<double> lv, rv;
  for (const auto& s : samples) {
    lv.push_back(lhs(s.point, s.r));
    rv.push_back(bound_rhs(spec, s.point, s.r) / spec.C);
  }
  std::vector<std::size_t> order(samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto scale = [&](std::size_t i) { return std::abs(samples[i].point.k()) * (1.0 + samples[i].r.value_or(0.0)); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scale(a) < scale(b); });
  std::vector<bool> train(samples.size(), false), violated(samples.size(), false);
  for (std::size_t j = 0; j < check.n_train; ++j) train[order[j]] = true;
  for (std::size_t v : check.violations) violated[v] = true;

  Sink sink{cfg.output, {}};
  sink.add("csv", "verify_bounds.csv", [&] {
    CsvTable t({"k_re", "k_im", "r", "lhs", "rhs_unit", "ratio", "role", "violation"});
    for (std::size_t i = 0; i < samples.size(); ++i)
      t.add({num(samples[i].point.k().real()), num(samples[i].point.k().imag()), num(samples[i].r.value_or(NAN)),
             num(lv[i]), num(rv[i]), num(lv[i] / rv[i]), train[i] ? "train" : "test", violated[i] ? "1" : "0"});
    return t.str();
  });
  sink.add("json", "verify_bounds.json", [&] {
    json j;
    j["kind"] = to_string(kind);
    j["seed"] = cfg.seed;
    j["constants"] = {{"C", spec.C}, {"A", spec.A}, {"beta", spec.beta}, {"b_gs", spec.b_gs},
                      {"N", spec.N}, {"rate_scale", spec.rate_scale}};
    j["fitted_constant"] = number_or_null(check.fitted_constant);
    j["training_constant"] = number_or_null(check.training_constant);
    j["n_train"] = check.n_train;
    j["n_test"] = check.n_test;
    j["violations"] = check.violations;
    j["holds"] = check.violations.empty();
    return dump(j);
  });
  summary = std::string(to_string(kind)) + " bound: " + std::to_string(check.violations.size()) + " violation(s) in " +
            std::to_string(check.n_test) + " test sample(s), fitted constant " + num(check.fitted_constant);
  return sink.out;
}

}  // namespace

std::vector<Artifact> compute(const ExperimentConfig& cfg, std::string* summary) {
  std::string line;
  try {
    std::vector<Artifact> out;
    switch (cfg.experiment) {
      case Experiment::Resonances: out = resonances(cfg, line); break;
      case Experiment::Transform: out = transform(cfg, line); break;
      case Experiment::ArcScan: out = arc_scan_experiment(cfg, line); break;
      case Experiment::Qat: out = qat(cfg, line); break;
      case Experiment::VerifyBounds: out = verify_bounds(cfg, line); break;
    }
    if (summary) *summary = line;
    return out;
  } catch (const NumericalError& e) {
    throw ExperimentError(to_string(cfg.experiment), e.what(), 3);
  } catch (const PreconditionError& e) {
    throw ExperimentError(to_string(cfg.experiment), e.what(), 2);
  }
}

std::string manifest(const ExperimentConfig& cfg, const std::vector<Artifact>& artifacts) {
  json j;
  j["tool"] = "jostlab";
  j["version"] = tool_version();
  j["experiment"] = to_string(cfg.experiment);
  j["seed"] = cfg.seed;
  j["config_file"] = cfg.path.filename().string();
  j["config_sha256"] = sha256_hex(cfg.source);
  j["files"] = json::array();
  for (const auto& a : artifacts)
    j["files"].push_back({{"name", a.name}, {"bytes", a.bytes.size()}, {"sha256", sha256_hex(a.bytes)}});
  return dump(j);
}

RunResult run(const ExperimentConfig& cfg) {
  check_output_directory(cfg);
  RunResult result;
  const auto artifacts = compute(cfg, &result.summary);

  std::error_code ec;
  std::filesystem::create_directories(cfg.output.directory, ec);
  if (ec) throw IoError("cannot create " + cfg.output.directory.string() + ": " + ec.message());
  for (const auto& a : artifacts) {
    const auto path = cfg.output.directory / a.name;
    write_file(path, a.bytes);
    result.files.push_back(path);
  }
  const auto path = cfg.output.directory / "manifest.json";
  write_file(path, manifest(cfg, artifacts));
  result.files.push_back(path);
  return result;
}

int exit_code_for(const std::exception& e) {
  if (auto* x = dynamic_cast<const ExperimentError*>(&e)) return x->exit_code();
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const PreconditionError*>(&e)) return 2;
  if (dynamic_cast<const NumericalError*>(&e)) return 3;
  return 1;
}

}  // namespace jostlab::cli
