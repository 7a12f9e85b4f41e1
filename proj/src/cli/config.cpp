#include "jostlab/cli/config.hpp"

#include <unistd.h>

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "jostlab/errors.hpp"

namespace jostlab::cli {

const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::Resonances: return "resonances";
    case Experiment::Transform: return "transform";
    case Experiment::ArcScan: return "arc-scan";
    case Experiment::Qat: return "qat";
    case Experiment::VerifyBounds: return "verify-bounds";
  }
  return "?";
}

const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::Free: return "free";
    case TransformKind::LSPlus: return "ls_plus";
    case TransformKind::LSMinus: return "ls_minus";
    case TransformKind::Fourier: return "fourier";
    case TransformKind::Energy: return "energy";
  }
  return "?";
}

namespace {

int line_of(const YAML::Node& n) { return n.Mark().is_null() ? 0 : n.Mark().line + 1; }

template <typename E>
E lookup(const std::map<std::string, E>& table, const std::string& s, const std::string& field, int line) {
  auto it = table.find(s);
  if (it != table.end()) return it->second;
  std::string known;
  for (const auto& [k, _] : table) known += (known.empty() ? "" : ", ") + k;
  throw ConfigError(field, line, "unknown value '" + s + "' (expected one of: " + known + ")");
}

//! A mapping node that remembers which keys were read, so leftovers can be reported.
class Section {
 public:
  Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    if (!node_.IsMap()) throw ConfigError(path_, line_of(node_), "expected a mapping");
  }

  const std::string& path() const { return path_; }
  int line() const { return line_of(node_); }
  //! Line of the value under key, or of the section when the key is absent.
  int line(const std::string& key) const {
    const YAML::Node n = node_[key];
    return n && line_of(n) > 0 ? line_of(n) : line();
  }
  std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  YAML::Node get(const std::string& key) {
    used_.insert(key);
    return node_[key];
  }

  YAML::Node require(const std::string& key) {
    auto n = get(key);
    if (!n) throw ConfigError(field(key), line(), "missing required field");
    return n;
  }

  template <typename T>
  T scalar(const YAML::Node& n, const std::string& key, const char* what) const {
    if (!n.IsScalar()) throw ConfigError(field(key), line_of(n), std::string("expected ") + what);
    try {
      return n.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), line_of(n), std::string("expected ") + what + ", got '" + n.Scalar() + "'");
    }
  }

  double number(const std::string& key) {
    auto n = require(key);
    return finite(n, key);
  }
  double number(const std::string& key, double fallback) {
    auto n = get(key);
    return n ? finite(n, key) : fallback;
  }
  std::optional<double> maybe_number(const std::string& key) {
    auto n = get(key);
    if (!n) return std::nullopt;
    return finite(n, key);
  }
  int integer(const std::string& key, int fallback) {
    auto n = get(key);
    return n ? scalar<int>(n, key, "an integer") : fallback;
  }
  bool boolean(const std::string& key, bool fallback) {
    auto n = get(key);
    return n ? scalar<bool>(n, key, "true or false") : fallback;
  }
  std::string string(const std::string& key) { return scalar<std::string>(require(key), key, "a string"); }
  std::string string(const std::string& key, const std::string& fallback) {
    auto n = get(key);
    return n ? scalar<std::string>(n, key, "a string") : fallback;
  }

  std::vector<double> numbers(const std::string& key) {
    auto n = require(key);
    if (!n.IsSequence()) throw ConfigError(field(key), line_of(n), "expected a list of numbers");
    std::vector<double> out;
    for (const auto& item : n) out.push_back(finite(item, key));
    return out;
  }

  cplx complex(const YAML::Node& n, const std::string& key) const {
    if (!n.IsSequence() || n.size() != 2)
      throw ConfigError(field(key), line_of(n), "expected a pair [re, im]");
    return {finite(n[0], key), finite(n[1], key)};
  }

  void finish() const {
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!used_.count(key)) throw ConfigError(field(key), line_of(kv.first), "unknown field");
    }
  }

 private:
  double finite(const YAML::Node& n, const std::string& key) const {
    const double v = scalar<double>(n, key, "a number");
    if (!std::isfinite(v)) throw ConfigError(field(key), line_of(n), "expected a finite number");
    return v;
  }

  YAML::Node node_;
  std::string path_;
  std::set<std::string> used_;
};

void parse_potential(Section s, ExperimentConfig& cfg) {
  static const std::map<std::string, int> kinds{{"shell", 0}, {"barrier", 1}};
  const int kind = lookup(kinds, s.string("kind"), s.field("kind"), s.line("kind"));
  const double a = s.number("a"), b = s.number("b"), V0 = s.number("V0");
  if (kind == 0 && !(a > 0.0)) throw ConfigError(s.field("a"), s.line("a"), "shell needs a > 0");
  if (!(b > a)) throw ConfigError(s.field("b"), s.line("b"), "needs b > a (got a = " + std::to_string(a) + ", b = " + std::to_string(b) + ")");
  if (kind == 0)
    cfg.shell = ShellPotential::make(a, b, V0);
  else
    cfg.barrier = BarrierPotential::make(a, b, V0);
  s.finish();
}

void parse_testfunction(Section s, ExperimentConfig& cfg) {
  static const std::map<std::string, Family> families{{"bump", Family::CompactBump},
                                                      {"gelfand_shilov", Family::GelfandShilov},
                                                      {"gaussian", Family::Gaussian},
                                                      {"hardy_rational", Family::HardyRational}};
  static const std::map<std::string, Domain> domains{{"half_line", Domain::HalfLine},
                                                     {"full_line", Domain::FullLine}};
  const Family fam = lookup(families, s.string("family"), s.field("family"), s.line("family"));
  const Domain dom = lookup(domains, s.string("domain", "full_line"), s.field("domain"), s.line("domain"));
  auto positive = [&](const std::string& key, double v) {
    if (!(v > 0.0)) throw ConfigError(s.field(key), s.line(), "must be positive");
    return v;
  };
  switch (fam) {
    case Family::CompactBump:
      cfg.testfunction = make_bump(positive("A", s.number("A")), s.number("center", 0.0), dom);
      break;
    case Family::GelfandShilov: {
      const double alpha = positive("alpha", s.number("alpha"));
      const double a_gs = s.number("a_gs");
      if (!(a_gs > 1.0)) throw ConfigError(s.field("a_gs"), s.line("a_gs"), "needs a_gs > 1");
      cfg.testfunction = make_gs(alpha, a_gs, dom);
      break;
    }
    case Family::Gaussian:
      cfg.testfunction = make_gaussian(positive("sigma", s.number("sigma", 1.0)), dom);
      break;
    case Family::HardyRational: {
      const double im = s.number("z0_im");
      if (!(im > 0.0)) throw ConfigError(s.field("z0_im"), s.line("z0_im"), "the pole must lie in the upper half-plane");
      cfg.testfunction = make_hardy_rational(cplx(s.number("z0_re", 0.0), im));
      break;
    }
  }
  s.finish();
}

void parse_quadrature(Section s, ExperimentConfig& cfg) {
  auto& q = cfg.quadrature;
  q.rel_tol = s.number("rel_tol", q.rel_tol);
  q.max_subdivisions = s.integer("max_subdivisions", q.max_subdivisions);
  q.oscillation_splitting = s.boolean("oscillation_splitting", q.oscillation_splitting);
  if (!(q.rel_tol > 0.0 && q.rel_tol <= 1e-4))
    throw ConfigError(s.field("rel_tol"), s.line("rel_tol"), "must lie in (0, 1e-4]");
  if (q.max_subdivisions <= 0) throw ConfigError(s.field("max_subdivisions"), s.line("max_subdivisions"), "must be positive");
  s.finish();
}

void parse_scan(Section s, ExperimentConfig& cfg) {
  const int spa = s.integer("samples_per_arc", 33);
  if (spa < 1) throw ConfigError(s.field("samples_per_arc"), s.line("samples_per_arc"), "must be at least 1");
  if (s.has("R_list") == s.has("ladder"))
    throw ConfigError(s.field("R_list"), s.line("R_list"), "give exactly one of R_list or ladder");
  if (s.has("ladder")) {
    const int j = s.integer("ladder", 5);
    if (j < 0 || j > 40) throw ConfigError(s.field("ladder"), s.line("ladder"), "must lie in [0, 40]");
    cfg.scan = ScanConfig::ladder(j, spa);
  } else {
    cfg.scan.radii = s.numbers("R_list");
    cfg.scan.samples_per_arc = spa;
    if (cfg.scan.radii.empty()) throw ConfigError(s.field("R_list"), s.line("R_list"), "must not be empty");
    for (std::size_t i = 0; i < cfg.scan.radii.size(); ++i) {
      if (!(cfg.scan.radii[i] > 0.0)) throw ConfigError(s.field("R_list"), s.line("R_list"), "radii must be positive");
      if (i > 0 && !(cfg.scan.radii[i] > cfg.scan.radii[i - 1]))
        throw ConfigError(s.field("R_list"), s.line("R_list"), "radii must be strictly increasing");
    }
  }
  s.finish();
}

void parse_output(Section s, ExperimentConfig& cfg) {
  cfg.output.directory = s.string("directory", cfg.output.directory.string());
  if (s.has("formats")) {
    auto n = s.get("formats");
    if (!n.IsSequence()) throw ConfigError(s.field("formats"), line_of(n), "expected a list");
    cfg.output.formats.clear();
    for (const auto& item : n) {
      const auto f = s.scalar<std::string>(item, "formats", "a format name");
      if (f != "csv" && f != "json" && f != "svg")
        throw ConfigError(s.field("formats"), line_of(item), "unknown format '" + f + "' (csv, json, svg)");
      cfg.output.formats.insert(f);
    }
  }
  s.finish();
}

const std::map<std::string, TransformKind> kTransformKinds{{"free", TransformKind::Free},
                                                           {"ls_plus", TransformKind::LSPlus},
                                                           {"ls_minus", TransformKind::LSMinus},
                                                           {"fourier", TransformKind::Fourier},
                                                           {"energy", TransformKind::Energy}};

void parse_resonances(Section s, ExperimentConfig& cfg) {
  auto& r = cfg.resonances;
  r.k_max = s.number("k_max", r.k_max);
  r.im_max = s.number("im_max", r.im_max);
  r.tol = s.number("tol", r.tol);
  if (!(r.k_max > 0.0)) throw ConfigError(s.field("k_max"), s.line("k_max"), "must be positive");
  if (!(r.im_max > 0.0)) throw ConfigError(s.field("im_max"), s.line("im_max"), "must be positive");
  if (!(r.tol > 0.0)) throw ConfigError(s.field("tol"), s.line("tol"), "must be positive");
  s.finish();
}

void parse_transform(Section s, ExperimentConfig& cfg) {
  auto& t = cfg.transform;
  t.kind = lookup(kTransformKinds, s.string("kind"), s.field("kind"), s.line("kind"));
  if (s.has("points")) {
    auto list = s.get("points");
    if (!list.IsSequence()) throw ConfigError(s.field("points"), line_of(list), "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      Section p(list[i], s.field("points[" + std::to_string(i) + "]"));
      if (p.has("k") == p.has("z")) throw ConfigError(p.path(), p.line(), "give exactly one of k or z");
      if (p.has("k")) {
        t.points.push_back(SurfacePoint::from_momentum(p.complex(p.get("k"), "k")));
      } else {
        static const std::map<std::string, Sheet> sheets{{"I", Sheet::I}, {"II", Sheet::II}};
        const cplx z = p.complex(p.get("z"), "z");
        const Sheet sh = lookup(sheets, p.string("sheet", "I"), p.field("sheet"), p.line("sheet"));
        try {
          t.points.push_back(from_energy(z, sh));
        } catch (const Error& e) {
          throw ConfigError(p.field("z"), p.line("z"), e.what());
        }
      }
      p.finish();
    }
  }
  if (s.has("k_line")) {
    Section l(s.get("k_line"), s.field("k_line"));
    const cplx from = l.complex(l.require("from"), "from"), to = l.complex(l.require("to"), "to");
    const int n = l.integer("n", 0);
    if (n < 1) throw ConfigError(l.field("n"), l.line("n"), "must be at least 1");
    for (int i = 0; i < n; ++i) {
      const double u = n == 1 ? 0.0 : double(i) / double(n - 1);
      t.points.push_back(SurfacePoint::from_momentum(from + u * (to - from)));
    }
    l.finish();
  }
  if (t.points.empty()) throw ConfigError(s.field("points"), s.line("points"), "no evaluation points (give points or k_line)");
  s.finish();
}

void parse_arc_scan(Section s, ExperimentConfig& cfg) {
  static const std::map<std::string, GrowthModel> models{{"linear", GrowthModel::LinearInImSqrt},
                                                         {"power", GrowthModel::PowerBgs}};
  cfg.arc_scan.kind = lookup(kTransformKinds, s.string("kind"), s.field("kind"), s.line("kind"));
  cfg.arc_scan.model = lookup(models, s.string("model", "linear"), s.field("model"), s.line("model"));
  s.finish();
}

void parse_qat(Section s, ExperimentConfig& cfg) {
  auto& q = cfg.qat;
  if (s.has("t") == s.has("t_range")) throw ConfigError(s.field("t"), s.line("t"), "give exactly one of t or t_range");
  if (s.has("t")) {
    q.t = s.numbers("t");
  } else {
    Section r(s.get("t_range"), s.field("t_range"));
    const double from = r.number("from"), to = r.number("to");
    const int n = r.integer("n", 0);
    if (n < 2) throw ConfigError(r.field("n"), r.line("n"), "must be at least 2");
    for (int i = 0; i < n; ++i) q.t.push_back(from + (to - from) * double(i) / double(n - 1));
    r.finish();
  }
  if (q.t.empty()) throw ConfigError(s.field("t"), s.line("t"), "must not be empty");
  for (std::size_t i = 1; i < q.t.size(); ++i)
    if (!(q.t[i] > q.t[i - 1])) throw ConfigError(s.field("t"), s.line("t"), "times must be strictly increasing");
  q.E_max = s.number("E_max", q.E_max);
  if (!(q.E_max > 0.0)) throw ConfigError(s.field("E_max"), s.line("E_max"), "must be positive");
  if (s.has("half_line")) q.half_line = s.boolean("half_line", false);
  static const std::map<std::string, bool> modes{{"signal", false}, {"evolution", true}};
  q.evolution = lookup(modes, s.string("mode", "signal"), s.field("mode"), s.line("mode"));
  s.finish();
}

void parse_bounds(Section s, ExperimentConfig& cfg) {
  static const std::map<std::string, BoundKind> kinds{
      {"regular_solution", BoundKind::RegularSolution}, {"ls_plus_minus", BoundKind::LSPlusMinus},
      {"free", BoundKind::Free},                        {"gamow", BoundKind::Gamow},
      {"sine", BoundKind::Sine},                        {"gelfand_shilov", BoundKind::GelfandShilov},
      {"paley_wiener", BoundKind::PaleyWiener}};
  auto& b = cfg.bounds;
  b.spec.kind = lookup(kinds, s.string("kind"), s.field("kind"), s.line("kind"));
  b.spec.C = s.number("C", 1.0);
  b.spec.N = s.integer("N", 0);
  b.spec.rate_scale = s.number("rate_scale", 1.0);
  if (auto v = s.maybe_number("beta")) {
    b.spec.beta = *v;
    b.beta_given = true;
  }
  if (auto v = s.maybe_number("b_gs")) {
    b.spec.b_gs = *v;
    b.b_gs_given = true;
  }
  b.samples = s.integer("samples", b.samples);
  b.k_min = s.number("k_min", b.k_min);
  b.k_max = s.number("k_max", b.k_max);
  b.r_max = s.number("r_max", b.r_max);
  if (b.samples < 2) throw ConfigError(s.field("samples"), s.line("samples"), "must be at least 2");
  if (!(b.k_min >= 0.0)) throw ConfigError(s.field("k_min"), s.line("k_min"), "must be non-negative");
  if (!(b.k_max > b.k_min)) throw ConfigError(s.field("k_max"), s.line("k_max"), "must exceed k_min");
  if (!(b.r_max > 0.0)) throw ConfigError(s.field("r_max"), s.line("r_max"), "must be positive");
  if (b.spec.N < 0) throw ConfigError(s.field("N"), s.line("N"), "must be non-negative");
  if (!(b.spec.rate_scale > 0.0)) throw ConfigError(s.field("rate_scale"), s.line("rate_scale"), "must be positive");
  if (!(b.spec.C > 0.0)) throw ConfigError(s.field("C"), s.line("C"), "must be positive");
  s.finish();
}

//! Line of each top-level section; 0 for absent ones.
struct Lines {
  std::map<std::string, int> at_;
  int at(const std::string& s) const {
    auto it = at_.find(s);
    return it == at_.end() ? 0 : it->second;
  }
  bool present(const std::string& s) const { return at_.count(s) > 0; }
};

bool needs_shell(TransformKind k) { return k == TransformKind::LSPlus || k == TransformKind::LSMinus; }

void require_testfunction(const ExperimentConfig& cfg, const Lines& lines, const char* why) {
  if (!cfg.testfunction) throw ConfigError("testfunction", lines.at("testfunction"), std::string("missing section, needed by ") + why);
}

void require_shell(const ExperimentConfig& cfg, const Lines& lines, const char* why) {
  if (!cfg.shell) throw ConfigError("potential", lines.at("potential"), std::string("a shell potential is needed by ") + why);
}

// Cross-section checks: each experiment's required sections and compatible families.
void check_requirements(const ExperimentConfig& cfg, const Lines& lines) {
  auto need = [&](const char* section) {
    if (!lines.present(section))
      throw ConfigError(section, lines.at(section), std::string("missing section, needed by ") + to_string(cfg.experiment));
  };
  auto family_fits = [&](TransformKind k) {
    const Family fam = cfg.testfunction->family();
    const Domain dom = cfg.testfunction->domain();
    if (k == TransformKind::Energy && fam != Family::HardyRational)
      throw ConfigError("testfunction.family", lines.at("testfunction"), "kind 'energy' needs the hardy_rational family");
    if (k != TransformKind::Energy && fam == Family::HardyRational)
      throw ConfigError("testfunction.family", lines.at("testfunction"), "hardy_rational inputs only support kind 'energy'");
    if (k == TransformKind::Fourier && dom != Domain::FullLine)
      throw ConfigError("testfunction.domain", lines.at("testfunction"), "the line Fourier transform needs domain full_line");
    if ((k == TransformKind::Free || needs_shell(k)) && dom != Domain::HalfLine)
      throw ConfigError("testfunction.domain", lines.at("testfunction"), "radial transforms need domain half_line");
    if (needs_shell(k)) require_shell(cfg, lines, to_string(k));
  };

  switch (cfg.experiment) {
    case Experiment::Resonances:
      need("potential");
      require_shell(cfg, lines, "resonances");
      break;
    case Experiment::Transform:
      need("transform");
      require_testfunction(cfg, lines, "transform");
      family_fits(cfg.transform.kind);
      break;
    case Experiment::ArcScan:
      need("scan");
      require_testfunction(cfg, lines, "arc-scan");
      family_fits(cfg.arc_scan.kind);
      break;
    case Experiment::Qat:
      need("qat");
      require_testfunction(cfg, lines, "qat");
      if (cfg.testfunction->family() != Family::HardyRational) {
        if (cfg.testfunction->domain() != Domain::HalfLine)
          throw ConfigError("testfunction.domain", lines.at("testfunction"), "qat on a position-space input needs domain half_line");
        if (cfg.qat.half_line == false)
          throw ConfigError("qat.half_line", lines.at("qat"), "energy functions of radial inputs live on E >= 0");
      }
      break;
    case Experiment::VerifyBounds: {
      need("verify_bounds");
      const BoundKind k = cfg.bounds.spec.kind;
      if (k == BoundKind::RegularSolution || k == BoundKind::LSPlusMinus || k == BoundKind::Gamow)
        require_shell(cfg, lines, to_string(k));
      if (k == BoundKind::PaleyWiener) {
        require_testfunction(cfg, lines, "paley_wiener");
        if (cfg.testfunction->family() != Family::CompactBump)
          throw ConfigError("testfunction.family", lines.at("testfunction"), "paley_wiener bounds need a bump");
      }
      if (k == BoundKind::GelfandShilov) {
        require_testfunction(cfg, lines, "gelfand_shilov");
        const Family fam = cfg.testfunction->family();
        if (fam != Family::GelfandShilov && fam != Family::Gaussian)
          throw ConfigError("testfunction.family", lines.at("testfunction"), "gelfand_shilov bounds need a gelfand_shilov or gaussian input");
      }
      if ((k == BoundKind::PaleyWiener || k == BoundKind::GelfandShilov) &&
          cfg.testfunction->domain() != Domain::FullLine)
        throw ConfigError("testfunction.domain", lines.at("testfunction"), "Fourier-side bounds need domain full_line");
      break;
    }
  }
}

// Fill the Fourier-side constants the user left out from the test function.
void complete_bounds(ExperimentConfig& cfg, const Lines& lines) {
  auto& b = cfg.bounds;
  if (b.spec.kind == BoundKind::PaleyWiener) {
    const auto& p = cfg.testfunction->params();
    b.spec.A = p.A + std::abs(p.center);
  }
  if (b.spec.kind == BoundKind::GelfandShilov) {
    const auto& f = *cfg.testfunction;
    if (!b.b_gs_given) b.spec.b_gs = f.conjugate_exponent();
    if (!b.beta_given) {
      // Legendre dual of alpha |x|^a / a is |y|^b / (b alpha^(b-1))
      const double alpha = f.family() == Family::Gaussian ? 1.0 / (f.params().sigma * f.params().sigma)
                                                          : f.params().alpha;
      b.spec.beta = std::pow(alpha, 1.0 - b.spec.b_gs);
    }
  }
  try {
    b.spec.validate();
  } catch (const PreconditionError& e) {
    throw ConfigError("verify_bounds", lines.at("verify_bounds"), e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError("", e.mark.line + 1, e.msg);
  }
  if (!root || root.IsNull()) throw ConfigError("", 0, "empty config");

  ExperimentConfig cfg;
  cfg.source = text;
  cfg.path = origin;
  Section top(root, "");

  static const std::map<std::string, Experiment> experiments{{"resonances", Experiment::Resonances},
                                                             {"transform", Experiment::Transform},
                                                             {"arc-scan", Experiment::ArcScan},
                                                             {"qat", Experiment::Qat},
                                                             {"verify-bounds", Experiment::VerifyBounds}};
  cfg.experiment = lookup(experiments, top.string("experiment"), "experiment", line_of(top.get("experiment")));
  if (auto n = top.get("seed")) {
    try {
      cfg.seed = n.as<std::uint64_t>();
    } catch (const YAML::Exception&) {
      throw ConfigError("seed", line_of(n), "expected a non-negative integer");
    }
  }

  Lines lines;
  auto section = [&](const std::string& key, auto parse) {
    if (!top.has(key)) return;
    lines.at_[key] = line_of(root[key]);
    try {
      parse(Section(top.get(key), key), cfg);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(key, line_of(root[key]), e.what());
    }
  };
  section("potential", parse_potential);
  section("testfunction", parse_testfunction);
  section("quadrature", parse_quadrature);
  section("scan", parse_scan);
  section("output", parse_output);
  section("resonances", parse_resonances);
  section("transform", parse_transform);
  section("arc_scan", parse_arc_scan);
  section("qat", parse_qat);
  section("verify_bounds", parse_bounds);
  top.finish();

  if (cfg.experiment == Experiment::ArcScan && !lines.present("arc_scan"))
    throw ConfigError("arc_scan", lines.at("arc_scan"), "missing section, needed by arc-scan");
  check_requirements(cfg, lines);
  if (cfg.experiment == Experiment::VerifyBounds) complete_bounds(cfg, lines);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

void apply(ExperimentConfig& cfg, const Overrides& o) {
  if (o.output_dir) cfg.output.directory = *o.output_dir;
  if (o.seed) cfg.seed = *o.seed;
}

void check_output_directory(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  fs::path p = fs::absolute(cfg.output.directory);
  while (!p.empty() && !fs::exists(p) && p != p.parent_path()) p = p.parent_path();
  if (!fs::is_directory(p) || ::access(p.c_str(), W_OK) != 0)
    throw IoError("output directory " + cfg.output.directory.string() + " is not writable");
}

}  // namespace jostlab::cli
