#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "jostlab/arcscan.hpp"
#include "jostlab/bounds.hpp"
#include "jostlab/potentials.hpp"
#include "jostlab/quadrature.hpp"
#include "jostlab/surface.hpp"
#include "jostlab/testfuncs.hpp"

namespace jostlab::cli {

enum class Experiment { Resonances, Transform, ArcScan, Qat, VerifyBounds };

const char* to_string(Experiment e);

//! Which energy representation an experiment evaluates.
enum class TransformKind { Free, LSPlus, LSMinus, Fourier, Energy };

const char* to_string(TransformKind k);

struct OutputSpec {
  std::filesystem::path directory = "out";
  std::set<std::string> formats{"csv", "json", "svg"};

  bool wants(const std::string& fmt) const { return formats.count(fmt) > 0; }
};

struct ResonanceOptions {
  double k_max = 6.0;
  double im_max = 2.0;
  double tol = 1e-10;
};

struct TransformOptions {
  TransformKind kind = TransformKind::Free;
  std::vector<SurfacePoint> points;  // for Fourier the momentum is the variable q
};

struct ArcScanOptions {
  TransformKind kind = TransformKind::Free;
  GrowthModel model = GrowthModel::LinearInImSqrt;
};

struct QatOptions {
  std::vector<double> t;
  double E_max = 1e3;
  std::optional<bool> half_line;  // unset: full line for rational inputs, half line otherwise
  bool evolution = false;         // integrate |fhat|^2 instead of fhat
};

struct BoundOptions {
  BoundSpec spec;
  bool beta_given = false;
  bool b_gs_given = false;
  int samples = 200;
  double k_min = 0.05;
  double k_max = 10.0;
  double r_max = 5.0;
};

//! A parsed and validated experiment description.
struct ExperimentConfig {
  Experiment experiment = Experiment::Resonances;
  std::uint64_t seed = 0;
  std::optional<ShellPotential> shell;
  std::optional<BarrierPotential> barrier;
  std::optional<TestFunction> testfunction;
  QuadratureConfig quadrature;
  ScanConfig scan;
  OutputSpec output;

  ResonanceOptions resonances;
  TransformOptions transform;
  ArcScanOptions arc_scan;
  QatOptions qat;
  BoundOptions bounds;

  std::string source;  // raw config text, hashed into the manifest
  std::filesystem::path path;
};

//! Parses YAML text. Throws ConfigError naming the offending field and line.
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& origin = {});

//! Reads and parses a config file; IoError when it cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);

//! Flags that override values of the file.
struct Overrides {
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::uint64_t> seed;
};

void apply(ExperimentConfig& cfg, const Overrides& o);

//! Throws IoError unless the output directory exists and is writable or can be created.
void check_output_directory(const ExperimentConfig& cfg);

}  // namespace jostlab::cli
