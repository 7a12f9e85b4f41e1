#pragma once

#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include "jostlab/cli/config.hpp"
#include "jostlab/errors.hpp"

namespace jostlab::cli {

const char* tool_version();

//! A module error raised while an experiment was running.
class ExperimentError : public Error {
 public:
  ExperimentError(const std::string& experiment, const std::string& what, int exit_code)
      : Error(experiment + " failed: " + what), exit_code_(exit_code) {}

  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct Artifact {
  std::string name;
  std::string bytes;
};

struct RunResult {
  std::vector<std::filesystem::path> files;  // including manifest.json, last
  std::string summary;                       // one line for the terminal
};

//! The artifacts of one experiment, computed in memory.
/*! Module errors come back as ExperimentError: exit status 3 for
    NumericalError, 2 for PreconditionError. */
std::vector<Artifact> compute(const ExperimentConfig& cfg, std::string* summary = nullptr);

//! compute() followed by writing the artifacts and manifest.json.
/*! Nothing is written if the computation fails. */
RunResult run(const ExperimentConfig& cfg);

//! manifest.json text for a set of artifacts.
std::string manifest(const ExperimentConfig& cfg, const std::vector<Artifact>& artifacts);

//! 0 for success, 2 for ConfigError and PreconditionError, 3 for numerical
//! failures, 1 for anything else (I/O included).
int exit_code_for(const std::exception& e);

}  // namespace jostlab::cli
