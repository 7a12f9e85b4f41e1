#include <CLI11.hpp>

#include <iostream>

#include "jostlab/cli/config.hpp"
#include "jostlab/cli/runner.hpp"

namespace cli = jostlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Resonances, transforms and Hardy-class checks for piecewise constant potentials"};
  app.set_version_flag("--version", std::string(cli::tool_version()));
  app.require_subcommand(1);

  std::string config;
  std::string output_dir;
  std::uint64_t seed = 0;
  bool quiet = false;

  auto* run = app.add_subcommand("run", "run the experiment described by a config file");
  auto* validate = app.add_subcommand("validate", "parse and check a config file without running it");
  for (auto* sub : {run, validate}) {
    sub->add_option("config", config, "experiment config (YAML)")->required();
    sub->add_option("--output-dir", output_dir, "override output.directory");
    sub->add_option("--seed", seed, "override seed");
    sub->add_flag("--quiet,-q", quiet, "print nothing on success");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    auto cfg = cli::load_config(config);
    cli::Overrides o;
    const auto* sub = app.got_subcommand(run) ? run : validate;
    if (sub->count("--output-dir")) o.output_dir = output_dir;
    if (sub->count("--seed")) o.seed = seed;
    cli::apply(cfg, o);

    if (sub == validate) {
      cli::check_output_directory(cfg);
      if (!quiet) std::cout << config << ": ok (" << cli::to_string(cfg.experiment) << ")\n";
      return 0;
    }
    const auto result = cli::run(cfg);
    if (!quiet) {
      std::cout << result.summary << "\n";
      for (const auto& f : result.files) std::cout << "  wrote " << f.string() << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "jostlab: " << e.what() << "\n";
    return cli::exit_code_for(e);
  }
}
