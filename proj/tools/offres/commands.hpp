#pragma once

#include <CLI11.hpp>

#include "run_config.hpp"

namespace offres::cli {

/// Registers all subcommands on the app and dispatches the parsed one.
class CommandSet {
  public:
    CommandSet(CLI::App& app, RunConfig& cfg);

    /// Applies a config file (flags win), runs the active subcommand and
    /// returns its exit status. Throws std::runtime_error for config-file
    /// problems (argument errors) and propagates domain errors.
    int run_active();

  private:
    CLI::App& app_;
    RunConfig& cfg_;
};

}  // namespace offres::cli
