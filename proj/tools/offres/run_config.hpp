#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace offres::cli {

/// Flat option bag shared by all subcommands. Values come from defaults,
/// then an optional key = value config file, then command-line flags.
struct RunConfig {
    // Physical parameters.
    double gamma = 1.0;  // default units: times measured in 1/gamma
    double detuning = 0.0;
    double beta0 = 0.0;
    double beta0_phase = 0.0;
    double duration = 0.0;
    double dt = 0.0;
    double ramp = 0.0;

    // plan
    double target_shift = 0.0;
    double p_budget = 0.1;
    std::string variant = "printed";

    // trajectory
    std::uint64_t n_runs = 1;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::uint64_t n_bins = 0;
    double t_max = 0.0;

    // pairs
    std::string axis = "time";
    double tau_max = 0.0;
    std::uint64_t n_samples = 1001;
    double span = 80.0;
    std::uint64_t n_tau = std::uint64_t{1} << 20;
    double omega_window = 0.0;
    double omega_light = 0.0;
    double omega_atom = 0.0;

    // cat
    double alpha = 0.0;
    double alpha_phase = 0.0;
    double chi = -1.0;  // negative: derive 2 gamma / detuning
    double p_jump = 0.0;

    // oracle
    double evolve_duration = 0.0;
    double integrator_dt = 0.0;

    // sweep
    std::string param = "beta0";
    double from = 0.0;
    double to = 1.0;
    std::uint64_t steps = 11;

    // Output handling.
    std::string output_dir;  // default: $OFFRES_OUTPUT_DIR or "."
    std::string label;       // default: subcommand name
    std::string format = "csv";

    std::string config_path;  // not part of the round-trip surface
};

/// Parses a plain-text config file: one `key = value` per line, `#` starts
/// a comment, blank lines ignored. Throws std::runtime_error on malformed
/// lines.
std::map<std::string, std::string> load_config_file(const std::string& path);

}  // namespace offres::cli
