#include <cstdlib>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "run_config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"off-resonant atom-light interaction toolkit"};
    app.require_subcommand(1);

    offres::cli::RunConfig cfg;
    if (const char* dir = std::getenv("OFFRES_OUTPUT_DIR")) {
        cfg.output_dir = dir;
    } else {
        cfg.output_dir = ".";
    }

    offres::cli::CommandSet commands(app, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return commands.run_active();
    } catch (const std::runtime_error& e) {
        // Config-file and option-consistency problems are argument errors.
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
