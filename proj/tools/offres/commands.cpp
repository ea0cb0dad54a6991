#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include <json.hpp>

#include "offres/biphoton.hpp"
#include "offres/bloch.hpp"
#include "offres/cat.hpp"
#include "offres/csv.hpp"
#include "offres/dressed.hpp"
#include "offres/shift.hpp"
#include "offres/trajectory.hpp"

namespace offres::cli {

namespace {

using json = nlohmann::ordered_json;
using std::complex;

json to_json(complex<double> z) { return json::array({z.real(), z.imag()}); }

struct Binding {
    std::string key;
    CLI::Option* opt;
    std::variant<double*, std::uint64_t*, unsigned*, std::string*> target;
};

/// Options of one subcommand, kept for config-file merging and for the
/// config block every JSON summary carries.
class OptionSet {
  public:
    explicit OptionSet(CLI::App* cmd) : cmd_(cmd) {
        cmd_->add_option("--config", config_path_,
                         "config file (key = value per line, # comments); "
                         "command-line flags override it");
    }

    template <typename T>
    void add(const std::string& key, T& value, const std::string& desc) {
        auto* opt = cmd_->add_option("--" + key, value, desc);
        bindings_.push_back(Binding{key, opt, &value});
    }

    /// Assigns config-file values to options not set on the command line.
    void apply_config_file() const {
        if (config_path_.empty()) return;
        auto values = load_config_file(config_path_);
        for (const auto& binding : bindings_) {
            const auto it = values.find(binding.key);
            if (it == values.end()) continue;
            if (binding.opt->count() == 0) assign(binding, it->second);
            values.erase(it);
        }
        if (!values.empty()) {
            throw std::runtime_error("unknown config key: " +
                                     values.begin()->first);
        }
    }

    json config_json() const {
        json out;
        for (const auto& binding : bindings_) {
            std::visit(
                [&](auto* ptr) {
                    using T = std::remove_pointer_t<decltype(ptr)>;
                    if constexpr (std::is_same_v<T, std::string>) {
                        // Empty strings cannot round-trip through the
                        // key = value format; defaults re-apply anyway.
                        if (!ptr->empty()) out[binding.key] = *ptr;
                    } else {
                        out[binding.key] = *ptr;
                    }
                },
                binding.target);
        }
        return out;
    }

    CLI::App* command() { return cmd_; }

  private:
    static void assign(const Binding& binding, const std::string& text) {
        std::visit(
            [&](auto* ptr) {
                using T = std::remove_pointer_t<decltype(ptr)>;
                if constexpr (std::is_same_v<T, std::string>) {
                    *ptr = text;
                } else {
                    T parsed{};
                    const char* begin = text.data();
                    const char* end = begin + text.size();
                    const auto result = std::from_chars(begin, end, parsed);
                    if (result.ec != std::errc{} || result.ptr != end) {
                        throw std::runtime_error("bad config value for " +
                                                 binding.key + ": " + text);
                    }
                    *ptr = parsed;
                }
            },
            binding.target);
    }

    CLI::App* cmd_;
    std::string config_path_;
    std::vector<Binding> bindings_;
};

struct Command {
    std::unique_ptr<OptionSet> options;
    std::function<json(const RunConfig&)> run;  // returns the results block
    std::function<void(const RunConfig&, const std::filesystem::path&)>
        write_data;  // optional data artifact
};

std::map<std::string, Command>& registry() {
    static std::map<std::string, Command> commands;
    return commands;
}

PhysicalParams params_from(const RunConfig& cfg) {
    return PhysicalParams(cfg.gamma, cfg.detuning);
}

complex<double> beta0_from(const RunConfig& cfg) {
    return std::polar(cfg.beta0, cfg.beta0_phase);
}

PulseEnvelope envelope_from(const RunConfig& cfg) {
    if (!(cfg.dt > 0.0)) {
        throw std::domain_error("dt must be positive");
    }
    if (cfg.ramp > 0.0) {
        return PulseEnvelope::raised_cosine(beta0_from(cfg), cfg.duration,
                                            cfg.ramp, cfg.dt);
    }
    return PulseEnvelope::constant(beta0_from(cfg), cfg.duration, cfg.dt);
}

json probability_json(const ProbabilityResult& printed,
                      const ProbabilityResult& hamiltonian) {
    json out;
    out["printed"] = printed.value;
    out["hamiltonian"] = hamiltonian.value;
    return out;
}

// --- dressed -------------------------------------------------------------

json run_dressed(const RunConfig& cfg) {
    const auto params = params_from(cfg);
    const auto beta = beta0_from(cfg);
    const auto frame = dressed_frame(params, beta);
    const auto eigen = diagonalize_semiclassical(params, beta);
    const auto rates = jump_rates(params.gamma, frame.theta);
    const auto coeff =
        dressed_interaction_coefficients(params.gamma, frame.theta, frame.phi);

    json results;
    results["theta"] = frame.theta;
    results["phi"] = frame.phi;
    results["omega_beta"] = frame.omega_beta;
    results["eigensolver"] = {
        {"theta", eigen.theta},
        {"omega_beta", eigen.omega_beta},
    };
    results["jump_rates"] = {{"up", rates.up}, {"down", rates.down}};
    results["coefficients"] = {
        {"displacement", to_json(coeff.displacement)},
        {"conserving", coeff.conserving},
        {"counterrotating", coeff.counterrotating},
    };
    return results;
}

// --- shift ---------------------------------------------------------------

json run_shift(const RunConfig& cfg) {
    const auto params = params_from(cfg);
    if (!(cfg.duration > 0.0)) {
        throw std::domain_error("shift: duration must be positive");
    }
    const auto result = compute_pulse_shift(params, beta0_from(cfg), cfg.duration);
    json results;
    results["alpha_in"] = to_json(result.alpha_in);
    results["delta_alpha"] = to_json(result.delta_alpha);
    results["alpha_out"] = to_json(result.alpha_out);
    results["gammaT"] = params.gamma * cfg.duration;
    results["p_jump"] =
        probability_json(result.p_jump_printed, result.p_jump_hamiltonian);
    results["p_jump_clamped"] = {
        {"printed", result.p_jump_printed.clamped},
        {"hamiltonian", result.p_jump_hamiltonian.clamped},
    };
    results["regime_warning"] = result.regime_warning;
    results["chi"] = conditional_phase_chi(params);
    return results;
}

// --- plan ----------------------------------------------------------------

json run_plan(const RunConfig& cfg) {
    const auto variant = jump_variant_from_string(cfg.variant);
    const double gamma_t = plan_pulse(cfg.target_shift, cfg.p_budget, variant);
    json results;
    results["gammaT"] = gamma_t;
    results["variant"] = cfg.variant;
    if (gamma_t > 0.0) {
        results["p_round_trip"] =
            jump_probability_total({cfg.target_shift, 0.0}, gamma_t, variant)
                .value;
    } else {
        results["p_round_trip"] = 0.0;
    }
    return results;
}

// --- trajectory ------------------------------------------------------------

std::vector<JumpRecord> trajectory_records(const RunConfig& cfg) {
    return simulate_ensemble(envelope_from(cfg), params_from(cfg),
                             static_cast<std::size_t>(cfg.n_runs), cfg.seed,
                             cfg.threads);
}

json run_trajectory(const RunConfig& cfg) {
    const auto env = envelope_from(cfg);
    const auto records = trajectory_records(cfg);
    const auto stats = aggregate_trajectories(records, env.duration());

    json results;
    results["n_trajectories"] = stats.n_trajectories;
    results["total_time"] = stats.total_time;
    results["n_up_events"] = stats.n_up_events;
    results["mean_up_rate"] = stats.mean_up_rate;
    results["up_rate_stderr"] = stats.up_rate_stderr;
    results["n_pairs"] = stats.pair_delays.size();
    results["excited_occupancy"] = stats.excited_occupancy;
    results["adiabaticity_warning"] = stats.adiabaticity_warning;
    results["mean_photon_number"] = env.mean_photon_number();
    if (cfg.n_bins > 0 && cfg.t_max > 0.0) {
        const auto hist = pair_delay_histogram(
            stats, static_cast<std::size_t>(cfg.n_bins), cfg.t_max);
        json h;
        h["edges"] = hist.edges;
        h["counts"] = hist.counts;
        h["overflow"] = hist.overflow;
        h["mle_rate"] = hist.mle_rate;
        h["mle_rate_stderr"] = hist.mle_rate_stderr;
        h["empty"] = hist.empty;
        results["pair_delay_histogram"] = h;
    }
    return results;
}

void write_trajectory_data(const RunConfig& cfg,
                           const std::filesystem::path& path) {
    const auto records = trajectory_records(cfg);
    std::ofstream out(path);
    if (cfg.format == "json") {
        json events = json::array();
        for (std::size_t id = 0; id < records.size(); ++id) {
            for (const auto& event : records[id].events) {
                events.push_back({{"trajectory_id", id},
                                  {"time", event.time},
                                  {"kind", event.kind == JumpKind::Up ? "up"
                                                                      : "down"}});
            }
        }
        out << events.dump(2) << '\n';
    } else {
        write_jump_records_csv(out, records);
    }
}

// --- pairs -----------------------------------------------------------------

DressedFrame pairs_frame(const RunConfig& cfg) {
    return dressed_frame(params_from(cfg), beta0_from(cfg));
}

NumericSpectrum pairs_spectrum(const RunConfig& cfg) {
    FrequencyGridSpec spec;
    spec.half_width_span = cfg.span;
    spec.n_tau = static_cast<std::size_t>(cfg.n_tau);
    spec.omega_window = cfg.omega_window;
    return biphoton_freq_numeric(pairs_frame(cfg), cfg.gamma, spec);
}

BiphotonGrid pairs_time_grid(const RunConfig& cfg) {
    const auto frame = pairs_frame(cfg);
    const double gp = gamma_prime(frame, cfg.gamma);
    const double tau_max = cfg.tau_max > 0.0 ? cfg.tau_max : 8.0 / gp;
    return biphoton_time_grid(frame, cfg.gamma, tau_max,
                              static_cast<std::size_t>(cfg.n_samples));
}

json run_pairs(const RunConfig& cfg) {
    const auto params = params_from(cfg);
    const auto frame = pairs_frame(cfg);
    json results;
    results["theta"] = frame.theta;
    results["omega_beta"] = frame.omega_beta;
    results["gamma_prime"] = gamma_prime(frame, params.gamma);
    results["pair_rate"] = pair_rate(frame, params.gamma);
    results["jump_rate_up"] = jump_rate_up(params.gamma, frame.theta);
    results["psi_at_zero"] = to_json(biphoton_time(0.0, frame, params.gamma));
    if (cfg.omega_light > 0.0 && cfg.omega_atom > 0.0) {
        const auto bands = sideband_frequencies(cfg.omega_light, cfg.omega_atom);
        results["sidebands"] = json::array({bands.first, bands.second});
    }
    if (cfg.axis == "frequency") {
        const auto spectrum = pairs_spectrum(cfg);
        results["parseval"] = {
            {"time_integral", spectrum.parseval_time_integral},
            {"frequency_sum", spectrum.parseval_freq_sum},
            {"closed_form_rate", spectrum.closed_form_rate},
        };
        const auto& cmp = spectrum.comparison;
        results["comparison"] = {
            {"hwhm_numeric_pos", cmp.hwhm_numeric_pos},
            {"hwhm_numeric_neg", cmp.hwhm_numeric_neg},
            {"hwhm_closed_pos", cmp.hwhm_closed_pos},
            {"hwhm_closed_neg", cmp.hwhm_closed_neg},
            {"max_dev_exact_rel", cmp.max_dev_exact_rel},
            {"max_dev_closed_rel", cmp.max_dev_closed_rel},
            {"note", cmp.note},
        };
    } else if (cfg.axis != "time") {
        throw std::domain_error("pairs: axis must be time or frequency");
    }
    return results;
}

void write_pairs_data(const RunConfig& cfg, const std::filesystem::path& path) {
    const auto grid =
        cfg.axis == "frequency" ? pairs_spectrum(cfg).grid : pairs_time_grid(cfg);
    std::ofstream out(path);
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < grid.axis_values.size(); ++i) {
            rows.push_back({grid.axis_values[i], grid.values[i].real(),
                            grid.values[i].imag()});
        }
        out << rows.dump() << '\n';
    } else {
        write_biphoton_grid_csv(out, grid);
    }
}

// --- cat -------------------------------------------------------------------

json run_cat(const RunConfig& cfg) {
    const double chi =
        cfg.chi >= 0.0 ? cfg.chi : conditional_phase_chi(params_from(cfg));
    const auto alpha = std::polar(cfg.alpha, cfg.alpha_phase);
    const auto gate = conditional_phase(chi, alpha, AtomQubit::plus());
    const auto cat = cat_output(alpha, chi);
    const auto overlap =
        coherent_overlap(gate.g.field_amplitude, gate.d.field_amplitude);

    json results;
    results["chi"] = chi;
    results["alpha"] = to_json(alpha);
    results["branches"] = {
        {"g",
         {{"atom", to_json(gate.g.atom_amplitude)},
          {"field", to_json(gate.g.field_amplitude)}}},
        {"d",
         {{"atom", to_json(gate.d.atom_amplitude)},
          {"field", to_json(gate.d.field_amplitude)}}},
    };
    results["overlap"] = to_json(overlap);
    results["overlap_abs"] = std::abs(overlap);
    results["norm2"] = cat.norm2;
    results["distinguishability"] = cat.distinguishability;
    results["fidelity_bound"] = cat_fidelity_bound(cfg.p_jump);
    results["regime_warning"] = gate.regime_warning;
    return results;
}

// --- oracle ----------------------------------------------------------------

std::vector<BlochSample> oracle_series(const RunConfig& cfg) {
    const auto params = params_from(cfg);
    const auto env =
        PulseEnvelope::constant(beta0_from(cfg), cfg.evolve_duration,
                                cfg.evolve_duration);
    const double omega_beta = dressed_splitting(params, cfg.beta0);
    const double dt =
        cfg.integrator_dt > 0.0
            ? cfg.integrator_dt
            : 0.04 / std::max(omega_beta, 2.0 * params.gamma);
    return bloch_evolve(DensityMatrix2::ground(), env, params, dt);
}

json run_oracle(const RunConfig& cfg) {
    const auto params = params_from(cfg);
    const auto rho = bloch_steady_state(params, beta0_from(cfg));
    const auto beta_out = oracle_output_amplitude(params, beta0_from(cfg));
    const double theta = mixing_angle(params, cfg.beta0);
    const double s = std::sin(0.5 * theta);

    json results;
    results["rho_ee"] = rho.rho_ee();
    results["rho_eg"] = to_json(rho.rho_eg());
    results["dressed_prediction_sin2"] = s * s;
    results["beta_out"] = to_json(beta_out);
    results["output_phase"] =
        cfg.beta0 > 0.0 ? std::arg(beta_out / beta0_from(cfg)) : 0.0;
    results["linear_response_phase"] = -2.0 * params.gamma / params.omega_delta;
    if (cfg.evolve_duration > 0.0) {
        const auto series = oracle_series(cfg);
        results["final_rho_ee"] = series.back().rho.rho_ee();
        results["n_steps"] = series.size() - 1;
    }
    return results;
}

void write_oracle_data(const RunConfig& cfg, const std::filesystem::path& path) {
    if (!(cfg.evolve_duration > 0.0)) return;
    const auto series = oracle_series(cfg);
    std::ofstream out(path);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& sample : series) {
            rows.push_back({sample.t, sample.rho.rho_ee(),
                            sample.rho.rho_ge().real(),
                            sample.rho.rho_ge().imag()});
        }
        out << rows.dump() << '\n';
    } else {
        write_bloch_series_csv(out, series);
    }
}

// --- sweep -----------------------------------------------------------------

std::vector<double> sweep_values(const RunConfig& cfg) {
    if (cfg.steps == 0) throw std::domain_error("sweep: steps must be >= 1");
    std::vector<double> values;
    const auto n = static_cast<std::size_t>(cfg.steps);
    for (std::size_t i = 0; i < n; ++i) {
        const double f =
            n == 1 ? 0.0
                   : static_cast<double>(i) / static_cast<double>(n - 1);
        values.push_back(cfg.from + f * (cfg.to - cfg.from));
    }
    return values;
}

struct SweepRow {
    double value;
    DressedFrame frame;
    JumpRates rates;
    complex<double> coeff;
    double rate_printed;
    double rate_hamiltonian;
};

std::vector<SweepRow> sweep_rows(const RunConfig& cfg) {
    std::vector<SweepRow> rows;
    for (const double value : sweep_values(cfg)) {
        RunConfig point = cfg;
        if (cfg.param == "beta0") {
            point.beta0 = value;
        } else if (cfg.param == "detuning") {
            point.detuning = value;
        } else {
            throw std::domain_error("sweep: param must be beta0 or detuning");
        }
        const auto params = params_from(point);
        const auto frame = dressed_frame(params, beta0_from(point));
        rows.push_back(SweepRow{
            value, frame, jump_rates(params.gamma, frame.theta),
            shift_coefficient(params, beta0_from(point)),
            instantaneous_jump_rate(params, point.beta0, JumpVariant::Printed)
                .value,
            instantaneous_jump_rate(params, point.beta0,
                                    JumpVariant::Hamiltonian)
                .value});
    }
    return rows;
}

json run_sweep(const RunConfig& cfg) {
    const auto rows = sweep_rows(cfg);
    json results;
    results["param"] = cfg.param;
    results["n_rows"] = rows.size();
    results["first_value"] = rows.front().value;
    results["last_value"] = rows.back().value;
    return results;
}

void write_sweep_data(const RunConfig& cfg, const std::filesystem::path& path) {
    const auto rows = sweep_rows(cfg);
    std::ofstream out(path);
    out << cfg.param
        << ",theta,omega_beta,jump_rate_up,jump_rate_down,shift_coeff_re,"
           "shift_coeff_im,inst_rate_printed,inst_rate_hamiltonian\n";
    for (const auto& row : rows) {
        out << format_double(row.value) << ',' << format_double(row.frame.theta)
            << ',' << format_double(row.frame.omega_beta) << ','
            << format_double(row.rates.up) << ',' << format_double(row.rates.down)
            << ',' << format_double(row.coeff.real()) << ','
            << format_double(row.coeff.imag()) << ','
            << format_double(row.rate_printed) << ','
            << format_double(row.rate_hamiltonian) << '\n';
    }
}

// --- registration ----------------------------------------------------------

void add_physics_options(OptionSet& set, RunConfig& cfg) {
    set.add("gamma", cfg.gamma, "dipole relaxation rate (default 1)");
    set.add("detuning", cfg.detuning, "detuning omega_atom - omega_light");
    set.add("beta0", cfg.beta0, "drive amplitude magnitude");
    set.add("beta0-phase", cfg.beta0_phase, "drive phase [rad]");
}

void add_output_options(OptionSet& set, RunConfig& cfg) {
    set.add("output-dir", cfg.output_dir,
            "artifact directory (default $OFFRES_OUTPUT_DIR or .)");
    set.add("label", cfg.label, "artifact base name (default: command name)");
    set.add("format", cfg.format, "data artifact format: csv or json");
}

}  // namespace

CommandSet::CommandSet(CLI::App& app, RunConfig& cfg) : app_(app), cfg_(cfg) {
    auto& commands = registry();
    commands.clear();

    auto make = [&](const std::string& name, const std::string& desc) -> OptionSet& {
        auto* cmd = app_.add_subcommand(name, desc);
        auto& entry = commands[name];
        entry.options = std::make_unique<OptionSet>(cmd);
        return *entry.options;
    };

    {
        auto& set = make("dressed", "dressed-state angle, splitting and rates");
        add_physics_options(set, cfg_);
        add_output_options(set, cfg_);
        commands["dressed"].run = run_dressed;
    }
    {
        auto& set = make("shift", "coherent amplitude shift of a rectangular pulse");
        add_physics_options(set, cfg_);
        set.add("duration", cfg_.duration, "pulse duration T");
        add_output_options(set, cfg_);
        commands["shift"].run = run_shift;
    }
    {
        auto& set = make("plan", "pulse length for a target shift within a jump budget");
        set.add("target-shift", cfg_.target_shift, "desired |delta alpha|");
        set.add("p-budget", cfg_.p_budget, "allowed total jump probability");
        set.add("variant", cfg_.variant, "jump-rate variant: printed or hamiltonian");
        add_output_options(set, cfg_);
        commands["plan"].run = run_plan;
    }
    {
        auto& set = make("trajectory", "Monte Carlo dressed-state jump trajectories");
        add_physics_options(set, cfg_);
        set.add("duration", cfg_.duration, "pulse duration T");
        set.add("dt", cfg_.dt, "envelope sample spacing");
        set.add("ramp", cfg_.ramp, "raised-cosine ramp time (0: rectangular)");
        set.add("n-runs", cfg_.n_runs, "number of trajectories");
        set.add("seed", cfg_.seed, "master seed");
        set.add("threads", cfg_.threads, "worker threads (results identical)");
        set.add("n-bins", cfg_.n_bins, "pair-delay histogram bins (0: off)");
        set.add("t-max", cfg_.t_max, "pair-delay histogram upper edge");
        add_output_options(set, cfg_);
        commands["trajectory"].run = run_trajectory;
        commands["trajectory"].write_data = write_trajectory_data;
    }
    {
        auto& set = make("pairs", "photon-pair amplitude in time or frequency");
        add_physics_options(set, cfg_);
        set.add("axis", cfg_.axis, "grid axis: time or frequency");
        set.add("tau-max", cfg_.tau_max, "time-grid half span (0: 8/gamma')");
        set.add("n-samples", cfg_.n_samples, "time-grid samples");
        set.add("span", cfg_.span, "frequency grid: half-widths of time support");
        set.add("n-tau", cfg_.n_tau, "frequency grid: time samples (power of 2)");
        set.add("omega-window", cfg_.omega_window,
                "frequency window (0: omega_beta + 10 gamma')");
        set.add("omega-light", cfg_.omega_light, "absolute carrier frequency");
        set.add("omega-atom", cfg_.omega_atom, "absolute atomic frequency");
        add_output_options(set, cfg_);
        commands["pairs"].run = run_pairs;
        commands["pairs"].write_data = write_pairs_data;
    }
    {
        auto& set = make("cat", "conditional phase gate and cat-state output");
        add_physics_options(set, cfg_);
        set.add("alpha", cfg_.alpha, "coherent amplitude magnitude");
        set.add("alpha-phase", cfg_.alpha_phase, "coherent amplitude phase [rad]");
        set.add("chi", cfg_.chi, "gate phase (negative: use 2 gamma/detuning)");
        set.add("p-jump", cfg_.p_jump, "jump probability for the fidelity bound");
        add_output_options(set, cfg_);
        commands["cat"].run = run_cat;
    }
    {
        auto& set = make("oracle", "density-matrix steady state and output amplitude");
        add_physics_options(set, cfg_);
        set.add("evolve-duration", cfg_.evolve_duration,
                "integrate from the ground state for this long (0: off)");
        set.add("integrator-dt", cfg_.integrator_dt,
                "RK4 step (0: 0.04/max(omega_beta, 2 gamma))");
        add_output_options(set, cfg_);
        commands["oracle"].run = run_oracle;
        commands["oracle"].write_data = write_oracle_data;
    }
    {
        auto& set = make("sweep", "tabulate dressed/shift quantities over a parameter");
        add_physics_options(set, cfg_);
        set.add("param", cfg_.param, "swept parameter: beta0 or detuning");
        set.add("from", cfg_.from, "first value");
        set.add("to", cfg_.to, "last value");
        set.add("steps", cfg_.steps, "number of grid points");
        add_output_options(set, cfg_);
        commands["sweep"].run = run_sweep;
        commands["sweep"].write_data = write_sweep_data;
    }
}

int CommandSet::run_active() {
    for (auto& [name, command] : registry()) {
        auto* cmd = command.options->command();
        if (!cmd->parsed()) continue;

        command.options->apply_config_file();
        if (cfg_.format != "csv" && cfg_.format != "json") {
            throw std::runtime_error("format must be csv or json");
        }

        const std::string label = cfg_.label.empty() ? name : cfg_.label;
        const std::filesystem::path dir =
            cfg_.output_dir.empty() ? "." : cfg_.output_dir;
        std::filesystem::create_directories(dir);

        json summary;
        summary["command"] = name;
        summary["config"] = command.options->config_json();
        summary["results"] = command.run(cfg_);

        json artifacts = json::array();
        if (command.write_data) {
            const auto data_path =
                dir / (label + (cfg_.format == "json" ? "_data.json" : ".csv"));
            command.write_data(cfg_, data_path);
            // Only report artifacts that were actually produced.
            if (std::filesystem::exists(data_path)) {
                artifacts.push_back(data_path.filename().string());
            }
        }
        summary["artifacts"] = artifacts;

        const std::string text = summary.dump(2) + "\n";
        std::ofstream(dir / (label + ".json")) << text;
        std::cout << text;
        return 0;
    }
    throw std::runtime_error("no subcommand selected");
}

}  // namespace offres::cli
