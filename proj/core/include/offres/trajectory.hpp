#pragma once

#include <cstdint>
#include <vector>

#include "offres/params.hpp"

namespace offres {

enum class JumpKind { Up, Down };
enum class DressedStateLabel { Ground, Excited };

struct JumpEvent {
    double time;
    JumpKind kind;
};

/// One stochastic realization of the dressed two-state jump process. Events
/// strictly alternate starting with Up (the atom starts in g').
struct JumpRecord {
    std::vector<JumpEvent> events;
    std::uint64_t seed;
    std::uint64_t envelope_id;
    DressedStateLabel final_state;
    /// Set when |dtheta/dt| exceeded 0.01 * omega_beta somewhere along the
    /// envelope, i.e. the adiabatic-following assumption is questionable.
    bool adiabaticity_warning;
};

struct TrajectoryStats {
    std::size_t n_trajectories = 0;
    double total_time = 0.0;
    std::size_t n_up_events = 0;
    /// Up events per unit time, averaged over trajectories, with the
    /// across-trajectory standard error (0 when n_trajectories < 2).
    double mean_up_rate = 0.0;
    double up_rate_stderr = 0.0;
    /// Delays t_down - t_up of completed jump pairs, in trajectory order.
    std::vector<double> pair_delays;
    /// Fraction of total time spent in e'.
    double excited_occupancy = 0.0;
    bool adiabaticity_warning = false;
};

struct DelayHistogram {
    std::vector<double> edges;
    std::vector<std::size_t> counts;
    std::size_t overflow = 0;
    std::size_t n_pairs = 0;
    /// Maximum-likelihood exponential rate 1/mean(delays) and its standard
    /// error rate/sqrt(n).
    double mle_rate = 0.0;
    double mle_rate_stderr = 0.0;
    bool empty = true;
};

/// Exact sampling of the inhomogeneous two-state jump process by thinning
/// against the global bound 2*gamma. Deterministic in (env, params, seed).
JumpRecord simulate_trajectory(const PulseEnvelope& env,
                               const PhysicalParams& params,
                               std::uint64_t seed);

/// Independent trajectories with per-trajectory seeds derived from
/// master_seed; records come back in trajectory order whatever n_threads is.
std::vector<JumpRecord> simulate_ensemble(const PulseEnvelope& env,
                                          const PhysicalParams& params,
                                          std::size_t n_runs,
                                          std::uint64_t master_seed,
                                          unsigned n_threads = 1);

TrajectoryStats aggregate_trajectories(const std::vector<JumpRecord>& records,
                                       double duration);

/// simulate_ensemble + aggregate_trajectories in one call.
TrajectoryStats run_ensemble(const PulseEnvelope& env,
                             const PhysicalParams& params, std::size_t n_runs,
                             std::uint64_t master_seed,
                             unsigned n_threads = 1);

DelayHistogram pair_delay_histogram(const TrajectoryStats& stats,
                                    std::size_t n_bins, double t_max);

}  // namespace offres
