#include "offres/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "offres/dressed.hpp"
#include "offres/rng.hpp"

namespace offres {

namespace {

bool adiabaticity_ok(const PulseEnvelope& env, const PhysicalParams& params) {
    const auto samples = env.samples();
    if (samples.size() < 2) return true;
    double prev_theta = mixing_angle(params, std::abs(samples[0]));
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double mag = std::abs(samples[i]);
        const double theta = mixing_angle(params, mag);
        const double omega_beta = dressed_splitting(params, mag);
        if (std::abs(theta - prev_theta) / env.dt() > 0.01 * omega_beta) {
            return false;
        }
        prev_theta = theta;
    }
    return true;
}

}  // namespace

JumpRecord simulate_trajectory(const PulseEnvelope& env,
                               const PhysicalParams& params,
                               std::uint64_t seed) {
    const double duration = env.duration();
    const double lambda_max = 2.0 * params.gamma;  // sin^4, cos^4 <= 1

    JumpRecord record;
    record.seed = seed;
    record.envelope_id = env.content_hash();
    record.adiabaticity_warning = !adiabaticity_ok(env, params);

    RandomStream rng(seed);
    bool excited = false;
    double t = 0.0;
    // Thinning: propose at the global bound, accept with rate(t)/lambda_max.
    for (;;) {
        t += rng.exponential(lambda_max);
        if (t >= duration) break;
        const double theta = mixing_angle(params, std::abs(env.at_time(t)));
        const double rate = excited ? jump_rate_down(params.gamma, theta)
                                    : jump_rate_up(params.gamma, theta);
        if (rng.uniform() * lambda_max < rate) {
            record.events.push_back(
                {t, excited ? JumpKind::Down : JumpKind::Up});
            excited = !excited;
        }
    }
    record.final_state =
        excited ? DressedStateLabel::Excited : DressedStateLabel::Ground;
    return record;
}

std::vector<JumpRecord> simulate_ensemble(const PulseEnvelope& env,
                                          const PhysicalParams& params,
                                          std::size_t n_runs,
                                          std::uint64_t master_seed,
                                          unsigned n_threads) {
    if (n_runs == 0) {
        throw std::domain_error("simulate_ensemble: n_runs must be at least 1");
    }
    if (n_threads == 0) n_threads = 1;

    std::vector<JumpRecord> records(n_runs);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            records[i] =
                simulate_trajectory(env, params, derive_stream_seed(master_seed, i));
        }
    };
    if (n_threads == 1 || n_runs == 1) {
        worker(0, n_runs);
    } else {
        const std::size_t used = std::min<std::size_t>(n_threads, n_runs);
        std::vector<std::thread> pool;
        pool.reserve(used);
        const std::size_t chunk = (n_runs + used - 1) / used;
        for (std::size_t k = 0; k < used; ++k) {
            const std::size_t begin = k * chunk;
            const std::size_t end = std::min(begin + chunk, n_runs);
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

TrajectoryStats aggregate_trajectories(const std::vector<JumpRecord>& records,
                                       double duration) {
    // Aggregation runs in trajectory order, independent of scheduling.
    TrajectoryStats stats;
    stats.n_trajectories = records.size();
    stats.total_time = duration * static_cast<double>(records.size());

    double rate_sum = 0.0;
    double rate_sq_sum = 0.0;
    double excited_time = 0.0;
    for (const auto& record : records) {
        stats.adiabaticity_warning |= record.adiabaticity_warning;
        std::size_t ups = 0;
        double t_up = 0.0;
        for (const auto& event : record.events) {
            if (event.kind == JumpKind::Up) {
                ++ups;
                t_up = event.time;
            } else {
                stats.pair_delays.push_back(event.time - t_up);
                excited_time += event.time - t_up;
            }
        }
        if (record.final_state == DressedStateLabel::Excited) {
            excited_time += duration - t_up;
        }
        stats.n_up_events += ups;
        const double rate = static_cast<double>(ups) / duration;
        rate_sum += rate;
        rate_sq_sum += rate * rate;
    }
    const auto n = static_cast<double>(records.size());
    stats.mean_up_rate = rate_sum / n;
    if (records.size() > 1) {
        const double var =
            (rate_sq_sum - rate_sum * rate_sum / n) / (n - 1.0);
        stats.up_rate_stderr = std::sqrt(std::max(var, 0.0) / n);
    }
    stats.excited_occupancy = excited_time / stats.total_time;
    return stats;
}

TrajectoryStats run_ensemble(const PulseEnvelope& env,
                             const PhysicalParams& params, std::size_t n_runs,
                             std::uint64_t master_seed, unsigned n_threads) {
    return aggregate_trajectories(
        simulate_ensemble(env, params, n_runs, master_seed, n_threads),
        env.duration());
}

DelayHistogram pair_delay_histogram(const TrajectoryStats& stats,
                                    std::size_t n_bins, double t_max) {
    if (n_bins == 0 || !(t_max > 0.0)) {
        throw std::domain_error(
            "pair_delay_histogram: need n_bins >= 1 and t_max > 0");
    }
    DelayHistogram hist;
    hist.edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i) {
        hist.edges[i] = t_max * static_cast<double>(i) / static_cast<double>(n_bins);
    }
    hist.counts.assign(n_bins, 0);
    hist.n_pairs = stats.pair_delays.size();
    if (hist.n_pairs == 0) return hist;  // empty flag stays set

    hist.empty = false;
    double delay_sum = 0.0;
    for (const double d : stats.pair_delays) {
        delay_sum += d;
        if (d >= t_max) {
            ++hist.overflow;
        } else {
            const auto bin =
                static_cast<std::size_t>(d / t_max * static_cast<double>(n_bins));
            ++hist.counts[std::min(bin, n_bins - 1)];
        }
    }
    const auto n = static_cast<double>(hist.n_pairs);
    hist.mle_rate = n / delay_sum;
    hist.mle_rate_stderr = hist.mle_rate / std::sqrt(n);
    return hist;
}

}  // namespace offres
