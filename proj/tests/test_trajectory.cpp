#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "offres/biphoton.hpp"
#include "offres/csv.hpp"
#include "offres/dressed.hpp"
#include "offres/rng.hpp"
#include "offres/trajectory.hpp"
#include "support/ks.hpp"

using namespace offres;

namespace {

// Constant envelope whose amplitude realizes the requested mixing angle.
PulseEnvelope envelope_for_theta(double theta, const PhysicalParams& p,
                                 double duration, double dt) {
    const double mag =
        p.omega_delta * std::tan(theta) / (2.0 * std::sqrt(2.0 * p.gamma));
    return PulseEnvelope::constant({mag, 0.0}, duration, dt);
}

}  // namespace

TEST_CASE("zero envelope produces no events") {
    const PhysicalParams p(1.0, 50.0);
    const auto env = PulseEnvelope::constant({0.0, 0.0}, 100.0, 1.0);
    const auto record = simulate_trajectory(env, p, 1234);
    CHECK(record.events.empty());
    CHECK(record.final_state == DressedStateLabel::Ground);
    const auto stats = run_ensemble(env, p, 8, 99);
    CHECK(stats.mean_up_rate == 0.0);
    CHECK(stats.excited_occupancy == 0.0);
}

TEST_CASE("determinism in (env, params, seed)") {
    const PhysicalParams p(1.0, 20.0);
    const auto env = envelope_for_theta(0.8, p, 2000.0, 1.0);
    const auto a = simulate_trajectory(env, p, 42);
    const auto b = simulate_trajectory(env, p, 42);
    REQUIRE(a.events.size() == b.events.size());
    CHECK(a.events.size() > 0);
    for (std::size_t i = 0; i < a.events.size(); ++i) {
        CHECK(a.events[i].time == b.events[i].time);
        CHECK(a.events[i].kind == b.events[i].kind);
    }
    CHECK(a.envelope_id == b.envelope_id);
    const auto c = simulate_trajectory(env, p, 43);
    CHECK((a.events.size() != c.events.size() ||
           a.events[0].time != c.events[0].time));
}

TEST_CASE("events alternate starting with up") {
    const PhysicalParams p(1.0, 10.0);
    const auto env = envelope_for_theta(1.0, p, 500.0, 0.5);
    for (std::uint64_t seed : {1ull, 7ull, 2024ull}) {
        const auto record = simulate_trajectory(env, p, seed);
        REQUIRE(record.events.size() > 1);
        double prev_time = 0.0;
        for (std::size_t i = 0; i < record.events.size(); ++i) {
            const auto expected = (i % 2 == 0) ? JumpKind::Up : JumpKind::Down;
            CHECK(record.events[i].kind == expected);
            CHECK(record.events[i].time > prev_time);
            CHECK(record.events[i].time <= env.duration());
            prev_time = record.events[i].time;
        }
        const auto final_expected = (record.events.size() % 2 == 1)
                                        ? DressedStateLabel::Excited
                                        : DressedStateLabel::Ground;
        CHECK(record.final_state == final_expected);
    }
}

TEST_CASE("ensemble statistics match the dressed rates") {
    const PhysicalParams p(1.0, 100.0);
    const double theta = 0.2;
    const auto env = envelope_for_theta(theta, p, 10000.0, 10.0);
    const auto stats = run_ensemble(env, p, 100, 31415, 4);
    CHECK(stats.n_trajectories == 100);
    CHECK(stats.total_time == doctest::Approx(1e6));

    const double expected_rate = jump_rate_up(p.gamma, theta);
    CHECK(expected_rate == doctest::Approx(1.986706594796396e-4).epsilon(1e-12));
    CHECK(std::abs(stats.mean_up_rate - expected_rate) <=
          3.0 * stats.up_rate_stderr);

    // Stationary occupancy of e' from two-state balance. The estimator sums
    // ~n_pairs exponential dwell times, so its relative spread is
    // sqrt(2/n_pairs).
    const auto rates = jump_rates(p.gamma, theta);
    const double expected_occ = rates.up / (rates.up + rates.down);
    const double occ_stderr =
        expected_occ *
        std::sqrt(2.0 / static_cast<double>(stats.pair_delays.size()));
    CHECK(std::abs(stats.excited_occupancy - expected_occ) <=
          3.0 * occ_stderr);
}

TEST_CASE("thread count does not change results") {
    const PhysicalParams p(1.0, 50.0);
    const auto env = envelope_for_theta(0.35, p, 5000.0, 5.0);
    const auto serial = run_ensemble(env, p, 24, 777, 1);
    const auto parallel = run_ensemble(env, p, 24, 777, 8);
    CHECK(serial.n_up_events == parallel.n_up_events);
    CHECK(serial.mean_up_rate == parallel.mean_up_rate);
    CHECK(serial.up_rate_stderr == parallel.up_rate_stderr);
    CHECK(serial.excited_occupancy == parallel.excited_occupancy);
    REQUIRE(serial.pair_delays.size() == parallel.pair_delays.size());
    for (std::size_t i = 0; i < serial.pair_delays.size(); ++i) {
        CHECK(serial.pair_delays[i] == parallel.pair_delays[i]);
    }
}

TEST_CASE("waiting times in g' are exponential (KS)") {
    // Inter-up waits: from entering g' (or t = 0) to the next up jump.
    const PhysicalParams p(1.0, 10.0);
    const double theta = 0.8;
    const auto env = envelope_for_theta(theta, p, 25000.0, 25.0);
    const double up_rate = jump_rate_up(p.gamma, theta);

    std::vector<double> waits;
    for (std::uint64_t run = 0; waits.size() < 10000; ++run) {
        const auto record = simulate_trajectory(env, p, derive_stream_seed(5150, run));
        double entered_g = 0.0;
        for (const auto& event : record.events) {
            if (event.kind == JumpKind::Up) {
                waits.push_back(event.time - entered_g);
            } else {
                entered_g = event.time;
            }
        }
    }
    waits.resize(10000);
    const double pvalue = test::ks_exponential_pvalue(waits, up_rate);
    CHECK(pvalue > 0.01);
}

TEST_CASE("pair delays fit the relaxation rate") {
    const PhysicalParams p(1.0, 100.0);
    const double theta = 0.2;
    // 2 gamma cos^4(theta/2); needs ~1e4 pairs for a 5% window.
    const double expected = jump_rate_down(p.gamma, theta);
    CHECK(expected == doctest::Approx(1.9603318263419633).epsilon(1e-12));

    const auto env = envelope_for_theta(theta, p, 1e5, 50.0);
    const auto stats = run_ensemble(env, p, 600, 8675309, 8);
    REQUIRE(stats.pair_delays.size() > 10000);
    const auto hist = pair_delay_histogram(stats, 64, 6.0);
    CHECK_FALSE(hist.empty);
    CHECK(std::abs(hist.mle_rate - expected) <= 0.05 * expected);
    CHECK(std::abs(hist.mle_rate - expected) <= 3.0 * hist.mle_rate_stderr);

    SUBCASE("histogram mass is conserved") {
        std::size_t total = hist.overflow;
        for (const auto c : hist.counts) total += c;
        CHECK(total == stats.pair_delays.size());
        CHECK(hist.n_pairs == stats.pair_delays.size());
    }
}

TEST_CASE("pair delays follow the pair-amplitude envelope") {
    // |psi(tau)|^2 normalized over tau > 0 is Exp(2 gamma'); the simulated
    // delay distribution must carry the same rate parameter.
    const PhysicalParams p(1.0, 30.0);
    const double theta = 0.5;
    const auto env = envelope_for_theta(theta, p, 20000.0, 20.0);
    const auto stats = run_ensemble(env, p, 40, 1861, 4);
    REQUIRE(stats.pair_delays.size() > 2000);

    const auto frame = dressed_frame(
        p, {p.omega_delta * std::tan(theta) / (2.0 * std::sqrt(2.0 * p.gamma)),
            0.0});
    const double rate = 2.0 * gamma_prime(frame, p.gamma);
    CHECK(rate == doctest::Approx(jump_rate_down(p.gamma, theta)).epsilon(1e-12));
    const double pvalue = test::ks_exponential_pvalue(stats.pair_delays, rate);
    CHECK(pvalue > 0.01);
}

TEST_CASE("empty pair list yields flagged histogram") {
    const PhysicalParams p(1.0, 50.0);
    const auto env = PulseEnvelope::constant({0.0, 0.0}, 10.0, 1.0);
    const auto stats = run_ensemble(env, p, 4, 1);
    const auto hist = pair_delay_histogram(stats, 8, 1.0);
    CHECK(hist.empty);
    CHECK(hist.n_pairs == 0);
    CHECK(hist.mle_rate == 0.0);
}

TEST_CASE("ensemble argument validation") {
    const PhysicalParams p(1.0, 50.0);
    const auto env = PulseEnvelope::constant({0.1, 0.0}, 10.0, 1.0);
    CHECK_THROWS_AS(run_ensemble(env, p, 0, 1), std::domain_error);
    CHECK_THROWS_AS(pair_delay_histogram(TrajectoryStats{}, 0, 1.0),
                    std::domain_error);
}

TEST_CASE("adiabaticity warning on fast ramps") {
    const PhysicalParams p(1.0, 2.0);
    // Instant jump from 0 to a large amplitude: dtheta/dt >> 0.01 omega_beta.
    std::vector<std::complex<double>> samples(100, {5.0, 0.0});
    samples[0] = {0.0, 0.0};
    const auto env = PulseEnvelope(0.01, samples);
    const auto record = simulate_trajectory(env, p, 3);
    CHECK(record.adiabaticity_warning);

    const auto slow = PulseEnvelope::constant({5.0, 0.0}, 1.0, 0.01);
    CHECK_FALSE(simulate_trajectory(slow, p, 3).adiabaticity_warning);
}

TEST_CASE("jump record CSV layout") {
    const PhysicalParams p(1.0, 10.0);
    const auto env = envelope_for_theta(0.9, p, 100.0, 1.0);
    std::vector<JumpRecord> records{simulate_trajectory(env, p, 1),
                                    simulate_trajectory(env, p, 2)};
    std::ostringstream out;
    write_jump_records_csv(out, records);
    const auto text = out.str();
    CHECK(text.rfind("trajectory_id,time,kind\n", 0) == 0);
    CHECK(text.find(",up\n") != std::string::npos);
    CHECK(text.find("1,") != std::string::npos);
}
