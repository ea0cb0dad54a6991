#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "offres/bloch.hpp"
#include "offres/dressed.hpp"
#include "offres/shift.hpp"

using namespace offres;
using std::complex;

TEST_CASE("shift coefficient: both closed forms agree") {
    // (1/2) sqrt(2 gamma) sin(theta) e^{i phi} vs
    // 2 gamma beta / sqrt(detuning^2 + 8 gamma |beta|^2).
    for (double gamma : {0.1, 1.0, 10.0}) {
        for (double detuning : {0.5, 5.0, 50.0, 500.0}) {
            for (double mag : {0.01, 0.1, 1.0, 10.0}) {
                const PhysicalParams p(gamma, detuning);
                const auto beta = std::polar(mag, 0.7);
                const auto coeff = shift_coefficient(p, beta);
                const double theta = mixing_angle(p, mag);
                const auto alt = 0.5 * std::sqrt(2.0 * gamma) * std::sin(theta) *
                                 std::polar(1.0, 0.7);
                CHECK(std::abs(coeff - alt) <= 1e-12 * std::abs(alt));
            }
        }
    }
    const PhysicalParams p(1.0, 100.0);
    CHECK(shift_coefficient(p, {1.0, 0.0}).real() ==
          doctest::Approx(0.019992004796802236).epsilon(1e-12));
    CHECK(std::abs(shift_coefficient(p, {0.0, 0.0})) == 0.0);
    CHECK(shift_coefficient(PhysicalParams(0.5, 2.0), {1.0, 0.0}).real() ==
          doctest::Approx(0.35355339059327373).epsilon(1e-12));
}

TEST_CASE("output envelope") {
    const PhysicalParams p(1.0, 100.0);
    SUBCASE("constant pulse") {
        const auto env = PulseEnvelope::constant({1.0, 0.0}, 10.0, 0.5);
        const auto out = output_envelope(env, p);
        for (const auto& s : out.samples()) {
            CHECK(s.real() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(s.imag() == doctest::Approx(-0.019992004796802236).epsilon(1e-12));
            // Weak-excitation linear response to first order.
            CHECK(s.imag() == doctest::Approx(-0.02).epsilon(1e-3));
        }
    }
    SUBCASE("zero envelope maps to zero") {
        const auto env = PulseEnvelope::constant({0.0, 0.0}, 5.0, 1.0);
        const auto out = output_envelope(env, p);
        for (const auto& s : out.samples()) CHECK(std::abs(s) == 0.0);
    }
    SUBCASE("agrees with the density-matrix oracle to 2%") {
        const auto env = PulseEnvelope::constant({1.0, 0.0}, 10.0, 0.5);
        const auto out = output_envelope(env, p).samples()[0];
        const auto oracle = oracle_output_amplitude(p, {1.0, 0.0});
        CHECK(std::arg(out) == doctest::Approx(std::arg(oracle)).epsilon(0.02));
        CHECK(std::abs(out) == doctest::Approx(std::abs(oracle)).epsilon(0.02));
    }
}

TEST_CASE("pulse shift") {
    const PhysicalParams p(1.0, 100.0);
    const auto delta = pulse_shift({1.0, 0.0}, 100.0, p);
    CHECK(delta.real() == doctest::Approx(0.0));
    CHECK(delta.imag() == doctest::Approx(-0.2).epsilon(1e-14));
    CHECK(std::abs(pulse_shift({0.0, 0.0}, 10.0, p)) == 0.0);

    SUBCASE("sqrt(T) and |beta0| scaling") {
        const auto base = pulse_shift({0.5, 0.0}, 4.0, p);
        CHECK(std::abs(pulse_shift({0.5, 0.0}, 16.0, p)) ==
              doctest::Approx(2.0 * std::abs(base)).epsilon(1e-14));
        CHECK(std::abs(pulse_shift({1.5, 0.0}, 4.0, p)) ==
              doctest::Approx(3.0 * std::abs(base)).epsilon(1e-14));
    }
}

TEST_CASE("instantaneous jump rate variants") {
    const PhysicalParams p(1.0, 100.0);
    const auto printed = instantaneous_jump_rate(p, 1.0, JumpVariant::Printed);
    const auto ham = instantaneous_jump_rate(p, 1.0, JumpVariant::Hamiltonian);
    CHECK(printed.value == doctest::Approx(1.28e-6).epsilon(1e-12));
    CHECK(ham.value == doctest::Approx(8.0e-8).epsilon(1e-12));
    CHECK_FALSE(printed.regime_warning);
    CHECK(instantaneous_jump_rate(p, 0.0, JumpVariant::Printed).value == 0.0);
    CHECK(instantaneous_jump_rate(p, 0.0, JumpVariant::Hamiltonian).value == 0.0);

    SUBCASE("ratio is exactly 16 across the weak-excitation grid") {
        for (double gamma : {0.1, 1.0, 4.0}) {
            for (double detuning : {20.0, 100.0, 700.0}) {
                for (double mag : {0.01, 0.3, 1.0}) {
                    const PhysicalParams grid_point(gamma, detuning);
                    const double a =
                        instantaneous_jump_rate(grid_point, mag, JumpVariant::Printed)
                            .value;
                    const double b =
                        instantaneous_jump_rate(grid_point, mag,
                                                JumpVariant::Hamiltonian)
                            .value;
                    if (mag > 0.0) CHECK(a / b == doctest::Approx(16.0).epsilon(1e-9));
                }
            }
        }
    }

    SUBCASE("regime warning outside weak excitation") {
        CHECK(instantaneous_jump_rate(PhysicalParams(1.0, 1.0), 1.0,
                                      JumpVariant::Printed)
                  .regime_warning);
    }
}

TEST_CASE("total jump probability and planning") {
    const auto p = jump_probability_total({0.0, -1.88}, 1000.0, JumpVariant::Printed);
    CHECK(p.value == doctest::Approx(0.09993586688).epsilon(1e-12));
    CHECK_FALSE(p.clamped);
    const auto ph =
        jump_probability_total({0.0, -1.88}, 1000.0, JumpVariant::Hamiltonian);
    CHECK(ph.value == doctest::Approx(0.09993586688 / 16.0).epsilon(1e-12));
    CHECK(jump_probability_total({0.0, 0.0}, 10.0, JumpVariant::Printed).value ==
          0.0);
    CHECK_THROWS_AS(jump_probability_total({1.0, 0.0}, 0.0, JumpVariant::Printed),
                    std::domain_error);

    SUBCASE("clamping with validity flag") {
        const auto big =
            jump_probability_total({10.0, 0.0}, 1.0, JumpVariant::Printed);
        CHECK(big.value == 1.0);
        CHECK(big.clamped);
        CHECK(big.raw > 1.0);
    }

    SUBCASE("plan examples") {
        CHECK(plan_pulse(1.88, 0.1, JumpVariant::Printed) ==
              doctest::Approx(999.3586688).epsilon(1e-12));
        CHECK(plan_pulse(1.0, 0.1, JumpVariant::Printed) ==
              doctest::Approx(80.0).epsilon(1e-14));
        CHECK(plan_pulse(0.0, 0.5, JumpVariant::Printed) == 0.0);
        CHECK_THROWS_AS(plan_pulse(1.0, 0.0, JumpVariant::Printed),
                        std::domain_error);
        CHECK_THROWS_AS(plan_pulse(1.0, 1.5, JumpVariant::Printed),
                        std::domain_error);
        CHECK_THROWS_AS(plan_pulse(-1.0, 0.5, JumpVariant::Printed),
                        std::domain_error);
    }

    SUBCASE("planning round-trips to 1e-12 relative") {
        for (const auto variant : {JumpVariant::Printed, JumpVariant::Hamiltonian}) {
            for (double target : {0.1, 0.5, 1.0, 1.88, 5.0}) {
                for (double budget : {0.01, 0.1, 0.5, 1.0}) {
                    const double gamma_t = plan_pulse(target, budget, variant);
                    const auto round =
                        jump_probability_total({target, 0.0}, gamma_t, variant);
                    CHECK(std::abs(round.raw - budget) <= 1e-12 * budget);
                }
            }
        }
    }
}

TEST_CASE("pulse-level shift summary") {
    const PhysicalParams p(1.0, 100.0);
    const auto result = compute_pulse_shift(p, {1.0, 0.0}, 100.0);
    CHECK(result.alpha_in.real() == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(result.delta_alpha.imag() == doctest::Approx(-0.2).epsilon(1e-14));
    CHECK(std::abs(result.alpha_out - result.alpha_in - result.delta_alpha) ==
          0.0);
    CHECK(result.p_jump_printed.value ==
          doctest::Approx(16.0 * result.p_jump_hamiltonian.value).epsilon(1e-12));
    CHECK(result.p_jump_printed.value >= 0.0);
    CHECK(result.p_jump_printed.value <= 1.0);
}

TEST_CASE("variant tags") {
    CHECK(to_string(JumpVariant::Printed) == "printed");
    CHECK(to_string(JumpVariant::Hamiltonian) == "hamiltonian");
    CHECK(jump_variant_from_string("printed") == JumpVariant::Printed);
    CHECK(jump_variant_from_string("hamiltonian") == JumpVariant::Hamiltonian);
    CHECK_THROWS_AS(jump_variant_from_string("bogus"), std::domain_error);
}
