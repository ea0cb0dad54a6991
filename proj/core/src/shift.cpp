#include "offres/shift.hpp"

#include <cmath>
#include <stdexcept>

namespace offres {

using std::complex;

std::string_view to_string(JumpVariant v) {
    return v == JumpVariant::Printed ? "printed" : "hamiltonian";
}

JumpVariant jump_variant_from_string(std::string_view s) {
    if (s == "printed") return JumpVariant::Printed;
    if (s == "hamiltonian") return JumpVariant::Hamiltonian;
    throw std::domain_error("unknown jump-rate variant: " + std::string(s));
}

complex<double> shift_coefficient(const PhysicalParams& params,
                                  complex<double> beta) {
    if (!(params.omega_delta > 0.0)) {
        throw std::domain_error("shift_coefficient: detuning must be positive");
    }
    const double denom = std::hypot(
        params.omega_delta, std::sqrt(8.0 * params.gamma) * std::abs(beta));
    return 2.0 * params.gamma / denom * beta;
}

PulseEnvelope output_envelope(const PulseEnvelope& env,
                              const PhysicalParams& params) {
    std::vector<complex<double>> out(env.size());
    const auto in = env.samples();
    const complex<double> rot{0.0, -1.0};
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = in[i] + rot * shift_coefficient(params, in[i]);
    }
    return PulseEnvelope(env.dt(), std::move(out));
}

complex<double> pulse_shift(complex<double> beta0, double duration,
                            const PhysicalParams& params) {
    if (!(duration > 0.0)) {
        throw std::domain_error("pulse_shift: duration must be positive");
    }
    if (!(params.omega_delta > 0.0)) {
        throw std::domain_error("pulse_shift: detuning must be positive");
    }
    return complex<double>{0.0, -1.0} * (2.0 * params.gamma / params.omega_delta) *
           beta0 * std::sqrt(duration);
}

RateResult instantaneous_jump_rate(const PhysicalParams& params,
                                   double beta0_mag, JumpVariant variant) {
    if (beta0_mag < 0.0) {
        throw std::domain_error(
            "instantaneous_jump_rate: |beta0| must be nonnegative");
    }
    if (!(params.omega_delta > 0.0)) {
        throw std::domain_error(
            "instantaneous_jump_rate: detuning must be positive");
    }
    const bool warn =
        params.omega_delta < 10.0 * std::sqrt(8.0 * params.gamma) * beta0_mag;
    // Printed: (1/2 gamma) |2 (2 gamma/omega_delta) beta0|^4
    //        = 128 gamma^3 |beta0|^4 / omega_delta^4.
    // Hamiltonian: small-angle limit of 2 gamma sin^4(theta/2)
    //        = 8 gamma^3 |beta0|^4 / omega_delta^4. Exactly 16x apart.
    const double base = std::pow(std::sqrt(2.0 * params.gamma) * beta0_mag /
                                     params.omega_delta,
                                 4) *
                        2.0 * params.gamma;
    const double value = (variant == JumpVariant::Printed) ? 16.0 * base : base;
    return RateResult{value, warn};
}

ProbabilityResult jump_probability_total(complex<double> delta_alpha,
                                         double gamma_t, JumpVariant variant) {
    if (!(gamma_t > 0.0)) {
        throw std::domain_error(
            "jump_probability_total: gamma*T must be positive");
    }
    const double a = std::abs(delta_alpha);
    double p = std::pow(2.0 * a, 4) / (2.0 * gamma_t);
    if (variant == JumpVariant::Hamiltonian) p /= 16.0;
    if (p > 1.0) return ProbabilityResult{1.0, true, p};
    return ProbabilityResult{p, false, p};
}

double plan_pulse(double target_shift, double p_budget, JumpVariant variant) {
    if (!(p_budget > 0.0) || p_budget > 1.0) {
        throw std::domain_error("plan_pulse: p_budget must lie in (0, 1]");
    }
    if (target_shift < 0.0) {
        throw std::domain_error("plan_pulse: target shift must be nonnegative");
    }
    double gamma_t = std::pow(2.0 * target_shift, 4) / (2.0 * p_budget);
    if (variant == JumpVariant::Hamiltonian) gamma_t /= 16.0;
    return gamma_t;
}

ShiftResult compute_pulse_shift(const PhysicalParams& params,
                                complex<double> beta0, double duration) {
    const complex<double> alpha_in = beta0 * std::sqrt(duration);
    const complex<double> delta = pulse_shift(beta0, duration, params);
    const double gamma_t = params.gamma * duration;
    const bool warn =
        instantaneous_jump_rate(params, std::abs(beta0), JumpVariant::Printed)
            .regime_warning;
    return ShiftResult{
        delta,
        alpha_in,
        alpha_in + delta,
        jump_probability_total(delta, gamma_t, JumpVariant::Printed),
        jump_probability_total(delta, gamma_t, JumpVariant::Hamiltonian),
        warn};
}

}  // namespace offres
