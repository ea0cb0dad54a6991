#pragma once

#include <complex>
#include <string_view>

#include "offres/params.hpp"

namespace offres {

/// The two published forms of the weak-drive quantum-jump rate differ by an
/// exact factor of 16. `Hamiltonian` is the small-angle limit of the dressed
/// transition rate 2 gamma sin^4(theta/2); `Printed` is the form the pulse
/// planning budget P = |2 delta_alpha|^4 / (2 gamma T) is built on. Both are
/// first-class so either bookkeeping can be reproduced; `Printed` is the
/// default.
enum class JumpVariant { Printed, Hamiltonian };

std::string_view to_string(JumpVariant v);
JumpVariant jump_variant_from_string(std::string_view s);

/// Amplitude-shift coefficient (1/2) sqrt(2 gamma) sin(theta) e^{i phi},
/// equal to 2 gamma beta / sqrt(omega_delta^2 + 8 gamma |beta|^2).
std::complex<double> shift_coefficient(const PhysicalParams& params,
                                       std::complex<double> beta);

/// Pointwise output envelope beta_out(t) = beta(t) - i * shift_coefficient.
/// Uses the saturated coefficient, so it reduces to the linear response
/// beta (1 - 2 i gamma / omega_delta) in the weak-excitation limit.
PulseEnvelope output_envelope(const PulseEnvelope& env,
                              const PhysicalParams& params);

/// Pulse-integrated amplitude shift of a rectangular pulse,
/// delta_alpha = -i (2 gamma / omega_delta) beta0 sqrt(T).
std::complex<double> pulse_shift(std::complex<double> beta0, double duration,
                                 const PhysicalParams& params);

struct RateResult {
    double value;
    /// Set when the weak-excitation assumption omega_delta >> sqrt(8 gamma)
    /// |beta0| underlying both variants is violated.
    bool regime_warning;
};

/// Weak-excitation jump rate for a constant amplitude beta0.
RateResult instantaneous_jump_rate(const PhysicalParams& params,
                                   double beta0_mag, JumpVariant variant);

struct ProbabilityResult {
    double value;
    /// True when the perturbative formula exceeded 1 and was clamped; the
    /// raw value is kept for inspection.
    bool clamped;
    double raw;
};

/// Total jump probability over a pulse:
/// |2 delta_alpha|^4 / (2 gamma T) for Printed, 1/16 of that for Hamiltonian.
ProbabilityResult jump_probability_total(std::complex<double> delta_alpha,
                                         double gamma_t, JumpVariant variant);

/// Inverse of jump_probability_total: the dimensionless pulse length
/// gamma*T that realizes the target shift within the jump budget.
double plan_pulse(double target_shift, double p_budget, JumpVariant variant);

/// Pulse-level summary for a rectangular pulse: input/output amplitudes,
/// shift, and the jump-probability budget under both variants.
struct ShiftResult {
    std::complex<double> delta_alpha;
    std::complex<double> alpha_in;
    std::complex<double> alpha_out;
    ProbabilityResult p_jump_printed;
    ProbabilityResult p_jump_hamiltonian;
    bool regime_warning;
};

ShiftResult compute_pulse_shift(const PhysicalParams& params,
                                std::complex<double> beta0, double duration);

}  // namespace offres
