#include "offres/cat.hpp"

#include <cmath>
#include <stdexcept>

namespace offres {

using std::complex;

AtomQubit::AtomQubit(complex<double> g_amplitude, complex<double> d_amplitude)
    : g(g_amplitude), d(d_amplitude) {
    const double n2 = std::norm(g) + std::norm(d);
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw std::domain_error("AtomQubit: amplitudes must be normalizable");
    }
    const double inv = 1.0 / std::sqrt(n2);
    g *= inv;
    d *= inv;
}

ConditionalPhaseResult conditional_phase(double chi, complex<double> alpha,
                                         const AtomQubit& atom) {
    if (chi < 0.0) {
        throw std::domain_error("conditional_phase: chi must be nonnegative");
    }
    ConditionalPhaseResult result;
    result.d = {atom.d, alpha};
    result.g = {atom.g, alpha * std::polar(1.0, -chi)};
    result.regime_warning = chi > 0.5;
    return result;
}

double conditional_phase_chi(const PhysicalParams& params) {
    if (!(params.omega_delta > 0.0)) {
        throw std::domain_error("conditional_phase_chi: detuning must be positive");
    }
    return 2.0 * params.gamma / params.omega_delta;
}

complex<double> coherent_overlap(complex<double> a1, complex<double> a2) {
    return std::exp(-0.5 * std::norm(a1) - 0.5 * std::norm(a2) +
                    std::conj(a1) * a2);
}

CatState cat_output(complex<double> alpha, double chi) {
    const complex<double> rotated = alpha * std::polar(1.0, -chi);
    const complex<double> overlap = coherent_overlap(rotated, alpha);
    CatState cat;
    cat.components = {{rotated, {1.0, 0.0}}, {alpha, {1.0, 0.0}}};
    cat.norm2 = 2.0 + 2.0 * overlap.real();
    cat.distinguishability = 1.0 - std::norm(overlap);
    return cat;
}

double cat_fidelity_bound(double p_jump) {
    if (!(p_jump >= 0.0) || p_jump > 1.0) {
        throw std::domain_error("cat_fidelity_bound: p_jump must lie in [0, 1]");
    }
    return 1.0 - p_jump;
}

}  // namespace offres
