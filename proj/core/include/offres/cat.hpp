#pragma once

#include <complex>
#include <vector>

#include "offres/params.hpp"

namespace offres {

/// Qubit on the non-interacting basis {g, d} of the three-level atom (the
/// excited state stays virtual). Normalized on construction.
struct AtomQubit {
    std::complex<double> g;
    std::complex<double> d;

    AtomQubit(std::complex<double> g_amplitude, std::complex<double> d_amplitude);

    static AtomQubit pure_g() { return {1.0, 0.0}; }
    static AtomQubit pure_d() { return {0.0, 1.0}; }
    static AtomQubit plus() { return {1.0, 1.0}; }
};

/// Unnormalized superposition of coherent states sum_i w_i |alpha_i>.
struct CatComponent {
    std::complex<double> amplitude;
    std::complex<double> weight;
};

struct CatState {
    std::vector<CatComponent> components;
    double norm2;
    /// 1 - |<alpha_0|alpha_1>|^2 for the two-component case.
    double distinguishability;
};

/// Entangled atom-field state after the conditional phase gate:
/// the d branch keeps |alpha>, the g branch acquires |e^{-i chi} alpha>.
struct ConditionalPhaseResult {
    struct Branch {
        std::complex<double> atom_amplitude;
        std::complex<double> field_amplitude;
    };
    Branch g;
    Branch d;
    /// Set when chi is outside the dispersive regime chi << 1.
    bool regime_warning;
};

ConditionalPhaseResult conditional_phase(double chi, std::complex<double> alpha,
                                         const AtomQubit& atom);

/// Gate phase chi = 2 gamma / omega_delta for the given parameters.
double conditional_phase_chi(const PhysicalParams& params);

/// Coherent-state inner product <a1|a2> =
/// exp(-|a1|^2/2 - |a2|^2/2 + conj(a1) a2).
std::complex<double> coherent_overlap(std::complex<double> a1,
                                      std::complex<double> a2);

/// Unnormalized |e^{-i chi} alpha> + |alpha> heralded by measuring the atom
/// in (|g> + |d>)/sqrt(2) after the gate.
CatState cat_output(std::complex<double> alpha, double chi);

/// Jump-limited gate fidelity model F = 1 - p_jump: a single jump reveals
/// the atomic branch completely.
double cat_fidelity_bound(double p_jump);

}  // namespace offres
