#pragma once

#include <Eigen/Dense>
#include <complex>

#include "offres/params.hpp"

namespace offres {

/// Frame of the coherently driven atom: mixing angle theta between bare and
/// dressed bases, drive phase phi, and dressed splitting omega_beta.
struct DressedFrame {
    double theta;
    double phi;
    double omega_beta;
};

/// Transition rates between the dressed states (up: g' -> e', down: e' -> g').
struct JumpRates {
    double up;
    double down;
};

/// Coefficients of the three field-coupling terms in the dressed-frame
/// Hamiltonian, reported per unit sqrt(c): the sigma_z'-type displacement
/// term, the excitation-conserving term and the counter-rotating term.
struct DressedInteractionCoefficients {
    std::complex<double> displacement;
    double conserving;
    double counterrotating;
};

/// theta = arctan(2 sqrt(2 gamma) |beta| / omega_delta). Requires a positive
/// detuning (the model assumes off-resonant drive).
double mixing_angle(const PhysicalParams& params, double beta_mag);

/// Eigenvalue gap of the semiclassical two-level Hamiltonian,
/// sqrt(omega_delta^2 + 8 gamma |beta|^2).
double dressed_splitting(const PhysicalParams& params, double beta_mag);

/// Semiclassical drive Hamiltonian omega_delta*sigma_z
/// - sqrt(2 gamma)(beta sigma_+ + conj(beta) sigma_-), basis {e, g}.
Eigen::Matrix2cd semiclassical_hamiltonian(const PhysicalParams& params,
                                           std::complex<double> beta);

/// Dressed frame obtained by numerically diagonalizing the semiclassical
/// Hamiltonian; serves as the eigensolver cross-check for mixing_angle and
/// dressed_splitting.
DressedFrame diagonalize_semiclassical(const PhysicalParams& params,
                                       std::complex<double> beta);

/// Dressed frame from the closed forms (no eigensolve).
DressedFrame dressed_frame(const PhysicalParams& params,
                           std::complex<double> beta);

/// Rate of g' -> e' transitions, 2 gamma sin^4(theta/2).
double jump_rate_up(double gamma, double theta);

/// Rate of e' -> g' transitions, 2 gamma cos^4(theta/2).
double jump_rate_down(double gamma, double theta);

JumpRates jump_rates(double gamma, double theta);

/// Transformed atomic lowering operator sigma'_- expressed in the bare
/// basis {e, g}:
///   cos^2(theta/2) sigma_-  -  e^{2 i phi} sin^2(theta/2) sigma_+
///   -  e^{i phi} sin(theta) sigma_z.
Eigen::Matrix2cd dressed_lowering_matrix(double theta, double phi);

DressedInteractionCoefficients dressed_interaction_coefficients(double gamma,
                                                                double theta,
                                                                double phi);

}  // namespace offres
