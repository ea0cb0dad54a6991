#include "offres/dressed.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace offres {

using std::complex;

double mixing_angle(const PhysicalParams& params, double beta_mag) {
    if (!(params.omega_delta > 0.0)) {
        throw std::domain_error("mixing_angle: detuning must be positive");
    }
    if (beta_mag < 0.0) {
        throw std::domain_error("mixing_angle: |beta| must be nonnegative");
    }
    return std::atan(2.0 * std::sqrt(2.0 * params.gamma) * beta_mag /
                     params.omega_delta);
}

double dressed_splitting(const PhysicalParams& params, double beta_mag) {
    if (beta_mag < 0.0) {
        throw std::domain_error("dressed_splitting: |beta| must be nonnegative");
    }
    return std::hypot(params.omega_delta,
                      std::sqrt(8.0 * params.gamma) * beta_mag);
}

Eigen::Matrix2cd semiclassical_hamiltonian(const PhysicalParams& params,
                                           complex<double> beta) {
    const double g = std::sqrt(2.0 * params.gamma);
    Eigen::Matrix2cd h;
    h(0, 0) = 0.5 * params.omega_delta;
    h(0, 1) = -g * beta;
    h(1, 0) = -g * std::conj(beta);
    h(1, 1) = -0.5 * params.omega_delta;
    return h;
}

DressedFrame diagonalize_semiclassical(const PhysicalParams& params,
                                       complex<double> beta) {
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
        throw std::domain_error("diagonalize_semiclassical: beta must be finite");
    }
    const Eigen::Matrix2cd h = semiclassical_hamiltonian(params, beta);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
    const auto& values = solver.eigenvalues();
    const Eigen::Vector2cd upper = solver.eigenvectors().col(1);
    // Upper dressed state e' = cos(theta/2)|e> - e^{-i phi} sin(theta/2)|g>;
    // the magnitudes alone pin theta without fixing eigenvector phases.
    const double theta = 2.0 * std::atan2(std::abs(upper(1)), std::abs(upper(0)));
    const double phi = (beta == complex<double>{0.0, 0.0})
                           ? 0.0
                           : std::arg(beta);
    return DressedFrame{theta, phi, values(1) - values(0)};
}

DressedFrame dressed_frame(const PhysicalParams& params, complex<double> beta) {
    const double mag = std::abs(beta);
    return DressedFrame{mixing_angle(params, mag),
                        beta == complex<double>{0.0, 0.0} ? 0.0 : std::arg(beta),
                        dressed_splitting(params, mag)};
}

double jump_rate_up(double gamma, double theta) {
    const double s = std::sin(0.5 * theta);
    return 2.0 * gamma * s * s * s * s;
}

double jump_rate_down(double gamma, double theta) {
    const double c = std::cos(0.5 * theta);
    return 2.0 * gamma * c * c * c * c;
}

JumpRates jump_rates(double gamma, double theta) {
    return {jump_rate_up(gamma, theta), jump_rate_down(gamma, theta)};
}

Eigen::Matrix2cd dressed_lowering_matrix(double theta, double phi) {
    const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    const double s = std::sin(theta);
    const complex<double> eip = std::polar(1.0, phi);
    const complex<double> ei2p = std::polar(1.0, 2.0 * phi);
    // Basis {e, g}: sigma_- = |g><e|, sigma_+ = |e><g|, sigma_z = diag(1/2,-1/2).
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(1, 0) += c2;           // cos^2(theta/2) sigma_-
    m(0, 1) -= ei2p * s2;    // -e^{2i phi} sin^2(theta/2) sigma_+
    m(0, 0) -= eip * s * 0.5;
    m(1, 1) += eip * s * 0.5;
    return m;
}

DressedInteractionCoefficients dressed_interaction_coefficients(double gamma,
                                                                double theta,
                                                                double phi) {
    if (!(theta >= 0.0) || theta >= 0.5 * std::numbers::pi + 1e-12) {
        throw std::domain_error(
            "dressed_interaction_coefficients: theta must lie in [0, pi/2)");
    }
    const double g = std::sqrt(2.0 * gamma);
    const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    return DressedInteractionCoefficients{
        g * std::sin(theta) * std::polar(1.0, phi), g * c2, g * s2};
}

}  // namespace offres
