#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "offres/dressed.hpp"

namespace offres {

/// Dressed relaxation rate gamma' = gamma cos^4(theta/2) that sets the pair
/// correlation time.
double gamma_prime(const DressedFrame& frame, double gamma);

/// Sampled pair-emission amplitude over relative time tau = t2 - t1 or over
/// frequency (measured from the carrier). Frequency-domain amplitudes live
/// on the energy-conservation line omega2 = -omega1.
struct BiphotonGrid {
    enum class Axis { Time, Frequency };
    Axis axis;
    std::vector<double> axis_values;
    std::vector<std::complex<double>> values;
    DressedFrame frame;
    double gamma_prime;
};

/// Two-photon amplitude sqrt(2) gamma' tan^2(theta/2)
/// exp(-(gamma' + i omega_beta)|tau|).
std::complex<double> biphoton_time(double tau, const DressedFrame& frame,
                                   double gamma);

/// Integrated pair density \int |psi|^2 dtau = 2 gamma' tan^4(theta/2),
/// algebraically equal to jump_rate_up.
double pair_rate(const DressedFrame& frame, double gamma);

/// Closed-form frequency-domain amplitude
///   prefactor * ( 1/(gamma' + i(omega_beta - omega1))
///               + 1/(2 gamma' + i(omega_beta + omega1)) ).
/// Note the asymmetric 2*gamma' in the second term; the direct transform of
/// the time-domain amplitude has gamma' in both (see SpectrumComparison).
std::complex<double> biphoton_freq_closed(double omega1,
                                          const DressedFrame& frame,
                                          double gamma);

BiphotonGrid biphoton_time_grid(const DressedFrame& frame, double gamma,
                                double tau_max, std::size_t n_samples);

struct FrequencyGridSpec {
    /// Half-span of the time grid in units of 1/gamma' (>= 40 required).
    double half_width_span = 80.0;
    /// Number of time samples; must be a power of two.
    std::size_t n_tau = std::size_t{1} << 20;
    /// Output window |omega| <= omega_window; 0 selects omega_beta + 10
    /// gamma'. The Parseval sums are always taken over the full grid.
    double omega_window = 0.0;
};

/// Measured against the numeric transform and the closed form around the
/// two Lorentzian peaks at +-omega_beta. Half-widths are HWHM of |psi|^2.
struct SpectrumComparison {
    double hwhm_numeric_pos = 0.0;
    double hwhm_numeric_neg = 0.0;
    double hwhm_closed_pos = 0.0;
    double hwhm_closed_neg = 0.0;
    /// Max deviation from the exact transform of the time-domain amplitude
    /// (two Lorentzians of width gamma'), relative to the peak amplitude.
    double max_dev_exact_rel = 0.0;
    /// Same measure against biphoton_freq_closed; large near -omega_beta.
    double max_dev_closed_rel = 0.0;
    std::string note;
};

struct NumericSpectrum {
    BiphotonGrid grid;
    double parseval_time_integral = 0.0;
    double parseval_freq_sum = 0.0;
    double closed_form_rate = 0.0;
    SpectrumComparison comparison;
};

/// FFT-based transform psi~(omega) = \int psi(tau) e^{i omega tau} dtau of
/// the sampled time-domain amplitude, with Parseval bookkeeping and a
/// comparison report against biphoton_freq_closed. Throws std::domain_error
/// when the grid is under-resolved.
NumericSpectrum biphoton_freq_numeric(const DressedFrame& frame, double gamma,
                                      const FrequencyGridSpec& spec = {});

/// Absolute sideband pair (omega_atom, 2 omega_light - omega_atom); the two
/// outputs straddle the carrier symmetrically.
std::pair<double, double> sideband_frequencies(double omega_light,
                                               double omega_atom);

}  // namespace offres
