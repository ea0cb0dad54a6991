#include "offres/biphoton.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "offres/fft.hpp"
#include "offres/format.hpp"

namespace offres {

using std::complex;

namespace {

void require_frame(const DressedFrame& frame, double gamma) {
    if (!(gamma > 0.0)) {
        throw std::domain_error("biphoton: gamma must be positive");
    }
    if (!(frame.theta >= 0.0) || frame.theta >= 0.5 * std::numbers::pi) {
        throw std::domain_error("biphoton: theta must lie in [0, pi/2)");
    }
}

double prefactor(const DressedFrame& frame, double gamma) {
    const double t = std::tan(0.5 * frame.theta);
    return std::numbers::sqrt2 * gamma_prime(frame, gamma) * t * t;
}

/// Exact transform of the time-domain amplitude: two Lorentzians, both of
/// half-width gamma'.
complex<double> exact_transform(double omega, const DressedFrame& frame,
                                double gamma) {
    const double gp = gamma_prime(frame, gamma);
    const double p = prefactor(frame, gamma);
    return p * (1.0 / complex<double>{gp, frame.omega_beta - omega} +
                1.0 / complex<double>{gp, frame.omega_beta + omega});
}

/// HWHM of |values|^2 around the tallest sample within +-halfspan of
/// center, with linear interpolation of the half crossings.
double measure_hwhm(const std::vector<double>& axis,
                    const std::vector<complex<double>>& values, double center,
                    double halfspan) {
    std::size_t lo = axis.size(), hi = 0;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (axis[i] >= center - halfspan && axis[i] <= center + halfspan) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    }
    if (lo >= hi) return std::numeric_limits<double>::quiet_NaN();
    std::size_t peak = lo;
    for (std::size_t i = lo; i <= hi; ++i) {
        if (std::norm(values[i]) > std::norm(values[peak])) peak = i;
    }
    const double half = 0.5 * std::norm(values[peak]);
    if (half == 0.0) return std::numeric_limits<double>::quiet_NaN();

    auto crossing = [&](bool rightward) -> double {
        std::size_t i = peak;
        for (;;) {
            const std::size_t next = rightward ? i + 1 : i - 1;
            if (next < lo || next > hi) {
                return std::numeric_limits<double>::quiet_NaN();
            }
            if (std::norm(values[next]) <= half) {
                const double v0 = std::norm(values[i]);
                const double v1 = std::norm(values[next]);
                const double f = (v0 - half) / (v0 - v1);
                return axis[i] + f * (axis[next] - axis[i]);
            }
            i = next;
        }
    };
    const double left = crossing(false);
    const double right = crossing(true);
    return 0.5 * (right - left);
}

}  // namespace

double gamma_prime(const DressedFrame& frame, double gamma) {
    const double c = std::cos(0.5 * frame.theta);
    return gamma * c * c * c * c;
}

complex<double> biphoton_time(double tau, const DressedFrame& frame,
                              double gamma) {
    require_frame(frame, gamma);
    const double gp = gamma_prime(frame, gamma);
    const double a = std::abs(tau);
    return prefactor(frame, gamma) *
           std::exp(complex<double>{-gp * a, -frame.omega_beta * a});
}

double pair_rate(const DressedFrame& frame, double gamma) {
    require_frame(frame, gamma);
    const double t = std::tan(0.5 * frame.theta);
    return 2.0 * gamma_prime(frame, gamma) * t * t * t * t;
}

complex<double> biphoton_freq_closed(double omega1, const DressedFrame& frame,
                                     double gamma) {
    require_frame(frame, gamma);
    const double gp = gamma_prime(frame, gamma);
    return prefactor(frame, gamma) *
           (1.0 / complex<double>{gp, frame.omega_beta - omega1} +
            1.0 / complex<double>{2.0 * gp, frame.omega_beta + omega1});
}

BiphotonGrid biphoton_time_grid(const DressedFrame& frame, double gamma,
                                double tau_max, std::size_t n_samples) {
    require_frame(frame, gamma);
    if (!(tau_max > 0.0) || n_samples < 2) {
        throw std::domain_error("biphoton_time_grid: bad grid request");
    }
    BiphotonGrid grid;
    grid.axis = BiphotonGrid::Axis::Time;
    grid.frame = frame;
    grid.gamma_prime = gamma_prime(frame, gamma);
    grid.axis_values.resize(n_samples);
    grid.values.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double tau = -tau_max + 2.0 * tau_max * static_cast<double>(i) /
                                          static_cast<double>(n_samples - 1);
        grid.axis_values[i] = tau;
        grid.values[i] = biphoton_time(tau, frame, gamma);
    }
    return grid;
}

NumericSpectrum biphoton_freq_numeric(const DressedFrame& frame, double gamma,
                                      const FrequencyGridSpec& spec) {
    require_frame(frame, gamma);
    if (!std::has_single_bit(spec.n_tau) || spec.n_tau < (1u << 10)) {
        throw std::domain_error(
            "biphoton_freq_numeric: n_tau must be a power of two >= 1024");
    }
    if (spec.half_width_span < 40.0) {
        throw std::domain_error(
            "biphoton_freq_numeric: grid must cover at least 40 half-widths");
    }
    const double gp = gamma_prime(frame, gamma);
    const double span = spec.half_width_span / gp;
    const auto n = spec.n_tau;
    const double dtau = 2.0 * span / static_cast<double>(n);
    if (dtau * frame.omega_beta > 0.5) {
        throw std::domain_error(
            "biphoton_freq_numeric: time step does not resolve omega_beta; "
            "increase n_tau");
    }
    const double window = spec.omega_window > 0.0
                              ? spec.omega_window
                              : frame.omega_beta + 10.0 * gp;
    const double nyquist = std::numbers::pi / dtau;
    if (window > 0.5 * nyquist) {
        throw std::domain_error(
            "biphoton_freq_numeric: requested window too close to the grid "
            "Nyquist edge");
    }

    // psi~(w_k) = dtau e^{-i w_k L} sum_n psi_n (-1)^n e^{2 pi i k n / N},
    // w_k = 2 pi (k - N/2) / (N dtau).
    std::vector<complex<double>> work(n);
    double time_integral = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double tau = -span + dtau * static_cast<double>(i);
        const complex<double> psi = biphoton_time(tau, frame, gamma);
        time_integral += std::norm(psi);
        work[i] = (i & 1u) ? -psi : psi;
    }
    time_integral *= dtau;
    detail::fft_radix2(work, +1);

    NumericSpectrum out;
    out.parseval_time_integral = time_integral;
    out.closed_form_rate = pair_rate(frame, gamma);

    const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * dtau);
    double freq_sum = 0.0;
    BiphotonGrid& grid = out.grid;
    grid.axis = BiphotonGrid::Axis::Frequency;
    grid.frame = frame;
    grid.gamma_prime = gp;
    for (std::size_t k = 0; k < n; ++k) {
        const double w =
            dw * (static_cast<double>(k) - 0.5 * static_cast<double>(n));
        const complex<double> value =
            dtau * std::polar(1.0, -w * span) * work[k];
        freq_sum += std::norm(value);
        if (std::abs(w) <= window) {
            grid.axis_values.push_back(w);
            grid.values.push_back(value);
        }
    }
    out.parseval_freq_sum = freq_sum * dw / (2.0 * std::numbers::pi);

    // Comparison report against the closed form and the exact transform.
    SpectrumComparison& cmp = out.comparison;
    if (frame.theta == 0.0) {
        cmp.note = "no pairs at theta = 0";
        return out;
    }
    double peak = 0.0;
    for (std::size_t i = 0; i < grid.axis_values.size(); ++i) {
        peak = std::max(peak,
                        std::abs(exact_transform(grid.axis_values[i], frame, gamma)));
    }
    std::vector<complex<double>> closed(grid.axis_values.size());
    for (std::size_t i = 0; i < grid.axis_values.size(); ++i) {
        closed[i] = biphoton_freq_closed(grid.axis_values[i], frame, gamma);
        const complex<double> exact =
            exact_transform(grid.axis_values[i], frame, gamma);
        cmp.max_dev_exact_rel = std::max(
            cmp.max_dev_exact_rel, std::abs(grid.values[i] - exact) / peak);
        cmp.max_dev_closed_rel = std::max(
            cmp.max_dev_closed_rel, std::abs(grid.values[i] - closed[i]) / peak);
    }
    const double halfspan = 8.0 * gp;
    cmp.hwhm_numeric_pos =
        measure_hwhm(grid.axis_values, grid.values, frame.omega_beta, halfspan);
    cmp.hwhm_numeric_neg =
        measure_hwhm(grid.axis_values, grid.values, -frame.omega_beta, halfspan);
    cmp.hwhm_closed_pos =
        measure_hwhm(grid.axis_values, closed, frame.omega_beta, halfspan);
    cmp.hwhm_closed_neg =
        measure_hwhm(grid.axis_values, closed, -frame.omega_beta, halfspan);
    cmp.note =
        "numeric transform of the time-domain amplitude has half-width "
        "gamma_prime = " +
        format_double(gp) + " at both +-omega_beta (measured " +
        format_double(cmp.hwhm_numeric_pos) + " / " +
        format_double(cmp.hwhm_numeric_neg) +
        "); the closed-form expression uses 2*gamma_prime = " +
        format_double(2.0 * gp) +
        " in its second term (measured half-width at -omega_beta: " +
        format_double(cmp.hwhm_closed_neg) + ")";
    return out;
}

std::pair<double, double> sideband_frequencies(double omega_light,
                                               double omega_atom) {
    if (!(omega_light > 0.0) || !(omega_atom > 0.0)) {
        throw std::domain_error(
            "sideband_frequencies: frequencies must be positive");
    }
    return {omega_atom, 2.0 * omega_light - omega_atom};
}

}  // namespace offres
