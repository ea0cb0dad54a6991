#include "offres/params.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace offres {

namespace {

bool all_finite(const std::vector<std::complex<double>>& samples) {
    for (const auto& s : samples) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
    }
    return true;
}

}  // namespace

PhysicalParams::PhysicalParams(double gamma_, double omega_delta_,
                               std::optional<double> omega_light_,
                               std::optional<double> omega_atom_)
    : gamma(gamma_),
      omega_delta(omega_delta_),
      omega_light(omega_light_),
      omega_atom(omega_atom_) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::domain_error("PhysicalParams: gamma must be positive");
    }
    if (!std::isfinite(omega_delta)) {
        throw std::domain_error("PhysicalParams: omega_delta must be finite");
    }
    if (omega_light && omega_atom && *omega_atom - *omega_light != omega_delta) {
        throw std::domain_error(
            "PhysicalParams: omega_atom - omega_light must equal omega_delta");
    }
}

PulseEnvelope::PulseEnvelope(double dt, std::vector<std::complex<double>> samples)
    : dt_(dt), samples_(std::move(samples)) {
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        throw std::domain_error("PulseEnvelope: dt must be positive");
    }
    if (!all_finite(samples_)) {
        throw std::domain_error("PulseEnvelope: samples must be finite");
    }
}

PulseEnvelope PulseEnvelope::constant(std::complex<double> beta0,
                                      double duration, double dt) {
    if (!(duration > 0.0)) {
        throw std::domain_error("PulseEnvelope: duration must be positive");
    }
    const auto n = static_cast<std::size_t>(std::llround(duration / dt));
    if (n == 0) throw std::domain_error("PulseEnvelope: duration shorter than dt");
    return PulseEnvelope(dt, std::vector<std::complex<double>>(n, beta0));
}

PulseEnvelope PulseEnvelope::raised_cosine(std::complex<double> beta0,
                                           double duration, double ramp_time,
                                           double dt) {
    if (!(ramp_time >= 0.0) || 2.0 * ramp_time > duration) {
        throw std::domain_error(
            "PulseEnvelope: ramps must fit inside the pulse");
    }
    const auto n = static_cast<std::size_t>(std::llround(duration / dt));
    if (n == 0) throw std::domain_error("PulseEnvelope: duration shorter than dt");
    std::vector<std::complex<double>> samples(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) * dt;
        double r = 1.0;
        if (ramp_time > 0.0) {
            if (t < ramp_time) {
                const double u = std::sin(std::numbers::pi * t / (2.0 * ramp_time));
                r = u * u;
            } else if (t > duration - ramp_time) {
                const double u =
                    std::sin(std::numbers::pi * (duration - t) / (2.0 * ramp_time));
                r = u * u;
            }
        }
        samples[i] = beta0 * r;
    }
    return PulseEnvelope(dt, std::move(samples));
}

std::complex<double> PulseEnvelope::at_time(double t) const {
    if (samples_.empty()) return {0.0, 0.0};
    auto idx = static_cast<std::ptrdiff_t>(std::floor(t / dt_));
    if (idx < 0) idx = 0;
    const auto last = static_cast<std::ptrdiff_t>(samples_.size()) - 1;
    if (idx > last) idx = last;
    return samples_[static_cast<std::size_t>(idx)];
}

double PulseEnvelope::mean_photon_number() const {
    double sum = 0.0;
    for (const auto& s : samples_) sum += std::norm(s);
    return sum * dt_;
}

std::uint64_t PulseEnvelope::content_hash() const {
    // FNV-1a over the raw sample bytes and dt.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const void* p, std::size_t n) {
        const auto* bytes = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= bytes[i];
            h *= 0x100000001b3ULL;
        }
    };
    mix(&dt_, sizeof(dt_));
    if (!samples_.empty()) {
        mix(samples_.data(), samples_.size() * sizeof(samples_[0]));
    }
    return h;
}

}  // namespace offres
