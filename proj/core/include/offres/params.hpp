#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace offres {

/// Atom/field constants. `gamma` is the dipole relaxation rate; the
/// spontaneous emission rate of the excited state is 2*gamma. The detuning
/// is omega_atom - omega_light. Absolute frequencies are optional and only
/// needed for mapping sideband output onto an absolute frequency axis.
struct PhysicalParams {
    double gamma;
    double omega_delta;
    std::optional<double> omega_light;
    std::optional<double> omega_atom;

    PhysicalParams(double gamma_, double omega_delta_,
                   std::optional<double> omega_light_ = std::nullopt,
                   std::optional<double> omega_atom_ = std::nullopt);
};

/// Complex drive envelope beta(t), sampled uniformly and interpreted as
/// piecewise constant over each sample interval. Flux normalization:
/// |beta(t)|^2 is the mean photon rate, so mean_photon_number() integrates
/// |beta|^2 dt over the pulse.
class PulseEnvelope {
  public:
    PulseEnvelope(double dt, std::vector<std::complex<double>> samples);

    /// Rectangular pulse of amplitude beta0 and the given duration.
    static PulseEnvelope constant(std::complex<double> beta0, double duration,
                                  double dt);
    /// Flat-top pulse with sin^2 (raised-cosine) turn-on and turn-off ramps
    /// of length ramp_time each.
    static PulseEnvelope raised_cosine(std::complex<double> beta0,
                                       double duration, double ramp_time,
                                       double dt);

    double dt() const { return dt_; }
    std::span<const std::complex<double>> samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    double duration() const { return dt_ * static_cast<double>(samples_.size()); }

    /// Sample value at time t (clamped to the first/last sample).
    std::complex<double> at_time(double t) const;

    double mean_photon_number() const;

    /// Stable identity of the sampled data, used to tag trajectory records.
    std::uint64_t content_hash() const;

  private:
    double dt_;
    std::vector<std::complex<double>> samples_;
};

}  // namespace offres
