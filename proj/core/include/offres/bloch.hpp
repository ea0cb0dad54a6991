#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "offres/params.hpp"

namespace offres {

/// Two-level density matrix in the basis {e, g}. Kept as a plain Hermitian
/// matrix; validity is checked, not enforced, so integrator drift stays
/// observable.
class DensityMatrix2 {
  public:
    DensityMatrix2() : m_(Eigen::Matrix2cd::Zero()) {}
    explicit DensityMatrix2(const Eigen::Matrix2cd& m) : m_(m) {}

    static DensityMatrix2 ground();
    static DensityMatrix2 excited();

    double rho_ee() const { return m_(0, 0).real(); }
    double rho_gg() const { return m_(1, 1).real(); }
    std::complex<double> rho_eg() const { return m_(0, 1); }
    std::complex<double> rho_ge() const { return m_(1, 0); }

    /// <sigma_-> = tr(rho |g><e|) = rho_eg.
    std::complex<double> sigma_minus_expectation() const { return m_(0, 1); }

    double trace_error() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;
    bool is_physical(double tol = 1e-9) const;

    const Eigen::Matrix2cd& matrix() const { return m_; }

  private:
    Eigen::Matrix2cd m_;
};

/// Steady state of the driven, spontaneously emitting atom from the 3x3
/// linear Bloch system (decay channel at rate 2*gamma). No dressed-frame
/// formula enters; this is the independent oracle. Throws when gamma == 0
/// (no unique steady state).
DensityMatrix2 bloch_steady_state(const PhysicalParams& params,
                                  std::complex<double> beta0);

struct BlochSample {
    double t;
    DensityMatrix2 rho;
};

/// Fixed-step RK4 integration of the master equation under the (piecewise
/// constant) drive envelope. Requires dt*max(omega_beta, 2*gamma) <= 0.05.
std::vector<BlochSample> bloch_evolve(const DensityMatrix2& rho0,
                                      const PulseEnvelope& env,
                                      const PhysicalParams& params, double dt);

/// Steady-state output amplitude from the input-output relation
/// beta_out = beta + i sqrt(2 gamma) <sigma_->. The rotating-frame phase
/// convention is fixed once so that the dispersive limit reproduces
/// beta_out = (1 - 2 i gamma/omega_delta) beta.
std::complex<double> oracle_output_amplitude(const PhysicalParams& params,
                                             std::complex<double> beta0);

}  // namespace offres
