#include "offres/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace offres {

using std::complex;

namespace {

// Rotating-frame Hamiltonian used throughout this module:
//   H = -omega_delta sigma_z - sqrt(2 gamma)(beta sigma_+ + conj(beta) sigma_-)
// in the basis {e, g}. Together with beta_out = beta + i sqrt(2 gamma)
// <sigma_->, this convention reproduces the dispersive-limit output
// beta (1 - 2 i gamma/omega_delta) and conserves photon flux.
Eigen::Matrix2cd frame_hamiltonian(const PhysicalParams& params,
                                   complex<double> beta) {
    const double g = std::sqrt(2.0 * params.gamma);
    Eigen::Matrix2cd h;
    h(0, 0) = -0.5 * params.omega_delta;
    h(0, 1) = -g * beta;
    h(1, 0) = -g * std::conj(beta);
    h(1, 1) = 0.5 * params.omega_delta;
    return h;
}

// Lindblad right-hand side with decay channel sigma_- at rate 2 gamma.
Eigen::Matrix2cd master_rhs(const Eigen::Matrix2cd& rho,
                            const Eigen::Matrix2cd& h, double gamma) {
    const complex<double> i{0.0, 1.0};
    Eigen::Matrix2cd out = -i * (h * rho - rho * h);
    const double rate = 2.0 * gamma;
    // sigma_- rho sigma_+ targets (g,g); {sigma_+ sigma_-, rho}/2 acts on
    // the excited row/column.
    out(1, 1) += rate * rho(0, 0);
    out(0, 0) -= rate * rho(0, 0);
    out(0, 1) -= 0.5 * rate * rho(0, 1);
    out(1, 0) -= 0.5 * rate * rho(1, 0);
    return out;
}

}  // namespace

DensityMatrix2 DensityMatrix2::ground() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(1, 1) = 1.0;
    return DensityMatrix2(m);
}

DensityMatrix2 DensityMatrix2::excited() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = 1.0;
    return DensityMatrix2(m);
}

double DensityMatrix2::trace_error() const {
    return std::abs(m_.trace() - complex<double>{1.0, 0.0});
}

double DensityMatrix2::hermiticity_error() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix2::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m_);
    return solver.eigenvalues()(0);
}

bool DensityMatrix2::is_physical(double tol) const {
    return trace_error() <= tol && hermiticity_error() <= tol &&
           min_eigenvalue() >= -tol;
}

DensityMatrix2 bloch_steady_state(const PhysicalParams& params,
                                  complex<double> beta0) {
    // Bloch vector v = (x, y, z) precesses about
    //   w = (-2 sqrt(2 gamma) Re beta, +2 sqrt(2 gamma) Im beta, -omega_delta)
    // and damps as (gamma x, gamma y, 2 gamma (z + 1)). Steady state solves
    // (W - D) v = (0, 0, 2 gamma).
    const double g = std::sqrt(2.0 * params.gamma);
    const double wx = -2.0 * g * beta0.real();
    const double wy = 2.0 * g * beta0.imag();
    const double wz = -params.omega_delta;

    Eigen::Matrix3d m;
    m << -params.gamma, -wz, wy,  //
        wz, -params.gamma, -wx,   //
        -wy, wx, -2.0 * params.gamma;
    Eigen::Vector3d rhs(0.0, 0.0, 2.0 * params.gamma);
    const Eigen::Vector3d v = m.colPivHouseholderQr().solve(rhs);

    Eigen::Matrix2cd rho;
    rho(0, 0) = 0.5 * (1.0 + v(2));
    rho(1, 1) = 0.5 * (1.0 - v(2));
    rho(0, 1) = 0.5 * complex<double>{v(0), -v(1)};
    rho(1, 0) = std::conj(rho(0, 1));
    return DensityMatrix2(rho);
}

std::vector<BlochSample> bloch_evolve(const DensityMatrix2& rho0,
                                      const PulseEnvelope& env,
                                      const PhysicalParams& params, double dt) {
    if (!(dt > 0.0)) {
        throw std::domain_error("bloch_evolve: dt must be positive");
    }
    double beta_max = 0.0;
    for (const auto& s : env.samples()) beta_max = std::max(beta_max, std::abs(s));
    const double omega_beta =
        std::hypot(params.omega_delta, std::sqrt(8.0 * params.gamma) * beta_max);
    if (dt * std::max(omega_beta, 2.0 * params.gamma) > 0.05) {
        throw std::domain_error(
            "bloch_evolve: dt too large to resolve the dynamics");
    }

    const auto n_steps =
        static_cast<std::size_t>(std::ceil(env.duration() / dt - 1e-12));
    std::vector<BlochSample> series;
    series.reserve(n_steps + 1);
    Eigen::Matrix2cd rho = rho0.matrix();
    series.push_back({0.0, DensityMatrix2(rho)});
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double t = dt * static_cast<double>(i);
        // The envelope is piecewise constant; sample at midpoints for the
        // internal stages.
        const Eigen::Matrix2cd h1 =
            frame_hamiltonian(params, env.at_time(t));
        const Eigen::Matrix2cd h2 =
            frame_hamiltonian(params, env.at_time(t + 0.5 * dt));
        const Eigen::Matrix2cd h4 = frame_hamiltonian(params, env.at_time(t + dt));

        const Eigen::Matrix2cd k1 = master_rhs(rho, h1, params.gamma);
        const Eigen::Matrix2cd k2 =
            master_rhs(rho + 0.5 * dt * k1, h2, params.gamma);
        const Eigen::Matrix2cd k3 =
            master_rhs(rho + 0.5 * dt * k2, h2, params.gamma);
        const Eigen::Matrix2cd k4 = master_rhs(rho + dt * k3, h4, params.gamma);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        series.push_back({t + dt, DensityMatrix2(rho)});
    }
    return series;
}

complex<double> oracle_output_amplitude(const PhysicalParams& params,
                                        complex<double> beta0) {
    const DensityMatrix2 rho = bloch_steady_state(params, beta0);
    return beta0 + complex<double>{0.0, 1.0} * std::sqrt(2.0 * params.gamma) *
                       rho.sigma_minus_expectation();
}

}  // namespace offres
