#ifndef ATTREP_ENERGY_HPP
#define ATTREP_ENERGY_HPP

#include "attrep/kernels.hpp"
#include "attrep/measures.hpp"
#include "attrep/pairsum.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace attrep {

/// N equal-weight positions in R^d representing mu = (1/N) sum delta_{x_i}.
/// Positions are flat, row-major like DiscreteMeasure::points.
struct ParticleSystem {
    int dim = 1;
    std::vector<double> positions;

    std::size_t size() const {
        return positions.size() / static_cast<std::size_t>(dim);
    }
    std::span<const double> point(std::size_t i) const {
        return {positions.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
    DiscreteMeasure to_measure() const;
    static ParticleSystem from_1d(std::span<const double> xs);
};

struct EnergyReport {
    double attraction = 0.0;
    double interaction = 0.0;
    double tv_term = 0.0;
    double lambda = 0.0;
    double total = 0.0;
};

/// V = (1/m_mu) sum_i w^mu_i sum_k w^omega_k psi_a(x_i - y_k); equal-weight
/// particles reproduce the particle attraction term exactly.
double attraction_energy(const ParticleSystem& mu, const DiscreteMeasure& omega, double q_a,
                         ExecMode mode = default_exec_mode());
double attraction_energy(const DiscreteMeasure& mu, const DiscreteMeasure& omega, double q_a,
                         ExecMode mode = default_exec_mode());

/// W = -(1/(2N^2)) sum_{i,j} psi_r(x_i - x_j); the diagonal contributes 0.
double interaction_energy(const ParticleSystem& mu, double q_r,
                          ExecMode mode = default_exec_mode());
double interaction_energy(const DiscreteMeasure& mu, double q_r,
                          ExecMode mode = default_exec_mode());

EnergyReport total_energy(const ParticleSystem& mu, const DiscreteMeasure& omega,
                          const PowerKernelParams& params,
                          ExecMode mode = default_exec_mode());
EnergyReport total_energy(const DiscreteMeasure& mu, const DiscreteMeasure& omega,
                          const PowerKernelParams& params,
                          ExecMode mode = default_exec_mode());

/// Gradient of the particle energy in every position,
///   g_i = (1/N)[ sum_k w^omega_k psi_a'(x_i-y_k) - (1/N) sum_j psi_r'(x_i-x_j) ]
/// with the radial unit vector in d > 1. Coincident points contribute 0.
std::vector<double> grad_particles(const ParticleSystem& mu, const DiscreteMeasure& omega,
                                   const PowerKernelParams& params,
                                   ExecMode mode = default_exec_mode());

/// Symmetric log-spaced trapezoid grid on [xi_min, xi_max] (positive side;
/// evenness of the integrand supplies the factor 2), plus the analytic
/// correction for the truncated [0, xi_min] head where the integrand behaves
/// like (rho_mu - rho_omega)^2 * xi^{1-q}.
struct FourierQuadrature {
    double xi_min = 1e-4;
    double xi_max = 1e4;
    std::size_t nodes = 4000;
};

/// Ehat = D_q * int |muhat(xi) - omegahat(xi)|^2 |xi|^{-1-q} dxi for 1D
/// probability measures, q in [1,2).
double fourier_energy_1d(const DiscreteMeasure& mu, const DiscreteMeasure& omega, double q,
                         const FourierQuadrature& quad = {},
                         ExecMode mode = default_exec_mode());

/// Etilde = -1/2 int int psi(y-x) d[mu-omega](x) d[mu-omega](y) as an exact
/// double sum over the signed discrete measure. Requires equal masses.
double symmetrized_energy(const DiscreteMeasure& mu, const DiscreteMeasure& omega, double q,
                          ExecMode mode = default_exec_mode());

struct FlowState;
/// D[mu] = int_0^1 | int_0^1 [m psi_a'(X(z)-Y(zeta)) - psi_r'(X(z)-X(zeta))] dzeta |^2 dz
/// by the midpoint rule on both axes; equals the mean square of the flow RHS.
double dissipation(const FlowState& state, ExecMode mode = default_exec_mode());

} // namespace attrep

#endif
