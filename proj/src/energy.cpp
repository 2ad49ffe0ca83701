#include "attrep/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace attrep {

namespace {
double first_moment_1d(const DiscreteMeasure& mu) {
    double s = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) s += mu.weights[i] * mu.points[i];
    return s;
}
} // namespace

DiscreteMeasure ParticleSystem::to_measure() const {
    DiscreteMeasure mu;
    mu.dim = dim;
    mu.points = positions;
    mu.weights.assign(size(), 1.0 / static_cast<double>(size()));
    return mu;
}

ParticleSystem ParticleSystem::from_1d(std::span<const double> xs) {
    ParticleSystem p;
    p.dim = 1;
    p.positions.assign(xs.begin(), xs.end());
    return p;
}

double attraction_energy(const DiscreteMeasure& mu, const DiscreteMeasure& omega, double q_a,
                         ExecMode mode) {
    if (mu.dim != omega.dim) throw std::invalid_argument("dimension mismatch");
    const double s = pairsum::cross_kernel_sum(mu.points, mu.weights, omega.points,
                                               omega.weights, mu.dim, q_a, mode);
    return s / mu.mass();
}

double attraction_energy(const ParticleSystem& mu, const DiscreteMeasure& omega, double q_a,
                         ExecMode mode) {
    return attraction_energy(mu.to_measure(), omega, q_a, mode);
}

double interaction_energy(const DiscreteMeasure& mu, double q_r, ExecMode mode) {
    const double m = mu.mass();
    const double s = pairsum::cross_kernel_sum(mu.points, mu.weights, mu.points, mu.weights,
                                               mu.dim, q_r, mode);
    return -0.5 * s / (m * m);
}

double interaction_energy(const ParticleSystem& mu, double q_r, ExecMode mode) {
    const auto n = static_cast<double>(mu.size());
    const double s = pairsum::self_kernel_sum(mu.positions, mu.dim, q_r, mode);
    return -0.5 * s / (n * n);
}

namespace {
EnergyReport make_report(double v, double w) {
    EnergyReport r;
    r.attraction = v;
    r.interaction = w;
    r.total = v + w;
    return r;
}
} // namespace

EnergyReport total_energy(const ParticleSystem& mu, const DiscreteMeasure& omega,
                          const PowerKernelParams& params, ExecMode mode) {
    return make_report(attraction_energy(mu, omega, params.q_a, mode),
                       interaction_energy(mu, params.q_r, mode));
}

EnergyReport total_energy(const DiscreteMeasure& mu, const DiscreteMeasure& omega,
                          const PowerKernelParams& params, ExecMode mode) {
    return make_report(attraction_energy(mu, omega, params.q_a, mode),
                       interaction_energy(mu, params.q_r, mode));
}

std::vector<double> grad_particles(const ParticleSystem& mu, const DiscreteMeasure& omega,
                                   const PowerKernelParams& params, ExecMode mode) {
    if (mu.dim != omega.dim) throw std::invalid_argument("dimension mismatch");
    const std::size_t n = mu.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> g(mu.positions.size(), 0.0);
    pairsum::radial_grad_accumulate(mu.positions, n, omega.points, omega.weights, mu.dim,
                                    params.q_a, inv_n, g, mode);
    const std::vector<double> unit(n, 1.0);
    pairsum::radial_grad_accumulate(mu.positions, n, mu.positions, unit, mu.dim, params.q_r,
                                    -inv_n * inv_n, g, mode);
    return g;
}

double fourier_energy_1d(const DiscreteMeasure& mu, const DiscreteMeasure& omega, double q,
                         const FourierQuadrature& quad, ExecMode mode) {
    if (mu.dim != 1 || omega.dim != 1)
        throw std::invalid_argument("fourier_energy_1d requires d=1");
    if (std::abs(mu.mass() - 1.0) > 1e-9 || std::abs(omega.mass() - 1.0) > 1e-9)
        throw std::invalid_argument("fourier_energy_1d requires probability measures");
    const double dq = dq_constant(q, 1);

    std::vector<double> nodes(quad.nodes);
    const double lr = std::log(quad.xi_max / quad.xi_min);
    for (std::size_t k = 0; k < quad.nodes; ++k)
        nodes[k] = quad.xi_min *
                   std::exp(lr * static_cast<double>(k) / static_cast<double>(quad.nodes - 1));

    double integral = pairsum::fourier_difference_quad(mu.points, mu.weights, omega.points,
                                                       omega.weights, q, nodes, mode);
    // Head segment [0, xi_min]: |muhat - omegahat|^2 = xi^2 (rho_mu - rho_omega)^2 + O(xi^4),
    // so the truncated piece integrates to drho^2 * xi_min^{2-q} / (2-q).
    const double drho = first_moment_1d(mu) - first_moment_1d(omega);
    integral += drho * drho * std::pow(quad.xi_min, 2.0 - q) / (2.0 - q);
    return 2.0 * dq * integral;
}

double symmetrized_energy(const DiscreteMeasure& mu, const DiscreteMeasure& omega, double q,
                          ExecMode mode) {
    if (mu.dim != omega.dim) throw std::invalid_argument("dimension mismatch");
    if (std::abs(mu.mass() - omega.mass()) > 1e-9)
        throw std::invalid_argument("symmetrized energy requires equal masses");
    const double s_mm = pairsum::cross_kernel_sum(mu.points, mu.weights, mu.points, mu.weights,
                                                  mu.dim, q, mode);
    const double s_oo = pairsum::cross_kernel_sum(omega.points, omega.weights, omega.points,
                                                  omega.weights, mu.dim, q, mode);
    const double s_mo = pairsum::cross_kernel_sum(mu.points, mu.weights, omega.points,
                                                  omega.weights, mu.dim, q, mode);
    return -0.5 * (s_mm - 2.0 * s_mo + s_oo);
}

} // namespace attrep
