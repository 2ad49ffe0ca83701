#include "attrep/pairsum.hpp"

#include "attrep/kernels.hpp"

#include <cmath>
#include <complex>

namespace attrep {

namespace {
ExecMode g_mode = ExecMode::Serial;

inline double dist(const double* a, const double* b, int dim) {
    double s2 = 0.0;
    for (int c = 0; c < dim; ++c) {
        const double d = a[c] - b[c];
        s2 += d * d;
    }
    return std::sqrt(s2);
}
} // namespace

ExecMode default_exec_mode() { return g_mode; }
void set_default_exec_mode(ExecMode mode) { g_mode = mode; }

namespace pairsum {

double cross_kernel_sum(std::span<const double> xa, std::span<const double> wa,
                        std::span<const double> xb, std::span<const double> wb,
                        int dim, double q, ExecMode mode) {
    const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(wa.size());
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(wb.size());
    double acc = 0.0;
    if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(static) reduction(+ : acc)
        for (std::ptrdiff_t i = 0; i < na; ++i) {
            double row = 0.0;
            for (std::ptrdiff_t k = 0; k < nb; ++k)
                row += wb[k] * std::pow(dist(&xa[i * dim], &xb[k * dim], dim), q);
            acc += wa[i] * row;
        }
    } else {
        for (std::ptrdiff_t i = 0; i < na; ++i) {
            double row = 0.0;
            for (std::ptrdiff_t k = 0; k < nb; ++k)
                row += wb[k] * std::pow(dist(&xa[i * dim], &xb[k * dim], dim), q);
            acc += wa[i] * row;
        }
    }
    return acc;
}

double self_kernel_sum(std::span<const double> x, int dim, double q, ExecMode mode) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size()) / dim;
    double acc = 0.0;
    if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(static) reduction(+ : acc)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::ptrdiff_t j = 0; j < n; ++j) {
                if (j == i) continue;
                row += std::pow(dist(&x[i * dim], &x[j * dim], dim), q);
            }
            acc += row;
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::ptrdiff_t j = 0; j < n; ++j) {
                if (j == i) continue;
                row += std::pow(dist(&x[i * dim], &x[j * dim], dim), q);
            }
            acc += row;
        }
    }
    return acc;
}

namespace {
inline void grad_row(const double* xi, std::span<const double> y, std::span<const double> w,
                     int dim, double q, double scale, double* out) {
    const std::size_t k_count = w.size();
    for (std::size_t k = 0; k < k_count; ++k) {
        const double* yk = &y[k * dim];
        const double r = dist(xi, yk, dim);
        if (r == 0.0) continue;
        // psi'(r)/r = q r^{q-2}
        const double f = scale * w[k] * q * std::pow(r, q - 2.0);
        for (int c = 0; c < dim; ++c) out[c] += f * (xi[c] - yk[c]);
    }
}
} // namespace

void radial_grad_accumulate(std::span<const double> x, std::size_t n,
                            std::span<const double> y, std::span<const double> w,
                            int dim, double q, double scale,
                            std::span<double> out, ExecMode mode) {
    const std::ptrdiff_t ni = static_cast<std::ptrdiff_t>(n);
    if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < ni; ++i)
            grad_row(&x[i * dim], y, w, dim, q, scale, &out[i * dim]);
    } else {
        for (std::ptrdiff_t i = 0; i < ni; ++i)
            grad_row(&x[i * dim], y, w, dim, q, scale, &out[i * dim]);
    }
}

namespace {
inline double rhs_node(std::size_t j, std::span<const double> x, std::span<const double> y,
                       double omega_mass, double q_a, double q_r) {
    const std::size_t m = x.size();
    const double inv_m = 1.0 / static_cast<double>(m);
    double attr = 0.0;
    for (std::size_t z = 0; z < m; ++z) attr += psi_prime_1d(q_a, x[j] - y[z]);
    double rep = 0.0;
    for (std::size_t z = 0; z < m; ++z) rep += psi_prime_1d(q_r, x[j] - x[z]);
    return -omega_mass * attr * inv_m + rep * inv_m;
}
} // namespace

void flow_rhs_general(std::span<const double> x, std::span<const double> y,
                      double omega_mass, double q_a, double q_r,
                      std::span<double> out, ExecMode mode) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(x.size());
    if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t j = 0; j < m; ++j)
            out[j] = rhs_node(static_cast<std::size_t>(j), x, y, omega_mass, q_a, q_r);
    } else {
        for (std::ptrdiff_t j = 0; j < m; ++j)
            out[j] = rhs_node(static_cast<std::size_t>(j), x, y, omega_mass, q_a, q_r);
    }
}

namespace {
inline double quad_node(double xi, std::span<const double> xm, std::span<const double> wm,
                        std::span<const double> xo, std::span<const double> wo, double q) {
    std::complex<double> diff{0.0, 0.0};
    for (std::size_t i = 0; i < wm.size(); ++i)
        diff += wm[i] * std::complex<double>(std::cos(xm[i] * xi), -std::sin(xm[i] * xi));
    for (std::size_t i = 0; i < wo.size(); ++i)
        diff -= wo[i] * std::complex<double>(std::cos(xo[i] * xi), -std::sin(xo[i] * xi));
    return std::norm(diff) * std::pow(xi, -1.0 - q);
}
} // namespace

double fourier_difference_quad(std::span<const double> xm, std::span<const double> wm,
                               std::span<const double> xo, std::span<const double> wo,
                               double q, std::span<const double> nodes, ExecMode mode) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nodes.size());
    if (n < 2) return 0.0;
    std::vector<double> f(static_cast<std::size_t>(n));
    if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            f[k] = quad_node(nodes[k], xm, wm, xo, wo, q);
    } else {
        for (std::ptrdiff_t k = 0; k < n; ++k)
            f[k] = quad_node(nodes[k], xm, wm, xo, wo, q);
    }
    double acc = 0.0;
    for (std::ptrdiff_t k = 0; k + 1 < n; ++k)
        acc += 0.5 * (f[k] + f[k + 1]) * (nodes[k + 1] - nodes[k]);
    return acc;
}

} // namespace pairsum

} // namespace attrep
