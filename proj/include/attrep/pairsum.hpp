#ifndef ATTREP_PAIRSUM_HPP
#define ATTREP_PAIRSUM_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace attrep {

/// Execution mode for the O(N^2)/O(M^2) kernels. Serial runs every sum in a
/// fixed index order and is bit-reproducible; OpenMP parallelizes over the
/// outer index, so results agree with serial only up to rounding.
enum class ExecMode { Serial, OpenMP };

/// Process-wide default used by the dispatching wrappers (Serial unless the
/// caller opts in, e.g. via the CLI --parallel flag).
ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode mode);

namespace pairsum {

/// sum_{i,k} wa_i * wb_k * |xa_i - xb_k|^q over flat row-major point sets.
double cross_kernel_sum(std::span<const double> xa, std::span<const double> wa,
                        std::span<const double> xb, std::span<const double> wb,
                        int dim, double q, ExecMode mode);

/// sum_{i,j} |x_i - x_j|^q over one equal-role point set (diagonal is 0).
double self_kernel_sum(std::span<const double> x, int dim, double q, ExecMode mode);

/// g_i += scale * sum_k w_k * psi'(|x_i - y_k|) * (x_i - y_k)/|x_i - y_k|,
/// accumulated into out (size N*dim). Coincident points contribute 0.
void radial_grad_accumulate(std::span<const double> x, std::size_t n,
                            std::span<const double> y, std::span<const double> w,
                            int dim, double q, double scale,
                            std::span<double> out, ExecMode mode);

/// v_j = -(m/M) sum_z psi_a'(X_j - Y_z) + (1/M) sum_z psi_r'(X_j - X_z),
/// the pseudo-inverse flow right-hand side in its general quadratic form.
void flow_rhs_general(std::span<const double> x, std::span<const double> y,
                      double omega_mass, double q_a, double q_r,
                      std::span<double> out, ExecMode mode);

/// Trapezoid sum of f(xi_k) = |muhat(xi_k) - omegahat(xi_k)|^2 * xi_k^{-1-q}
/// over a fixed node vector (1D measures).
double fourier_difference_quad(std::span<const double> xm, std::span<const double> wm,
                               std::span<const double> xo, std::span<const double> wo,
                               double q, std::span<const double> nodes, ExecMode mode);

} // namespace pairsum

} // namespace attrep

#endif
