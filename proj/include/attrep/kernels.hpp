#ifndef ATTREP_KERNELS_HPP
#define ATTREP_KERNELS_HPP

#include <span>

namespace attrep {

/// Exponent pair for the power kernels psi_a(x) = |x|^q_a (attraction)
/// and psi_r(x) = |x|^q_r (repulsion), both with q in [1,2].
struct PowerKernelParams {
    double q_a = 1.0;
    double q_r = 1.0;
    int dim = 1;
};

/// |x|^q with the Euclidean norm.
double psi(double q, std::span<const double> x);

/// 1D convenience overload.
double psi(double q, double x);

/// Derivative of |x|^q in 1D: q*|x|^{q-2}*x for x != 0.
/// At x = 0: sgn(0) = 0 for q = 1 (zero subgradient), 0 for q > 1.
double psi_prime_1d(double q, double x);

/// Second derivative q(q-1)|x|^{q-2}, only meaningful away from 0 for q < 2.
double psi_second_1d(double q, double x);

/// The positive constant D_q of the Fourier representation
///   Ehat[mu] = D_q * integral |muhat - omegahat|^2 |xi|^{-d-q} dxi,
/// computed as -(2pi)^{-d/2} 2^{q+d/2} Gamma((d+q)/2) / (2 Gamma(-q/2))
/// with Gamma at negative arguments via the reflection formula.
/// Valid for q in (0,2), q not an even integer; throws at q = 2 where the
/// generalized transform of |x|^2 vanishes.
double dq_constant(double q, int d);

} // namespace attrep

#endif
