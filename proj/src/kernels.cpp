#include "attrep/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace attrep {

double psi(double q, std::span<const double> x) {
    double s2 = 0.0;
    for (double c : x) s2 += c * c;
    if (s2 == 0.0) return 0.0;
    return std::pow(s2, 0.5 * q);
}

double psi(double q, double x) {
    return std::pow(std::abs(x), q);
}

double psi_prime_1d(double q, double x) {
    if (x == 0.0) return 0.0;
    if (q == 1.0) return x > 0.0 ? 1.0 : -1.0;
    if (q == 2.0) return 2.0 * x;
    return q * std::pow(std::abs(x), q - 1.0) * (x > 0.0 ? 1.0 : -1.0);
}

double psi_second_1d(double q, double x) {
    if (q == 2.0) return 2.0;
    if (x == 0.0) return 0.0;
    return q * (q - 1.0) * std::pow(std::abs(x), q - 2.0);
}

double dq_constant(double q, int d) {
    if (q == 2.0)
        throw std::invalid_argument("Fourier form degenerate at q=2");
    if (!(q > 0.0 && q < 2.0))
        throw std::invalid_argument("dq_constant requires q in (0,2)");
    if (d < 1)
        throw std::invalid_argument("dq_constant requires d >= 1");
    const double pi = std::numbers::pi;
    // Gamma(-q/2) = pi / (sin(-pi q/2) * Gamma(1 + q/2))
    const double gamma_neg = pi / (std::sin(-pi * q / 2.0) * std::tgamma(1.0 + q / 2.0));
    return -std::pow(2.0 * pi, -0.5 * d) * std::pow(2.0, q + 0.5 * d) *
           std::tgamma(0.5 * (d + q)) / (2.0 * gamma_neg);
}

} // namespace attrep
