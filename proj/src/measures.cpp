#include "attrep/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace attrep {

double DiscreteMeasure::mass() const {
    double m = 0.0;
    for (double w : weights) m += w;
    return m;
}

void DiscreteMeasure::validate() const {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (points.size() != weights.size() * static_cast<std::size_t>(dim))
        throw std::invalid_argument("points/weights size mismatch");
    for (double w : weights)
        if (!(w >= 0.0)) throw std::invalid_argument("negative weight");
    if (!(mass() > 0.0)) throw std::invalid_argument("empty measure");
}

DiscreteMeasure DiscreteMeasure::dirac(double x, double w) {
    return DiscreteMeasure{1, {x}, {w}};
}

DiscreteMeasure DiscreteMeasure::from_points_1d(std::span<const double> xs, double total_mass) {
    DiscreteMeasure mu;
    mu.dim = 1;
    mu.points.assign(xs.begin(), xs.end());
    mu.weights.assign(xs.size(), total_mass / static_cast<double>(xs.size()));
    return mu;
}

double GridDensity1D::mass() const {
    double s = 0.0;
    for (double c : cells) s += c;
    return s * dx();
}

void GridDensity1D::validate() const {
    if (!(x_max > x_min)) throw std::invalid_argument("x_max must exceed x_min");
    if (cells.empty()) throw std::invalid_argument("empty grid");
    for (double c : cells)
        if (!(c >= 0.0)) throw std::invalid_argument("negative density");
    if (!(mass() > 0.0)) throw std::invalid_argument("empty measure");
}

GridDensity1D GridDensity1D::uniform(double a, double b, std::size_t m, double total_mass) {
    GridDensity1D g;
    g.x_min = a;
    g.x_max = b;
    g.cells.assign(m, total_mass / (b - a));
    return g;
}

DiscreteMeasure GridDensity1D::to_atoms() const {
    DiscreteMeasure mu;
    mu.dim = 1;
    const double h = dx();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == 0.0) continue;
        mu.points.push_back(x_min + (static_cast<double>(i) + 0.5) * h);
        mu.weights.push_back(cells[i] * h);
    }
    if (mu.weights.empty()) throw std::invalid_argument("empty measure");
    return mu;
}

bool PseudoInverse1D::nondecreasing() const {
    for (std::size_t j = 1; j < values.size(); ++j)
        if (values[j] < values[j - 1]) return false;
    return true;
}

double PseudoInverse1D::mean() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double cdf_eval(const DiscreteMeasure& mu, double x) {
    if (mu.dim != 1) throw std::invalid_argument("pseudo-inverse is 1D only");
    double s = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu.points[i] <= x) s += mu.weights[i];
    return s;
}

double cdf_eval(const GridDensity1D& mu, double x) {
    if (x <= mu.x_min) return 0.0;
    const double h = mu.dx();
    double s = 0.0;
    for (std::size_t i = 0; i < mu.cells.size(); ++i) {
        const double lo = mu.x_min + static_cast<double>(i) * h;
        if (x >= lo + h) {
            s += mu.cells[i] * h;
        } else {
            s += mu.cells[i] * (x - lo);
            break;
        }
    }
    return s;
}

PseudoInverse1D pseudo_inverse(const DiscreteMeasure& mu, std::size_t m_grid) {
    if (mu.dim != 1) throw std::invalid_argument("pseudo-inverse is 1D only");
    const double total = mu.mass();
    if (!(total > 0.0)) throw std::invalid_argument("empty measure");

    std::vector<std::size_t> order(mu.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return mu.points[a] < mu.points[b]; });

    PseudoInverse1D x;
    x.mass = total;
    x.values.resize(m_grid);
    double cum = 0.0;
    std::size_t k = 0;
    for (std::size_t j = 0; j < m_grid; ++j) {
        const double target = x.z(j) * total;
        // inf{x : F(x) > z}: advance while the cumulative weight stays <= target
        while (k < order.size() && cum + mu.weights[order[k]] <= target)
            cum += mu.weights[order[k++]];
        x.values[j] = (k < order.size()) ? mu.points[order[k]] : mu.points[order.back()];
    }
    return x;
}

PseudoInverse1D pseudo_inverse(const GridDensity1D& mu, std::size_t m_grid) {
    const double total = mu.mass();
    if (!(total > 0.0)) throw std::invalid_argument("empty measure");
    const double h = mu.dx();

    PseudoInverse1D x;
    x.mass = total;
    x.values.resize(m_grid);
    double cum = 0.0;
    std::size_t i = 0;
    for (std::size_t j = 0; j < m_grid; ++j) {
        const double target = x.z(j) * total;
        while (i < mu.cells.size() && cum + mu.cells[i] * h <= target)
            cum += mu.cells[i++] * h;
        if (i >= mu.cells.size()) {
            x.values[j] = mu.x_max;
        } else {
            // F is linear across the cell; F(x) first exceeds target inside it
            x.values[j] = mu.x_min + static_cast<double>(i) * h + (target - cum) / mu.cells[i];
        }
    }
    return x;
}

double wasserstein_p(const PseudoInverse1D& a, const PseudoInverse1D& b, double p) {
    if (a.grid_size() != b.grid_size())
        throw std::invalid_argument("pseudo-inverse grids must match");
    if (std::abs(a.mass - 1.0) > 1e-12 || std::abs(b.mass - 1.0) > 1e-12)
        throw std::invalid_argument("Wasserstein defined for probability measures");
    if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
    const std::size_t m = a.grid_size();
    if (std::isinf(p)) {
        double mx = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            mx = std::max(mx, std::abs(a.values[j] - b.values[j]));
        return mx;
    }
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        s += std::pow(std::abs(a.values[j] - b.values[j]), p);
    return std::pow(s / static_cast<double>(m), 1.0 / p);
}

double moment(const DiscreteMeasure& mu, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("moment order must be >= 0");
    double s = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        double n2 = 0.0;
        for (double c : mu.point(i)) n2 += c * c;
        s += mu.weights[i] * std::pow(n2, 0.5 * r);
    }
    return s;
}

double moment(const GridDensity1D& mu, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("moment order must be >= 0");
    const double h = mu.dx();
    double s = 0.0;
    for (std::size_t i = 0; i < mu.cells.size(); ++i) {
        const double xc = mu.x_min + (static_cast<double>(i) + 0.5) * h;
        s += mu.cells[i] * h * std::pow(std::abs(xc), r);
    }
    return s;
}

} // namespace attrep
