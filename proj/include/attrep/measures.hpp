#ifndef ATTREP_MEASURES_HPP
#define ATTREP_MEASURES_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace attrep {

/// Weighted point set in R^d. Positions are stored flat, row-major
/// (point i occupies points[i*dim .. i*dim+dim)). Weights are nonnegative
/// with positive total mass.
struct DiscreteMeasure {
    int dim = 1;
    std::vector<double> points;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
    double mass() const;
    /// Throws std::invalid_argument if the invariants fail.
    void validate() const;

    static DiscreteMeasure dirac(double x, double w = 1.0);
    static DiscreteMeasure from_points_1d(std::span<const double> xs, double total_mass = 1.0);
};

/// Piecewise-constant nonnegative density on a uniform 1D grid over
/// [x_min, x_max] with M = cells.size() cells.
struct GridDensity1D {
    double x_min = 0.0;
    double x_max = 1.0;
    std::vector<double> cells;

    double dx() const { return (x_max - x_min) / static_cast<double>(cells.size()); }
    double mass() const;
    void validate() const;

    /// Uniform density of the given mass on [a,b] with M cells.
    static GridDensity1D uniform(double a, double b, std::size_t m, double total_mass = 1.0);
    /// Midpoint atoms carrying cell masses; zero cells are kept as zero-weight atoms dropped.
    DiscreteMeasure to_atoms() const;
};

/// Nondecreasing quantile values X(z_j) at the midpoints z_j = (j-1/2)/M of
/// the unit interval. `mass` records the measure's total mass; the values are
/// quantiles of the normalized measure.
struct PseudoInverse1D {
    std::vector<double> values;
    double mass = 1.0;

    std::size_t grid_size() const { return values.size(); }
    double z(std::size_t j) const {
        return (static_cast<double>(j) + 0.5) / static_cast<double>(values.size());
    }
    bool nondecreasing() const;
    /// First moment of the normalized measure, int_0^1 X(z) dz by midpoint rule.
    double mean() const;
};

/// X(z_j) = inf{x : F(x) > z_j} with F the CDF of measure/mass (Eq. with the
/// strict inequality, so atoms assign their boundary to the right).
PseudoInverse1D pseudo_inverse(const DiscreteMeasure& mu, std::size_t m_grid);
PseudoInverse1D pseudo_inverse(const GridDensity1D& mu, std::size_t m_grid);

/// mu((-inf, x]), right-continuous and nondecreasing in x. Unnormalized.
double cdf_eval(const DiscreteMeasure& mu, double x);
double cdf_eval(const GridDensity1D& mu, double x);

/// ||X - Y||_{L^p[0,1]} by midpoint quadrature; p = infinity gives the grid max.
/// Requires equal grid sizes and both measures of mass 1.
double wasserstein_p(const PseudoInverse1D& a, const PseudoInverse1D& b, double p);

/// int |x|^r dmu(x): exact sum for discrete measures, midpoint rule for grids.
double moment(const DiscreteMeasure& mu, double r);
double moment(const GridDensity1D& mu, double r);

} // namespace attrep

#endif
