#ifndef ATTREP_FLOW1D_HPP
#define ATTREP_FLOW1D_HPP

#include "attrep/energy.hpp"
#include "attrep/kernels.hpp"
#include "attrep/measures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace attrep {

/// State of the pseudo-inverse gradient flow: X is the evolving pseudo-inverse
/// of mu(t), Y the fixed pseudo-inverse of the datum omega (its mass, possibly
/// different from 1, rides along in Y.mass).
struct FlowState {
    double t = 0.0;
    PseudoInverse1D x;
    PseudoInverse1D y;
    PowerKernelParams params{1.0, 1.0, 1};
};

enum class TimeScheme { Euler, Rk4 };

struct FlowConfig {
    double dt0 = 1e-2;
    double t_end = 1.0;
    TimeScheme scheme = TimeScheme::Rk4;
    bool monotone_guard = true;
    double tol_steady = 0.0;        // stop early when max|rhs| falls below (0 = off)
    double linf_bound = 1e6;        // abort when ||X||_inf exceeds this
    std::size_t sample_every = 1;   // record a sample every k accepted steps
};

/// Velocity of every quantile node. For q_r > 1 the general quadratic form is
/// used; for q_r = 1 and strictly increasing X the repulsion integral
/// collapses to 2z - 1 exactly on the midpoint grid, and for q_a = 1 the
/// attraction field is 2G(x) - m (computed from Y by rank counting).
/// A non-monotone X with q_r = 1 falls back to the general form.
std::vector<double> rhs(const FlowState& state, ExecMode mode = default_exec_mode());

/// One explicit Euler or classical RK4 update of all X_j. With the monotone
/// guard enabled, an update that breaks monotonicity is rejected and retried
/// with dt halved (at most 30 times); throws on underflow.
FlowState step(const FlowState& state, double dt, TimeScheme scheme,
               bool monotone_guard = true, ExecMode mode = default_exec_mode());

struct FlowSample {
    double t = 0.0;
    EnergyReport energy;
    double dissipation = 0.0;
    double mean = 0.0;
    std::vector<double> x_values;
};

struct Trajectory {
    std::vector<FlowSample> samples;
    FlowState final_state;
    bool aborted = false;           // true when the L^inf growth guard fired
    std::string abort_reason;
};

Trajectory integrate(const FlowState& state0, const FlowConfig& cfg,
                     ExecMode mode = default_exec_mode());

/// Steady state for q_r = 1 (Newtonian repulsion): the unit-mass cut of
/// (1/2) psi_a'' * omega around the zero of psi_a' * omega; for q_a = 1 the cut
/// of omega itself around its median. Throws "no steady state (mass escapes)"
/// for q_a = 1 with mass < 1. The result is emitted on a grid of m_out cells
/// spanning the cut interval.
GridDensity1D steady_state_qr1(const GridDensity1D& omega, double q_a,
                               std::size_t m_out = 0);

/// psi_a' * omega evaluated exactly for the piecewise-constant density.
double attraction_field(const GridDensity1D& omega, double q_a, double x);

struct AsymptoticsReport {
    std::string regime;                         // "qr1-steady-state", "q2-traveling-wave",
                                                // "subsequence-range", "open"
    bool w2_nonincreasing = false;
    std::vector<double> w2_to_target;           // empty when no explicit target exists
    std::optional<double> fitted_rate;          // q=2: exponent of the mean-gap decay
    std::optional<double> tail_mass;            // q_a=1, m<1: mass outside the datum window
    bool energy_nonincreasing = false;
    double dissipation_time_integral = 0.0;
};

/// Classifies the parameter regime and measures decay along a finished
/// trajectory; when q_r = 1 the target is steady_state_qr1(omega).
AsymptoticsReport diagnose_asymptotics(const Trajectory& traj, const GridDensity1D& omega);

} // namespace attrep

#endif
