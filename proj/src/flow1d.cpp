#include "attrep/flow1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace attrep {

namespace {

bool strictly_increasing(std::span<const double> v) {
    for (std::size_t j = 1; j < v.size(); ++j)
        if (!(v[j] > v[j - 1])) return false;
    return true;
}

bool nondecreasing(std::span<const double> v) {
    for (std::size_t j = 1; j < v.size(); ++j)
        if (v[j] < v[j - 1]) return false;
    return true;
}

// sum_zeta sgn(x - y_zeta) over a sorted grid, with sgn(0) = 0.
double signed_rank(std::span<const double> y, double x) {
    const auto lo = std::lower_bound(y.begin(), y.end(), x);
    const auto hi = std::upper_bound(y.begin(), y.end(), x);
    const auto below = static_cast<double>(lo - y.begin());
    const auto above = static_cast<double>(y.end() - hi);
    return below - above;
}

std::vector<double> rhs_of(std::span<const double> x, const FlowState& state, ExecMode mode) {
    const std::size_t m = x.size();
    const double inv_m = 1.0 / static_cast<double>(m);
    const double omega_mass = state.y.mass;
    const double q_a = state.params.q_a;
    const double q_r = state.params.q_r;
    std::vector<double> v(m);

    if (q_r == 1.0 && strictly_increasing(x)) {
        // repulsion integral collapses to 2z - 1 exactly on the midpoint grid
        const double y_mean = state.y.mean();
        for (std::size_t j = 0; j < m; ++j) {
            double attr;
            if (q_a == 1.0) {
                attr = omega_mass * signed_rank(state.y.values, x[j]) * inv_m;
            } else if (q_a == 2.0) {
                attr = 2.0 * omega_mass * (x[j] - y_mean);
            } else {
                double s = 0.0;
                for (double yz : state.y.values) s += psi_prime_1d(q_a, x[j] - yz);
                attr = omega_mass * s * inv_m;
            }
            const double z = (static_cast<double>(j) + 0.5) * inv_m;
            v[j] = 2.0 * z - 1.0 - attr;
        }
        return v;
    }

    pairsum::flow_rhs_general(x, state.y.values, omega_mass, q_a, q_r, v, mode);
    return v;
}

EnergyReport flow_energy(std::span<const double> x, const FlowState& state, ExecMode mode) {
    const std::size_t m = x.size();
    const std::vector<double> w(m, 1.0 / static_cast<double>(m));
    EnergyReport r;
    r.attraction = state.y.mass *
                   pairsum::cross_kernel_sum(x, w, state.y.values, w, 1, state.params.q_a, mode);
    r.interaction = -0.5 * pairsum::cross_kernel_sum(x, w, x, w, 1, state.params.q_r, mode);
    r.total = r.attraction + r.interaction;
    return r;
}

std::vector<double> advance(std::span<const double> x, const FlowState& state, double dt,
                            TimeScheme scheme, ExecMode mode) {
    const std::size_t m = x.size();
    std::vector<double> out(x.begin(), x.end());
    if (scheme == TimeScheme::Euler) {
        const auto k1 = rhs_of(x, state, mode);
        for (std::size_t j = 0; j < m; ++j) out[j] += dt * k1[j];
        return out;
    }
    const auto k1 = rhs_of(x, state, mode);
    std::vector<double> tmp(m);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = x[j] + 0.5 * dt * k1[j];
    const auto k2 = rhs_of(tmp, state, mode);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = x[j] + 0.5 * dt * k2[j];
    const auto k3 = rhs_of(tmp, state, mode);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = x[j] + dt * k3[j];
    const auto k4 = rhs_of(tmp, state, mode);
    for (std::size_t j = 0; j < m; ++j)
        out[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    return out;
}

} // namespace

std::vector<double> rhs(const FlowState& state, ExecMode mode) {
    return rhs_of(state.x.values, state, mode);
}

double dissipation(const FlowState& state, ExecMode mode) {
    const auto v = rhs_of(state.x.values, state, mode);
    double s = 0.0;
    for (double vj : v) s += vj * vj;
    return s / static_cast<double>(v.size());
}

FlowState step(const FlowState& state, double dt, TimeScheme scheme, bool monotone_guard,
               ExecMode mode) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    double h = dt;
    for (int attempt = 0; attempt <= 30; ++attempt) {
        auto xn = advance(state.x.values, state, h, scheme, mode);
        if (!monotone_guard || nondecreasing(xn)) {
            FlowState next = state;
            next.t = state.t + h;
            next.x.values = std::move(xn);
            return next;
        }
        h *= 0.5;
    }
    throw std::runtime_error("monotonicity could not be preserved");
}

Trajectory integrate(const FlowState& state0, const FlowConfig& cfg, ExecMode mode) {
    if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("t_end must be >= 0");
    Trajectory traj;
    FlowState state = state0;

    auto record = [&](const FlowState& s) {
        FlowSample smp;
        smp.t = s.t;
        smp.energy = flow_energy(s.x.values, s, mode);
        smp.dissipation = dissipation(s, mode);
        smp.mean = s.x.mean();
        smp.x_values = s.x.values;
        traj.samples.push_back(std::move(smp));
    };

    record(state);
    std::size_t accepted = 0;
    while (state.t < cfg.t_end - 1e-15) {
        const double dt = std::min(cfg.dt0, cfg.t_end - state.t);
        state = step(state, dt, cfg.scheme, cfg.monotone_guard, mode);
        ++accepted;

        double linf = 0.0;
        for (double v : state.x.values) linf = std::max(linf, std::abs(v));
        if (linf > cfg.linf_bound) {
            traj.aborted = true;
            traj.abort_reason = "L^inf growth guard exceeded";
            record(state);
            break;
        }
        const bool at_end = state.t >= cfg.t_end - 1e-15;
        if (accepted % cfg.sample_every == 0 || at_end) record(state);
        if (cfg.tol_steady > 0.0) {
            const auto v = rhs(state, mode);
            double vmax = 0.0;
            for (double vj : v) vmax = std::max(vmax, std::abs(vj));
            if (vmax <= cfg.tol_steady) {
                if (accepted % cfg.sample_every != 0 && !at_end) record(state);
                break;
            }
        }
    }
    traj.final_state = std::move(state);
    return traj;
}

double attraction_field(const GridDensity1D& omega, double q_a, double x) {
    if (q_a == 1.0) return 2.0 * cdf_eval(omega, x) - omega.mass();
    const double h = omega.dx();
    double s = 0.0;
    for (std::size_t i = 0; i < omega.cells.size(); ++i) {
        if (omega.cells[i] == 0.0) continue;
        const double c0 = omega.x_min + static_cast<double>(i) * h;
        const double c1 = c0 + h;
        s += omega.cells[i] *
             (std::pow(std::abs(x - c0), q_a) - std::pow(std::abs(x - c1), q_a));
    }
    return s;
}

namespace {

// leftmost solution of attraction_field = target (the field is monotone
// nondecreasing and unbounded for q_a > 1)
double invert_field(const GridDensity1D& omega, double q_a, double target) {
    double lo = omega.x_min, hi = omega.x_max;
    double span = hi - lo;
    while (attraction_field(omega, q_a, lo) > target) { lo -= span; span *= 2.0; }
    span = hi - lo;
    while (attraction_field(omega, q_a, hi) < target) { hi += span; span *= 2.0; }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (attraction_field(omega, q_a, mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// leftmost x with cdf(x) >= target for the grid density
double invert_cdf(const GridDensity1D& g, double target) {
    const double h = g.dx();
    double cum = 0.0;
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
        const double next = cum + g.cells[i] * h;
        if (next >= target - 1e-15 && g.cells[i] > 0.0) {
            const double frac = std::max(0.0, target - cum) / g.cells[i];
            if (cum + g.cells[i] * frac >= target - 1e-15)
                return g.x_min + static_cast<double>(i) * h + std::min(frac, h);
        }
        cum = next;
    }
    return g.x_max;
}

} // namespace

GridDensity1D steady_state_qr1(const GridDensity1D& omega, double q_a, std::size_t m_out) {
    omega.validate();
    const double m = omega.mass();
    if (m_out == 0) m_out = omega.cells.size();

    double a, b;
    // CDF of the steady state evaluated pointwise
    std::vector<double> edges(m_out + 1);
    GridDensity1D out;

    if (q_a == 1.0) {
        if (m < 1.0 - 1e-12)
            throw std::runtime_error("no steady state (mass escapes)");
        const double shift = 0.5 * (m - 1.0);
        a = invert_cdf(omega, shift);
        b = invert_cdf(omega, 1.0 + shift);
        out.x_min = a;
        out.x_max = b;
        out.cells.resize(m_out);
        const double dx = out.dx();
        for (std::size_t i = 0; i <= m_out; ++i)
            edges[i] = std::clamp(cdf_eval(omega, a + static_cast<double>(i) * dx) - shift,
                                  0.0, 1.0);
        for (std::size_t i = 0; i < m_out; ++i)
            out.cells[i] = (edges[i + 1] - edges[i]) / dx;
        return out;
    }

    if (!(q_a > 1.0 && q_a <= 2.0))
        throw std::invalid_argument("steady_state_qr1 requires q_a in [1,2]");
    a = invert_field(omega, q_a, -1.0);
    b = invert_field(omega, q_a, 1.0);
    out.x_min = a;
    out.x_max = b;
    out.cells.resize(m_out);
    const double dx = out.dx();
    for (std::size_t i = 0; i <= m_out; ++i)
        edges[i] = std::clamp(
            0.5 * (attraction_field(omega, q_a, a + static_cast<double>(i) * dx) + 1.0), 0.0,
            1.0);
    for (std::size_t i = 0; i < m_out; ++i)
        out.cells[i] = (edges[i + 1] - edges[i]) / dx;
    return out;
}

AsymptoticsReport diagnose_asymptotics(const Trajectory& traj, const GridDensity1D& omega) {
    AsymptoticsReport rep;
    const auto& params = traj.final_state.params;
    const double q_a = params.q_a;
    const double q_r = params.q_r;
    const std::size_t m_grid = traj.final_state.x.grid_size();

    rep.energy_nonincreasing = true;
    for (std::size_t k = 1; k < traj.samples.size(); ++k)
        if (traj.samples[k].energy.total > traj.samples[k - 1].energy.total + 1e-8)
            rep.energy_nonincreasing = false;
    for (std::size_t k = 1; k < traj.samples.size(); ++k)
        rep.dissipation_time_integral +=
            0.5 * (traj.samples[k].dissipation + traj.samples[k - 1].dissipation) *
            (traj.samples[k].t - traj.samples[k - 1].t);

    if (q_r == 1.0) {
        const double m = omega.mass();
        if (q_a == 1.0 && m < 1.0 - 1e-12) {
            rep.regime = "qr1-mass-escape";
            // vague convergence: report the mass that left a window around the datum
            const double width = omega.x_max - omega.x_min;
            const double lo = omega.x_min - width, hi = omega.x_max + width;
            const auto& x = traj.final_state.x.values;
            std::size_t outside = 0;
            for (double v : x)
                if (v < lo || v > hi) ++outside;
            rep.tail_mass = static_cast<double>(outside) / static_cast<double>(x.size());
            return rep;
        }
        rep.regime = "qr1-steady-state";
        const auto target = pseudo_inverse(steady_state_qr1(omega, q_a), m_grid);
        rep.w2_to_target.reserve(traj.samples.size());
        for (const auto& s : traj.samples) {
            PseudoInverse1D xs{s.x_values, 1.0};
            rep.w2_to_target.push_back(wasserstein_p(xs, target, 2.0));
        }
        rep.w2_nonincreasing = true;
        for (std::size_t k = 1; k < rep.w2_to_target.size(); ++k)
            if (rep.w2_to_target[k] > rep.w2_to_target[k - 1] + 1e-9)
                rep.w2_nonincreasing = false;
        return rep;
    }

    if (q_a == 2.0 && q_r == 2.0) {
        rep.regime = "q2-traveling-wave";
        // fit the exponential rate of the mean gap from the samples
        const double rho_omega =
            traj.final_state.y.mass > 0.0 ? traj.final_state.y.mean() : 0.0;
        double sxx = 0.0, sxy = 0.0, sx = 0.0, sy = 0.0;
        std::size_t n = 0;
        for (const auto& s : traj.samples) {
            const double gap = std::abs(s.mean - rho_omega);
            if (gap < 1e-12) continue;
            const double t = s.t, y = std::log(gap);
            sx += t; sy += y; sxx += t * t; sxy += t * y;
            ++n;
        }
        if (n >= 2) {
            const double denom = static_cast<double>(n) * sxx - sx * sx;
            if (denom > 0.0) rep.fitted_rate = -((static_cast<double>(n) * sxy - sx * sy) / denom);
        }
        return rep;
    }

    const bool symmetric_range = (q_a == q_r) && q_a > 1.0 && q_a < 4.0 / 3.0;
    const bool asymmetric_range = q_r > 1.0 && q_r < 2.0 && q_r < q_a && q_a <= 2.0;
    rep.regime = (symmetric_range || asymmetric_range) ? "subsequence-range" : "open";
    return rep;
}

} // namespace attrep
