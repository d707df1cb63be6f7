#pragma once

#include "rank1sep/mech/momenta.hpp"

#include <optional>
#include <vector>

namespace rank1sep::mech {

/// Sampled integral curve of a Hamiltonian vector field. When the curve
/// leaves the chart domain, integration stops and `exit_time` is set.
struct Trajectory {
    std::vector<double> times;
    std::vector<PhasePoint> points;
    std::optional<double> exit_time;
};

/// Classical fixed-step RK4 on Hamilton's equations
///   x' = dH/dp (exact),  p' = -dH/dx (finite differences).
inline Trajectory hamiltonian_flow(const MomentaPolynomial& h, const Chart& chart,
    const PhasePoint& start, double total_time, double dt, double fd_step = 1e-5)
{
    if (dt <= 0 || total_time <= 0)
        throw std::invalid_argument("hamiltonian_flow: need dt > 0 and total_time > 0");

    auto rhs = [&](const PhasePoint& z) {
        PhasePoint d;
        d.x = h.dp(z);
        d.p = -dx_gradient(h, z, fd_step);
        return d;
    };
    auto advance = [](const PhasePoint& z, const PhasePoint& d, double s) {
        PhasePoint r;
        r.x = z.x + s * d.x;
        r.p = z.p + s * d.p;
        return r;
    };

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.points.push_back(start);
    int steps = static_cast<int>(std::ceil(total_time / dt - 1e-12));
    PhasePoint z = start;
    double t = 0.0;
    for (int s = 0; s < steps; ++s) {
        double step = std::min(dt, total_time - t);
        PhasePoint k1 = rhs(z);
        PhasePoint k2 = rhs(advance(z, k1, step / 2));
        PhasePoint k3 = rhs(advance(z, k2, step / 2));
        PhasePoint k4 = rhs(advance(z, k3, step));
        PhasePoint next;
        next.x = z.x + (step / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        next.p = z.p + (step / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
        t += step;
        if (!chart.in_domain(next.x)) {
            traj.exit_time = t;
            return traj;
        }
        z = next;
        traj.times.push_back(t);
        traj.points.push_back(z);
    }
    return traj;
}

/// Max over sampled phase points of |{H, K}|; values below the caller's
/// tolerance certify K as a Killing tensor of the chart metric.
inline double killing_check(const MomentaPolynomial& k, const Chart& chart, int samples,
    std::uint64_t seed = 2026, double fd_step = 1e-5)
{
    if (samples < 1)
        throw std::invalid_argument("killing_check: samples must be >= 1");
    MomentaPolynomial h = metric_hamiltonian(chart);
    double worst = 0.0;
    for (const PhasePoint& z : sample_phase_points(chart, samples, seed))
        worst = std::max(worst, std::abs(poisson_bracket(h, k, z, fd_step)));
    return worst;
}

} // namespace rank1sep::mech
