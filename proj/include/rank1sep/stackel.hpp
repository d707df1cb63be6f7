#pragma once

#include "rank1sep/mech/flow.hpp"
#include "rank1sep/mech/momenta.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rank1sep::sov {

using mech::Chart;
using mech::Mat;
using mech::MomentaPolynomial;
using mech::PhasePoint;
using mech::Vec;

/// Separable system in Stäckel form: S(x) C = P with P_i = f_i(x_i) p_i^2
/// + phi_i(x_i), the i-th row of S depending on x_i only.
///
/// Entries are stored as full-position evaluators; the univariate invariant
/// is enforced by the loaders that build honest instances, which lets tests
/// construct deliberately corrupted systems violating it.
struct StackelSystem {
    using PosFn = std::function<double(const Vec&)>;

    std::string name;
    int m = 0;
    std::vector<std::vector<PosFn>> S; // S[i][j]
    std::vector<PosFn> f, phi;
    std::vector<std::array<double, 2>> domain; // admissible open interval per coordinate
    std::vector<std::array<double, 2>> sample; // interior box test points are drawn from
    Vec ref;                                   // lower limits of the W_i integrals

    Mat S_matrix(const Vec& x) const
    {
        Mat s(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                s(i, j) = S[i][j](x);
        return s;
    }

    bool in_domain(const Vec& x) const
    {
        for (int i = 0; i < m; ++i)
            if (!(x(i) > domain[i][0] && x(i) < domain[i][1]))
                return false;
        return true;
    }

    /// Position with the i-th coordinate replaced by xi; used to evaluate the
    /// univariate row-i data at an integration variable.
    Vec substitute(const Vec& x, int i, double xi) const
    {
        Vec y = x;
        y(i) = xi;
        return y;
    }
};

inline Mat stackel_inverse(const StackelSystem& sys, const Vec& x)
{
    Mat s = sys.S_matrix(x);
    Eigen::FullPivLU<Mat> lu(s);
    if (!lu.isInvertible())
        throw std::domain_error("StackelSystem: S(x) singular at a probed point");
    return lu.inverse();
}

/// The separation constants C = S(x)^{-1} P(x, p).
inline Vec stackel_constants(const StackelSystem& sys, const PhasePoint& z)
{
    Vec p(sys.m);
    for (int i = 0; i < sys.m; ++i)
        p(i) = sys.f[i](z.x) * z.p(i) * z.p(i) + sys.phi[i](z.x);
    return stackel_inverse(sys, z.x) * p;
}

/// c_i as a momenta polynomial: c_i = sum_j [S^{-1}]_{ij} (f_j p_j^2 + phi_j).
inline MomentaPolynomial as_momenta_polynomial(const StackelSystem& sys, int i)
{
    MomentaPolynomial c;
    c.degree = 2;
    c.c2 = [sys, i](const Vec& x) {
        Mat sinv = stackel_inverse(sys, x);
        Mat k = Mat::Zero(sys.m, sys.m);
        for (int j = 0; j < sys.m; ++j)
            k(j, j) = sinv(i, j) * sys.f[j](x);
        return k;
    };
    c.c0 = [sys, i](const Vec& x) {
        Mat sinv = stackel_inverse(sys, x);
        double v = 0;
        for (int j = 0; j < sys.m; ++j)
            v += sinv(i, j) * sys.phi[j](x);
        return v;
    };
    return c;
}

/// The chart on which c_1 is the geodesic Hamiltonian: the diagonal metric
/// with g^{jj} = 2 [S^{-1}]_{1j} f_j, so metric_hamiltonian(chart) == c_1.
inline Chart system_chart(const StackelSystem& sys)
{
    Chart c;
    c.dim = sys.m;
    c.metric = [sys](const Vec& x) {
        Mat sinv = stackel_inverse(sys, x);
        Mat g = Mat::Zero(sys.m, sys.m);
        for (int j = 0; j < sys.m; ++j) {
            double ginv = 2.0 * sinv(0, j) * sys.f[j](x);
            if (ginv <= 0)
                throw std::domain_error("system_chart: metric not positive definite");
            g(j, j) = 1.0 / ginv;
        }
        return g;
    };
    c.in_domain = [sys](const Vec& x) { return sys.in_domain(x); };
    const auto& box = sys.sample.empty() ? sys.domain : sys.sample;
    c.sample_center = Vec(sys.m);
    double minw = std::numeric_limits<double>::max();
    for (int i = 0; i < sys.m; ++i) {
        c.sample_center(i) = 0.5 * (box[i][0] + box[i][1]);
        minw = std::min(minw, box[i][1] - box[i][0]);
    }
    c.sample_radius = 0.45 * minw;
    return c;
}

/// Max over sampled phase points and pairs (i, j) of |{c_i, c_j}|. Points
/// where S(x) is singular are skipped and counted in `skipped`.
inline double verify_involution(const StackelSystem& sys, int samples, std::uint64_t seed = 2026,
    double fd_step = 1e-5, int* skipped = nullptr)
{
    Chart chart = system_chart(sys);
    std::vector<MomentaPolynomial> cs;
    for (int i = 0; i < sys.m; ++i)
        cs.push_back(as_momenta_polynomial(sys, i));
    double worst = 0;
    int skip = 0;
    for (const PhasePoint& z : mech::sample_phase_points(chart, samples, seed)) {
        try {
            for (int i = 0; i < sys.m; ++i)
                for (int j = i + 1; j < sys.m; ++j)
                    worst = std::max(worst, std::abs(mech::poisson_bracket(cs[i], cs[j], z, fd_step)));
        } catch (const std::domain_error&) {
            ++skip;
        }
    }
    if (skipped)
        *skipped = skip;
    return worst;
}

/// Thrown when a W_i integrand enters the classically forbidden region.
struct ForbiddenRegion : std::runtime_error {
    int index;
    double xi;
    ForbiddenRegion(int i, double x)
        : std::runtime_error("generating_W: negative radicand for coordinate "
              + std::to_string(i + 1) + " at " + std::to_string(x)),
          index(i), xi(x)
    {
    }
};

namespace detail {

/// Radicand of the i-th generating integrand,
/// R_i(xi) = (-phi_i + sum_a S_{ia} c_a) / f_i, rows evaluated at xi.
inline double radicand(const StackelSystem& sys, const Vec& c, const Vec& base, int i, double xi)
{
    Vec y = sys.substitute(base, i, xi);
    double num = -sys.phi[i](y);
    for (int a = 0; a < sys.m; ++a)
        num += sys.S[i][a](y) * c(a);
    return num / sys.f[i](y);
}

inline double quadrature(const std::function<double(double)>& g, double a, double b)
{
    if (a == b)
        return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, a, b, 10, 1e-10);
}

} // namespace detail

struct WResult {
    double value;
    Vec gradient; // dW/dx_i = branch_i sqrt(R_i(x_i)), in closed form
};

/// Additively separated generating function W(x; c) = sum_i W_i(x_i),
///   W_i = branch_i * integral from ref_i to x_i of sqrt(R_i),
/// by adaptive quadrature (absolute tolerance 1e-9). Throws ForbiddenRegion
/// when a radicand goes negative on an integration segment.
inline WResult generating_W(const StackelSystem& sys, const Vec& c, const Vec& x,
    const std::vector<int>& branch)
{
    WResult r;
    r.value = 0.0;
    r.gradient = Vec(sys.m);
    for (int i = 0; i < sys.m; ++i) {
        auto integrand = [&](double xi) {
            double rad = detail::radicand(sys, c, x, i, xi);
            if (rad < 0)
                throw ForbiddenRegion(i, xi);
            return std::sqrt(rad);
        };
        r.value += branch[i] * detail::quadrature(integrand, sys.ref(i), x(i));
        double rad_here = detail::radicand(sys, c, x, i, x(i));
        if (rad_here < 0)
            throw ForbiddenRegion(i, x(i));
        r.gradient(i) = branch[i] * std::sqrt(rad_here);
    }
    return r;
}

/// |H(x, dW/dx) - c_1| with H = c_1's momenta polynomial.
inline double hj_residual(const StackelSystem& sys, const Vec& w_gradient, double c1,
    const Vec& at)
{
    MomentaPolynomial h = as_momenta_polynomial(sys, 0);
    return std::abs(h({at, w_gradient}) - c1);
}

/// Conjugate quantities Q_i = dW/dc_i = sum_j branch_j * integral of
///   g_{ji}(xi) = S_{ji}(xi) / (2 f_j(xi) sqrt(R_j(xi)))
/// accumulated incrementally along a trajectory of the c_1 flow, with branch
/// tracking through the turning points of each coordinate (where R_j = 0 and
/// p_j changes sign, the path folds back and contributions keep adding).
/// Returns Q(t_k) - Q(0) for every trajectory sample.
///
/// Sign convention (the single place it is fixed): the branch of sqrt(R_j)
/// entering dW/dc is taken opposite to the instantaneous momentum p_j, so with
/// the Hamiltonian convention x' = dH/dp the drift law is dQ_i/dt = -delta_{i1}:
/// Q_1 decreases with unit slope ("Const_1 - t") and the remaining Q_i stay
/// constant.
inline std::vector<Vec> accumulate_Q(const StackelSystem& sys, const mech::Trajectory& traj,
    const Vec& c)
{
    int m = sys.m;
    std::vector<Vec> out;
    out.reserve(traj.points.size());
    out.push_back(Vec::Zero(m));

    // dQ_i gets, per coordinate j, the directed integral of g_ji; near a
    // turning point xi* the substitution xi = xi* - s^2 (or + s^2) removes
    // the 1/sqrt endpoint singularity.
    auto g_ji = [&](const Vec& base, int j, int i, double xi) {
        Vec y = sys.substitute(base, j, xi);
        double rad = detail::radicand(sys, c, base, j, xi);
        if (rad <= 0)
            throw ForbiddenRegion(j, xi);
        return sys.S[j][i](y) / (2.0 * sys.f[j](y) * std::sqrt(rad));
    };
    auto segment = [&](const Vec& base, int j, int i, double a, double b) {
        return detail::quadrature([&](double xi) { return g_ji(base, j, i, xi); }, a, b);
    };
    // integral of g_ji from a to the turning point beyond it, regularized
    auto to_turning = [&](const Vec& base, int j, int i, double a, double xs, int dir) {
        double len = std::sqrt(std::abs(xs - a));
        auto h = [&](double s) {
            double xi = xs - dir * s * s;
            double rad = detail::radicand(sys, c, base, j, xi);
            if (rad <= 0)
                return 0.0; // only exactly at the endpoint, measure zero
            Vec y = sys.substitute(base, j, xi);
            return sys.S[j][i](y) / (2.0 * sys.f[j](y) * std::sqrt(rad)) * 2.0 * s;
        };
        return detail::quadrature(h, 0.0, len);
    };
    auto find_turning = [&](const Vec& base, int j, double from, int dir) {
        double step = 1e-6;
        double lo = from, hi = from + dir * step;
        int guard = 0;
        while (detail::radicand(sys, c, base, j, hi) > 0 && guard++ < 80) {
            lo = hi;
            step *= 2.0;
            hi = from + dir * step;
        }
        if (guard >= 80)
            throw std::runtime_error("accumulate_Q: no turning point found after sign change");
        for (int it = 0; it < 100; ++it) {
            double mid = 0.5 * (lo + hi);
            (detail::radicand(sys, c, base, j, mid) > 0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };

    Vec q = Vec::Zero(m);
    for (size_t k = 1; k < traj.points.size(); ++k) {
        const PhasePoint& za = traj.points[k - 1];
        const PhasePoint& zb = traj.points[k];
        for (int j = 0; j < m; ++j) {
            double a = za.x(j), b = zb.x(j);
            double pa = za.p(j), pb = zb.p(j);
            if (pa == 0 && pb == 0)
                continue;
            if (pa * pb >= 0) {
                double sigma = (pa + pb) > 0 ? -1.0 : 1.0;
                for (int i = 0; i < m; ++i)
                    q(i) += sigma * segment(za.x, j, i, a, b);
            } else {
                int dir = pa > 0 ? 1 : -1; // direction of travel before folding
                double xs = find_turning(za.x, j, dir > 0 ? std::max(a, b) : std::min(a, b), dir);
                double sa = dir, sb = -dir;
                for (int i = 0; i < m; ++i) {
                    double first = to_turning(za.x, j, i, a, xs, dir);
                    double second = to_turning(zb.x, j, i, b, xs, dir);
                    // directed: sigma_a * int_a^{xs} + sigma_b * int_{xs}^{b},
                    // then negated by the opposite-branch convention above
                    q(i) -= sa * dir * first + sb * (-dir) * second;
                }
            }
        }
        out.push_back(q);
    }
    return out;
}

} // namespace rank1sep::sov
