#pragma once

#include "rank1sep/mech/chart.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rank1sep::mech {

/// Phase-space point (x, p) of a cotangent chart.
struct PhasePoint {
    Vec x;
    Vec p;
};

/// Polynomial in the momenta of degree at most 2 with position-dependent
/// coefficients: F(x,p) = c(x) + sum_i c_i(x) p_i + sum_ij c_ij(x) p_i p_j,
/// the degree-2 coefficient matrix symmetric.
struct MomentaPolynomial {
    int degree = 0;
    std::function<double(const Vec&)> c0;
    std::function<Vec(const Vec&)> c1;
    std::function<Mat(const Vec&)> c2;

    double operator()(const PhasePoint& z) const
    {
        double v = c0 ? c0(z.x) : 0.0;
        if (degree >= 1 && c1)
            v += c1(z.x).dot(z.p);
        if (degree >= 2 && c2)
            v += z.p.dot(c2(z.x) * z.p);
        return v;
    }

    /// Exact momentum gradient dF/dp at fixed position.
    Vec dp(const PhasePoint& z) const
    {
        Vec g = Vec::Zero(z.p.size());
        if (degree >= 1 && c1)
            g += c1(z.x);
        if (degree >= 2 && c2)
            g += 2.0 * (c2(z.x) * z.p);
        return g;
    }

    static MomentaPolynomial constant(double v)
    {
        MomentaPolynomial f;
        f.degree = 0;
        f.c0 = [v](const Vec&) { return v; };
        return f;
    }

    /// The coordinate function x^i as a degree-0 polynomial.
    static MomentaPolynomial coordinate(int i)
    {
        MomentaPolynomial f;
        f.degree = 0;
        f.c0 = [i](const Vec& x) { return x(i); };
        return f;
    }

    /// The momentum p_i.
    static MomentaPolynomial momentum(int i, int n)
    {
        MomentaPolynomial f;
        f.degree = 1;
        f.c1 = [i, n](const Vec&) { return Vec(Vec::Unit(n, i)); };
        return f;
    }

    static MomentaPolynomial linear(std::function<Vec(const Vec&)> coeffs)
    {
        MomentaPolynomial f;
        f.degree = 1;
        f.c1 = std::move(coeffs);
        return f;
    }

    static MomentaPolynomial quadratic(std::function<Mat(const Vec&)> coeffs)
    {
        MomentaPolynomial f;
        f.degree = 2;
        f.c2 = std::move(coeffs);
        return f;
    }
};

/// H(x,p) = 1/2 sum g^{ij}(x) p_i p_j for the chart metric.
inline MomentaPolynomial metric_hamiltonian(const Chart& chart)
{
    auto metric = chart.metric;
    return MomentaPolynomial::quadratic([metric](const Vec& x) {
        Mat g = metric(x);
        Eigen::LLT<Mat> llt(g);
        if (llt.info() != Eigen::Success)
            throw std::domain_error("metric_hamiltonian: metric not positive definite");
        return Mat(0.5 * llt.solve(Mat::Identity(g.rows(), g.cols())));
    });
}

/// Position gradient dF/dx by central differences with one Richardson level.
inline Vec dx_gradient(const MomentaPolynomial& f, const PhasePoint& z, double step)
{
    if (step <= 0)
        throw std::invalid_argument("dx_gradient: step must be positive");
    int n = static_cast<int>(z.x.size());
    Vec g(n);
    for (int i = 0; i < n; ++i) {
        auto central = [&](double h) {
            PhasePoint zp = z, zm = z;
            zp.x(i) += h;
            zm.x(i) -= h;
            return (f(zp) - f(zm)) / (2.0 * h);
        };
        g(i) = (4.0 * central(step / 2) - central(step)) / 3.0;
    }
    return g;
}

/// {F, G} = sum_i (dF/dp_i dG/dx_i - dF/dx_i dG/dp_i); momentum derivatives
/// exact, position derivatives by Richardson-extrapolated central differences.
inline double poisson_bracket(const MomentaPolynomial& f, const MomentaPolynomial& g,
    const PhasePoint& at, double step = 1e-5)
{
    Vec fp = f.dp(at), gp = g.dp(at);
    Vec fx = dx_gradient(f, at, step), gx = dx_gradient(g, at, step);
    return fp.dot(gx) - fx.dot(gp);
}

/// Deterministic phase points in the chart's sample box, momenta in [-1,1]^N.
inline std::vector<PhasePoint> sample_phase_points(const Chart& chart, int count,
    std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<PhasePoint> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        PhasePoint z;
        z.x = chart.sample_center;
        for (int i = 0; i < chart.dim; ++i)
            z.x(i) += chart.sample_radius * unit(rng);
        if (!chart.in_domain(z.x))
            continue;
        z.p = Vec(chart.dim);
        for (int i = 0; i < chart.dim; ++i)
            z.p(i) = unit(rng);
        out.push_back(std::move(z));
    }
    return out;
}

} // namespace rank1sep::mech
