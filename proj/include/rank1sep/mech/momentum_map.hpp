#pragma once

#include "rank1sep/curvature.hpp"
#include "rank1sep/lie_su.hpp"
#include "rank1sep/mech/momenta.hpp"

#include <complex>
#include <stdexcept>

namespace rank1sep::mech {

/// The chart on which momentum maps of a model space are defined.
inline Chart model_chart(const SpaceModel& m)
{
    switch (m.family) {
    case Family::real:
        return m.sign > 0 ? sphere_chart(m.real_dimension) : hyperbolic_chart(m.real_dimension);
    case Family::complex:
        return m.sign > 0 ? cpn_chart(m.real_dimension / 2) : chn_chart(m.real_dimension / 2);
    default:
        throw std::invalid_argument("model_chart: unsupported family");
    }
}

namespace detail {

inline Mat to_double_matrix(const QMat& a)
{
    Mat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = to_double(a(i, j));
    return m;
}

inline CMat to_double_matrix(const CQMat& a)
{
    CMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m(i, j) = std::complex<double>(to_double(a(i, j).re), to_double(a(i, j).im));
    return m;
}

} // namespace detail

/// Killing vector field of A in so(n+1) on the stereographic sphere chart:
/// push the ambient flow X' = AX through the projection. With
/// X = (2x, 1 - |x|^2) / (1 + |x|^2) and d = 1 + X_{n+1} = 2/(1 + |x|^2),
///   V(x) = ( (AX)_{1..n} - x (AX)_{n+1} ) / d.
inline std::function<Vec(const Vec&)> sphere_killing_field(const Mat& a)
{
    int n = static_cast<int>(a.rows()) - 1;
    return [a, n](const Vec& x) {
        double s = 1.0 + x.squaredNorm();
        Vec amb(n + 1);
        amb.head(n) = 2.0 * x / s;
        amb(n) = (2.0 - s) / s;
        Vec ax = a * amb;
        return Vec((ax.head(n) - ax(n) * x) * (s / 2.0));
    };
}

/// Killing vector field of A in so(n,1) on the hyperboloid graph chart,
/// t = sqrt(1 + |x|^2).
inline std::function<Vec(const Vec&)> hyperbolic_killing_field(const Mat& a)
{
    int n = static_cast<int>(a.rows()) - 1;
    return [a, n](const Vec& x) {
        double t = std::sqrt(1.0 + x.squaredNorm());
        Vec v(n);
        for (int i = 0; i < n; ++i)
            v(i) = a.row(i).head(n).dot(x) + a(i, n) * t;
        return v;
    };
}

/// Killing vector field of xi in su(n+1) (resp. su(n,1)) on the affine chart
/// w = z / z_d, where d is the distinguished homogeneous coordinate (index 0
/// for CP^n, the last index for CH^n):
///   w'_a = xi_{a d} + sum_b xi_{a b} w_b - w_a (xi_{d d} + sum_b xi_{d b} w_b),
/// sums over the non-distinguished indices, returned in realified coordinates.
inline std::function<Vec(const Vec&)> projective_killing_field(const CMat& xi, int dist)
{
    int n = static_cast<int>(xi.rows()) - 1;
    // indices of the non-distinguished homogeneous coordinates, in order
    std::vector<int> idx;
    for (int i = 0; i <= n; ++i)
        if (i != dist)
            idx.push_back(i);
    return [xi, dist, idx, n](const Vec& x) {
        CVec w = detail::to_complex(x);
        std::complex<double> denom = xi(dist, dist);
        for (int b = 0; b < n; ++b)
            denom += xi(dist, idx[b]) * w(b);
        CVec dw(n);
        for (int a = 0; a < n; ++a) {
            std::complex<double> s = xi(idx[a], dist);
            for (int b = 0; b < n; ++b)
                s += xi(idx[a], idx[b]) * w(b);
            dw(a) = s - w(a) * denom;
        }
        return detail::to_real(dw);
    };
}

/// Linear momentum function P_xi(x, p) = sum_i p_i V_xi^i(x) of a Killing
/// vector field V_xi.
inline MomentaPolynomial killing_momentum(std::function<Vec(const Vec&)> field)
{
    return MomentaPolynomial::linear(std::move(field));
}

/// Momentum map of xi in so(n+1) or so(n,1) on the corresponding real model
/// chart. The assignment is an anti-homomorphism into the Poisson algebra:
/// {P_xi, P_eta} = -P_[xi,eta] (one global sign, fixed once per model).
inline MomentaPolynomial momentum_map(const QMat& xi, const SpaceModel& m)
{
    if (m.family != Family::real)
        throw std::invalid_argument("momentum_map: real matrix generator needs a real-family model");
    if (xi.rows() != m.real_dimension + 1 || xi.cols() != xi.rows())
        throw std::invalid_argument("momentum_map: generator size mismatch");
    Mat a = detail::to_double_matrix(xi);
    return killing_momentum(m.sign > 0 ? sphere_killing_field(a) : hyperbolic_killing_field(a));
}

/// Momentum map of xi in su(n+1) or su(n,1) on the affine chart of CP^n or
/// CH^n. Same global sign convention: {P_xi, P_eta} = -P_[xi,eta].
inline MomentaPolynomial momentum_map(const CQMat& xi, const SpaceModel& m)
{
    if (m.family != Family::complex)
        throw std::invalid_argument(
            "momentum_map: complex matrix generator needs a complex-family model");
    if (2 * (xi.rows() - 1) != m.real_dimension)
        throw std::invalid_argument("momentum_map: generator size mismatch");
    CMat x = detail::to_double_matrix(xi);
    int dist = m.sign > 0 ? 0 : static_cast<int>(xi.rows()) - 1;
    return killing_momentum(projective_killing_field(x, dist));
}

} // namespace rank1sep::mech
