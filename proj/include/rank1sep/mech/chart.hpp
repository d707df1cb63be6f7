#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace rank1sep::mech {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Local coordinate chart: a metric evaluator on an open domain, plus a box
/// around `sample_center` from which test points may be drawn safely.
struct Chart {
    int dim = 0;
    std::function<Mat(const Vec&)> metric;
    std::function<bool(const Vec&)> in_domain;
    Vec sample_center;
    double sample_radius = 0.0;
};

/// Flat R^n.
inline Chart euclidean_chart(int n)
{
    Chart c;
    c.dim = n;
    c.metric = [n](const Vec&) { return Mat::Identity(n, n); };
    c.in_domain = [](const Vec&) { return true; };
    c.sample_center = Vec::Zero(n);
    c.sample_radius = 1.0;
    return c;
}

/// Stereographic chart of the unit sphere S^n, projected from the south pole:
/// g = 4 |dx|^2 / (1 + |x|^2)^2. Covers everything but the south pole, so
/// geodesics avoiding it (generic great circles) stay in the chart forever.
inline Chart sphere_chart(int n)
{
    Chart c;
    c.dim = n;
    c.metric = [n](const Vec& x) {
        double s = 1.0 + x.squaredNorm();
        return Mat((4.0 / (s * s)) * Mat::Identity(n, n));
    };
    c.in_domain = [](const Vec& x) { return x.norm() < 50.0; };
    c.sample_center = Vec::Zero(n);
    c.sample_radius = 0.4;
    return c;
}

/// Graph chart of hyperbolic space H^n as the hyperboloid t = sqrt(1 + |x|^2)
/// in Minkowski space: g_ij = delta_ij - x_i x_j / (1 + |x|^2).
inline Chart hyperbolic_chart(int n)
{
    Chart c;
    c.dim = n;
    c.metric = [n](const Vec& x) {
        double t2 = 1.0 + x.squaredNorm();
        return Mat(Mat::Identity(n, n) - (x * x.transpose()) / t2);
    };
    c.in_domain = [](const Vec& x) { return x.norm() < 5.0; };
    c.sample_center = Vec::Zero(n);
    c.sample_radius = 0.5;
    return c;
}

namespace detail {

inline CVec to_complex(const Vec& x)
{
    CVec w(x.size() / 2);
    for (int a = 0; a < w.size(); ++a)
        w(a) = std::complex<double>(x(2 * a), x(2 * a + 1));
    return w;
}

inline Vec to_real(const CVec& w)
{
    Vec x(2 * w.size());
    for (int a = 0; a < w.size(); ++a) {
        x(2 * a) = w(a).real();
        x(2 * a + 1) = w(a).imag();
    }
    return x;
}

/// Real 2n x 2n metric of the Hermitian matrix H in interleaved coordinates
/// (Re w_1, Im w_1, ...): g(X, Y) = Re(X^dag H Y).
inline Mat realify_hermitian(const CMat& h)
{
    int n = static_cast<int>(h.rows());
    Mat g(2 * n, 2 * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            g(2 * a, 2 * b) = h(a, b).real();
            g(2 * a, 2 * b + 1) = -h(a, b).imag();
            g(2 * a + 1, 2 * b) = h(a, b).imag();
            g(2 * a + 1, 2 * b + 1) = h(a, b).real();
        }
    return g;
}

} // namespace detail

/// Affine chart of CP^n (complex dimension n, real dimension 2n) with the
/// Fubini-Study metric normalized to holomorphic sectional curvature 4:
///   H_ab = ((1 + |w|^2) delta_ab - w_a conj(w_b)) / (1 + |w|^2)^2.
inline Chart cpn_chart(int n)
{
    Chart c;
    c.dim = 2 * n;
    c.metric = [n](const Vec& x) {
        CVec w = detail::to_complex(x);
        double s = 1.0 + w.squaredNorm();
        CMat h = (s * CMat::Identity(n, n) - w * w.adjoint()) / (s * s);
        return detail::realify_hermitian(h);
    };
    c.in_domain = [](const Vec& x) { return x.norm() < 10.0; };
    c.sample_center = Vec::Zero(2 * n);
    c.sample_radius = 0.5;
    return c;
}

/// Unit-ball chart of complex hyperbolic space CH^n with the Bergman-type
/// metric of holomorphic sectional curvature -4:
///   H_ab = ((1 - |w|^2) delta_ab + w_a conj(w_b)) / (1 - |w|^2)^2.
inline Chart chn_chart(int n)
{
    Chart c;
    c.dim = 2 * n;
    c.metric = [n](const Vec& x) {
        CVec w = detail::to_complex(x);
        double s = 1.0 - w.squaredNorm();
        if (s <= 0)
            throw std::domain_error("chn_chart: point outside the unit ball");
        CMat h = (s * CMat::Identity(n, n) + w * w.adjoint()) / (s * s);
        return detail::realify_hermitian(h);
    };
    c.in_domain = [](const Vec& x) { return x.norm() < 0.9; };
    c.sample_center = Vec::Zero(2 * n);
    c.sample_radius = 0.3;
    return c;
}

} // namespace rank1sep::mech
