#pragma once

#include "rank1sep/mech/chart.hpp"

#include <vector>

namespace rank1sep::mech {

/// A (1,1)-tensor field evaluator: x -> matrix L^i_j(x).
using TensorField = std::function<Mat(const Vec&)>;

/// 3-index array T^k_{ij}, stored as one matrix (i, j) per upper index k.
using Torsion3 = std::vector<Mat>;

inline double torsion_norm(const Torsion3& t)
{
    double s = 0.0;
    for (const Mat& m : t)
        s += m.squaredNorm();
    return std::sqrt(s);
}

namespace detail {

/// dL/dx_m by Richardson-extrapolated central differences, one matrix per m.
inline std::vector<Mat> field_jacobian(const TensorField& l, const Vec& at, double step)
{
    int n = static_cast<int>(at.size());
    std::vector<Mat> d;
    d.reserve(n);
    for (int m = 0; m < n; ++m) {
        auto central = [&](double h) {
            Vec xp = at, xm = at;
            xp(m) += h;
            xm(m) -= h;
            return Mat((l(xp) - l(xm)) / (2.0 * h));
        };
        d.push_back((4.0 * central(step / 2) - central(step)) / 3.0);
    }
    return d;
}

} // namespace detail

/// Nijenhuis torsion of L at a point:
///   N^k_{ij} = L^m_i d_m L^k_j - L^m_j d_m L^k_i
///            - L^k_m (d_i L^m_j - d_j L^m_i).
inline Torsion3 nijenhuis_torsion(const TensorField& l, const Vec& at, double step = 1e-5)
{
    if (step <= 0)
        throw std::invalid_argument("nijenhuis_torsion: step must be positive");
    int n = static_cast<int>(at.size());
    Mat lv = l(at);
    std::vector<Mat> dl = detail::field_jacobian(l, at, step);

    Torsion3 nt(n, Mat::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double v = 0.0;
                for (int m = 0; m < n; ++m)
                    v += lv(m, i) * dl[m](k, j) - lv(m, j) * dl[m](k, i)
                        - lv(k, m) * (dl[i](m, j) - dl[j](m, i));
                nt[k](i, j) = v;
            }
    return nt;
}

/// Haantjes torsion of L at a point:
///   H(X,Y) = L^2 N(X,Y) + N(LX,LY) - L( N(LX,Y) + N(X,LY) ),
/// with N the Nijenhuis torsion. Componentwise:
///   H^k_{ij} = (L^2)^k_m N^m_{ij} + N^k_{ab} L^a_i L^b_j
///            - L^k_m (N^m_{aj} L^a_i + N^m_{ib} L^b_j).
inline Torsion3 haantjes_torsion(const TensorField& l, const Vec& at, double step = 1e-5)
{
    int n = static_cast<int>(at.size());
    Mat lv = l(at);
    Mat l2 = lv * lv;
    Torsion3 nt = nijenhuis_torsion(l, at, step);

    Torsion3 ht(n, Mat::Zero(n, n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double v = 0.0;
                for (int m = 0; m < n; ++m) {
                    v += l2(k, m) * nt[m](i, j);
                    double lin = 0.0, ljn = 0.0;
                    for (int a = 0; a < n; ++a) {
                        lin += nt[m](a, j) * lv(a, i);
                        ljn += nt[m](i, a) * lv(a, j);
                    }
                    v -= lv(k, m) * (lin + ljn);
                }
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        v += nt[k](a, b) * lv(a, i) * lv(b, j);
                ht[k](i, j) = v;
            }
    return ht;
}

/// Pointwise-diagonal field L = diag(f_1(x_1), ..., f_N(x_N)); always has
/// vanishing Haantjes torsion.
inline TensorField separable_diagonal_field(std::vector<std::function<double(double)>> fs)
{
    return [fs = std::move(fs)](const Vec& x) {
        int n = static_cast<int>(x.size());
        Mat m = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = fs[i](x(i));
        return m;
    };
}

/// Shipped counterexample: distinct constant eigenvalues with an eigenframe
/// rotating about the z-axis as a function of x_3; pointwise diagonalizable
/// but with nonzero Haantjes torsion away from special points.
inline TensorField rotating_eigenframe_field()
{
    return [](const Vec& x) {
        int n = static_cast<int>(x.size());
        double c = std::cos(x(n - 1)), s = std::sin(x(n - 1));
        Mat r = Mat::Identity(n, n);
        r(0, 0) = c;
        r(0, 1) = -s;
        r(1, 0) = s;
        r(1, 1) = c;
        Mat d = Mat::Zero(n, n);
        for (int i = 0; i < n; ++i)
            d(i, i) = 1.0 + i;
        return Mat(r * d * r.transpose());
    };
}

} // namespace rank1sep::mech
