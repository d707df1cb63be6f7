#pragma once

#include "rank1sep/mech/eigenframe.hpp"
#include "rank1sep/mech/momenta.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rank1sep::sov {

using mech::Chart;
using mech::Mat;
using mech::MomentaPolynomial;
using mech::PhasePoint;
using mech::Vec;

/// Candidate data for orthogonal separation on an N-dimensional chart:
/// r Killing vector fields (as their degree-1 momentum maps) and N - r
/// quadratic Killing tensors (as degree-2 momenta polynomials), one of which
/// should be twice the metric Hamiltonian.
struct SeparationCandidate {
    Chart chart;
    std::vector<MomentaPolynomial> killing_vectors;
    std::vector<MomentaPolynomial> killing_tensors;

    int dim() const { return chart.dim; }
    int r() const { return static_cast<int>(killing_vectors.size()); }
};

/// Outcome of the three-part separability test. Indices in the witnesses
/// refer to the concatenated list (vectors first, then tensors).
struct BenentiReport {
    bool pass_i = false;   ///< involution + functional independence
    bool pass_ii = false;  ///< some tensor is twice the metric Hamiltonian
    bool pass_iii = false; ///< common g-orthogonal eigenframe exists

    double max_bracket = 0.0;
    int bracket_a = -1, bracket_b = -1;
    double min_singular_value = 0.0;

    int metric_index = -1;
    double metric_residual = std::numeric_limits<double>::infinity();

    int frame_fail_i = -1, frame_fail_j = -1;
    double frame_commutator = 0.0;

    bool pass() const { return pass_i && pass_ii && pass_iii; }
};

/// Check the three separability conditions on a candidate at `samples`
/// random phase points:
///   (I)   all pairwise Poisson brackets of the N functions vanish within
///         `bracket_tol`, and their N x 2N phase-space Jacobian has full
///         rank (singular values above `rank_tol`) at the first sample;
///   (II)  some listed tensor equals 2 * metric_hamiltonian within
///         `metric_tol` at every sample;
///   (III) the tensors admit a common eigenframe g-orthogonal to the
///         Killing vectors at every sample.
inline BenentiReport benenti_check(const SeparationCandidate& cand, int samples,
    std::uint64_t seed = 2026, double bracket_tol = 1e-6, double metric_tol = 1e-8,
    double rank_tol = 1e-8, double fd_step = 1e-5)
{
    if (samples < 1)
        throw std::invalid_argument("benenti_check: need samples >= 1");
    int n = cand.dim();
    int r = cand.r();
    int m = static_cast<int>(cand.killing_tensors.size());
    if (m < 1 || r + m != n)
        throw std::invalid_argument("benenti_check: need r >= 0 Killing vectors and "
                                    "N - r >= 1 tensors summing to the chart dimension");

    std::vector<MomentaPolynomial> all;
    for (const auto& v : cand.killing_vectors)
        all.push_back(v);
    for (const auto& k : cand.killing_tensors)
        all.push_back(k);

    BenentiReport rep;
    auto pts = mech::sample_phase_points(cand.chart, samples, seed);

    // (I) involution
    for (const auto& z : pts)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                double br = std::abs(mech::poisson_bracket(all[a], all[b], z, fd_step));
                if (br > rep.max_bracket) {
                    rep.max_bracket = br;
                    rep.bracket_a = a;
                    rep.bracket_b = b;
                }
            }

    // (I) functional independence: N x 2N Jacobian at the first sample
    {
        Mat jac(n, 2 * n);
        for (int a = 0; a < n; ++a) {
            jac.row(a).head(n) = mech::dx_gradient(all[a], pts[0], fd_step).transpose();
            jac.row(a).tail(n) = all[a].dp(pts[0]).transpose();
        }
        Eigen::JacobiSVD<Mat> svd(jac);
        rep.min_singular_value = svd.singularValues().minCoeff();
    }
    rep.pass_i = rep.max_bracket < bracket_tol && rep.min_singular_value > rank_tol;

    // (II) the metric tensor is in the list
    MomentaPolynomial h = mech::metric_hamiltonian(cand.chart);
    for (int k = 0; k < m; ++k) {
        double worst = 0.0;
        for (const auto& z : pts)
            worst = std::max(worst, std::abs(cand.killing_tensors[k](z) - 2.0 * h(z)));
        if (worst < rep.metric_residual) {
            rep.metric_residual = worst;
            rep.metric_index = k;
        }
    }
    rep.pass_ii = rep.metric_residual < metric_tol;

    // (III) common g-orthogonal eigenframe at every sampled position
    rep.pass_iii = true;
    for (const auto& z : pts) {
        auto ef = mech::common_eigenframe(cand.killing_tensors, cand.chart, z.x,
            cand.killing_vectors);
        if (!ef.success) {
            rep.pass_iii = false;
            rep.frame_fail_i = ef.fail_i;
            rep.frame_fail_j = ef.fail_j;
            rep.frame_commutator = ef.commutator_norm;
            break;
        }
    }
    return rep;
}

/// Metric in coordinates adapted to a commuting family of Killing vector
/// fields: ds^2 = g_{ab}(u) du^a du^b + h_{ij}(u) dt^i dt^j, where u are m
/// transversal coordinates on a leaf of the g-orthogonal distribution and
/// t are the flow parameters of the Killing fields. Both block evaluators
/// take the transversal coordinate u (an m-vector near 0).
struct SeparableMetric {
    int m = 0, r = 0;
    std::function<Mat(const Vec&)> g_block;
    std::function<Mat(const Vec&)> h_block;
    double frobenius_defect = 0.0; ///< worst non-involutivity witness observed
    double max_cross = 0.0;        ///< worst du-dt cross metric entry observed
    double t_dependence = 0.0;     ///< worst block variation across t-translates
};

/// Thrown when the Killing momentum maps fail to Poisson-commute.
struct NonCommutingKilling : std::runtime_error {
    int a, b;
    double bracket;
    NonCommutingKilling(int a_, int b_, double br)
        : std::runtime_error("assemble_block_metric: Killing fields " + std::to_string(a_)
              + " and " + std::to_string(b_) + " do not commute, bracket "
              + std::to_string(br))
        , a(a_)
        , b(b_)
        , bracket(br)
    {
    }
};

/// Thrown when the g-orthogonal distribution fails the Frobenius test.
struct FrobeniusFailure : std::runtime_error {
    double defect;
    explicit FrobeniusFailure(double d)
        : std::runtime_error(
              "assemble_block_metric: orthogonal distribution not involutive, defect "
              + std::to_string(d))
        , defect(d)
    {
    }
};

namespace detail {

    /// RK4 integration of x' = field(x) from x over unit parameter time.
    inline Vec integrate_field(const std::function<Vec(const Vec&)>& field, Vec x, int steps)
    {
        double h = 1.0 / steps;
        for (int s = 0; s < steps; ++s) {
            Vec k1 = field(x);
            Vec k2 = field(x + 0.5 * h * k1);
            Vec k3 = field(x + 0.5 * h * k2);
            Vec k4 = field(x + h * k3);
            x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        return x;
    }

} // namespace detail

/// Assemble the two metric blocks of eq-style adapted coordinates from a
/// chart and r pairwise commuting Killing vector fields (given as degree-1
/// momentum maps), sampled around `center` within `radius`.
///
/// Verifies, at random points of the region, that the momentum maps
/// Poisson-commute and that the g-orthogonal distribution is involutive
/// (Frobenius: Lie brackets of the orthogonally projected coordinate fields
/// stay g-orthogonal to the Killing fields). On success returns the blocks
/// as functions of the transversal coordinate, together with the observed
/// cross-term and t-dependence residuals over sampled torus translates.
inline SeparableMetric assemble_block_metric(const Chart& chart,
    const std::vector<MomentaPolynomial>& killing_vectors, const Vec& center, double radius,
    int samples = 8, std::uint64_t seed = 2026, double bracket_tol = 1e-6,
    double frobenius_tol = 1e-6, double fd_step = 1e-5)
{
    int n = chart.dim;
    int r = static_cast<int>(killing_vectors.size());
    int m = n - r;
    if (r < 1 || m < 1)
        throw std::invalid_argument("assemble_block_metric: need 1 <= r < N Killing fields");
    for (const auto& v : killing_vectors)
        if (v.degree != 1)
            throw std::invalid_argument("assemble_block_metric: Killing fields must be degree 1");

    // sample positions of the region (with random momenta for the brackets)
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<PhasePoint> pts;
    while (static_cast<int>(pts.size()) < samples) {
        PhasePoint z;
        z.x = center;
        for (int i = 0; i < n; ++i)
            z.x(i) += radius * unit(rng);
        if (!chart.in_domain(z.x))
            continue;
        z.p = Vec(n);
        for (int i = 0; i < n; ++i)
            z.p(i) = unit(rng);
        pts.push_back(std::move(z));
    }

    // precondition: the momentum maps Poisson-commute
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (const auto& z : pts) {
                double br = std::abs(
                    mech::poisson_bracket(killing_vectors[a], killing_vectors[b], z, fd_step));
                if (br > bracket_tol)
                    throw NonCommutingKilling(a, b, br);
            }

    auto vmat = [&](const Vec& x) {
        Mat v(n, r);
        for (int a = 0; a < r; ++a)
            v.col(a) = killing_vectors[a].c1(x);
        return v;
    };
    // g-orthogonal projector onto the distribution D = (span V)^perp_g
    auto projector = [&](const Vec& x) {
        Mat v = vmat(x);
        Eigen::JacobiSVD<Mat> svd(v);
        if (svd.singularValues().minCoeff() < 1e-8)
            throw std::domain_error(
                "assemble_block_metric: Killing fields linearly dependent at a sampled point");
        Mat g = chart.metric(x);
        Mat gram = v.transpose() * g * v;
        return Mat(Mat::Identity(n, n) - v * gram.llt().solve(v.transpose() * g));
    };

    // Frobenius test: brackets of projected coordinate fields stay in D
    SeparableMetric out;
    out.m = m;
    out.r = r;
    for (const auto& z : pts) {
        Mat p0 = projector(z.x);
        Mat g = chart.metric(z.x);
        Mat v = vmat(z.x);
        // Jacobians of the projected coordinate fields X_j = P e_j
        std::vector<Mat> jac(n, Mat(n, n));
        for (int k = 0; k < n; ++k) {
            Vec xp = z.x, xm = z.x;
            xp(k) += fd_step;
            xm(k) -= fd_step;
            Mat d = (projector(xp) - projector(xm)) / (2.0 * fd_step);
            for (int j = 0; j < n; ++j)
                jac[j].col(k) = d.col(j);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec lb = jac[j] * p0.col(i) - jac[i] * p0.col(j);
                double defect = (v.transpose() * g * lb).cwiseAbs().maxCoeff();
                out.frobenius_defect = std::max(out.frobenius_defect, defect);
            }
    }
    if (out.frobenius_defect > frobenius_tol)
        throw FrobeniusFailure(out.frobenius_defect);

    // transversal basis of D at the region center
    Mat b0;
    {
        Mat gv = chart.metric(center) * vmat(center);
        Eigen::ColPivHouseholderQR<Mat> qr(gv);
        Mat full = qr.householderQ();
        b0 = full.rightCols(m);
    }

    // leaf coordinates: gamma(u) integrates the projected constant field
    auto gamma = [=, metric = chart.metric](const Vec& u) {
        auto field = [&](const Vec& x) {
            Mat v(n, r);
            for (int a = 0; a < r; ++a)
                v.col(a) = killing_vectors[a].c1(x);
            Mat g = metric(x);
            Mat gram = v.transpose() * g * v;
            Vec w = b0 * u;
            return Vec(w - v * gram.llt().solve(v.transpose() * (g * w)));
        };
        return detail::integrate_field(field, center, 64);
    };
    // torus translate: flow the commuting combination sum_a t_a V_a
    auto translate = [=](const Vec& x0, const Vec& t) {
        auto field = [&](const Vec& x) {
            Vec w = Vec::Zero(n);
            for (int a = 0; a < r; ++a)
                w += t(a) * killing_vectors[a].c1(x);
            return w;
        };
        return detail::integrate_field(field, x0, 256);
    };
    auto adapted = [=](const Vec& u, const Vec& t) { return translate(gamma(u), t); };
    // du-Jacobian of the adapted chart by Richardson central differences
    auto u_jacobian = [=](const Vec& u, const Vec& t) {
        Mat j(n, m);
        for (int a = 0; a < m; ++a) {
            auto central = [&](double h) {
                Vec up = u, um = u;
                up(a) += h;
                um(a) -= h;
                return Vec((adapted(up, t) - adapted(um, t)) / (2.0 * h));
            };
            double h0 = 1e-3;
            j.col(a) = (4.0 * central(h0 / 2) - central(h0)) / 3.0;
        }
        return j;
    };

    auto g_at = [=, metric = chart.metric](const Vec& u, const Vec& t) {
        Vec x = adapted(u, t);
        Mat ju = u_jacobian(u, t);
        return Mat(ju.transpose() * metric(x) * ju);
    };
    auto h_at = [=, metric = chart.metric, vm = vmat](const Vec& u, const Vec& t) {
        Vec x = adapted(u, t);
        Mat v(n, r);
        for (int a = 0; a < r; ++a)
            v.col(a) = killing_vectors[a].c1(x);
        return Mat(v.transpose() * metric(x) * v);
    };

    Vec t0 = Vec::Zero(r);
    out.g_block = [=](const Vec& u) { return g_at(u, t0); };
    out.h_block = [=](const Vec& u) { return h_at(u, t0); };

    // residuals over sampled (u, t): cross terms and t-dependence of blocks
    for (int s = 0; s < std::min(samples, 4); ++s) {
        Vec u(m), t(r);
        for (int a = 0; a < m; ++a)
            u(a) = 0.25 * radius * unit(rng);
        for (int a = 0; a < r; ++a)
            t(a) = 0.5 * unit(rng);
        Mat gu0 = g_at(u, t0), gut = g_at(u, t);
        Mat hu0 = h_at(u, t0), hut = h_at(u, t);
        out.t_dependence = std::max(out.t_dependence, (gut - gu0).cwiseAbs().maxCoeff());
        out.t_dependence = std::max(out.t_dependence, (hut - hu0).cwiseAbs().maxCoeff());
        Vec x = adapted(u, t);
        Mat cross = u_jacobian(u, t).transpose() * chart.metric(x) * vmat(x);
        out.max_cross = std::max(out.max_cross, cross.cwiseAbs().maxCoeff());
    }
    return out;
}

} // namespace rank1sep::sov
