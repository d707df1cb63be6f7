#pragma once

#include "rank1sep/mech/momenta.hpp"

#include <optional>
#include <random>
#include <vector>

namespace rank1sep::mech {

/// Result of a simultaneous-eigenframe computation. On success `frame` holds
/// g-orthogonal eigenvectors as columns; on failure the indices of a pair of
/// operators whose restricted commutator is nonzero, with its norm.
struct EigenframeResult {
    bool success = false;
    Mat frame;
    int fail_i = -1, fail_j = -1;
    double commutator_norm = 0.0;
};

/// Common eigenframe of the operators K_a g^{-1} at a point, within the
/// subspace g-orthogonal to the given Killing vectors.
///
/// Method: with S = g^{1/2}, each B_a = S K_a S is symmetric and similar to
/// g^{-1/2}-conjugated K_a g^{-1}; restrict to the Euclidean complement of
/// S * (Killing vectors), require pairwise commutators below `comm_tol`, then
/// diagonalize a random linear combination (ties resolved by re-diagonalizing
/// each operator inside the eigenspaces of the combination).
inline EigenframeResult common_eigenframe(const std::vector<MomentaPolynomial>& tensors,
    const Chart& chart, const Vec& at, const std::vector<MomentaPolynomial>& orthogonal_to = {},
    double comm_tol = 1e-8, std::uint64_t seed = 77)
{
    EigenframeResult res;
    int n = chart.dim;
    Mat g = chart.metric(at);
    Eigen::SelfAdjointEigenSolver<Mat> gsolve(g);
    if (gsolve.eigenvalues().minCoeff() <= 0)
        throw std::domain_error("common_eigenframe: metric not positive definite");
    Mat s = gsolve.operatorSqrt();
    Mat sinv = gsolve.operatorInverseSqrt();

    // orthonormal basis q of the admissible subspace in S-coordinates
    Mat q;
    if (orthogonal_to.empty()) {
        q = Mat::Identity(n, n);
    } else {
        Mat v(n, static_cast<int>(orthogonal_to.size()));
        for (size_t j = 0; j < orthogonal_to.size(); ++j) {
            if (orthogonal_to[j].degree != 1)
                throw std::invalid_argument("common_eigenframe: Killing vectors must be degree 1");
            v.col(static_cast<int>(j)) = s * orthogonal_to[j].c1(at);
        }
        Eigen::ColPivHouseholderQR<Mat> qr(v);
        Mat full = qr.householderQ();
        int r = static_cast<int>(qr.rank());
        q = full.rightCols(n - r);
    }
    int m = static_cast<int>(q.cols());

    std::vector<Mat> ops;
    for (const auto& k : tensors) {
        if (k.degree != 2)
            throw std::invalid_argument("common_eigenframe: tensors must be degree 2");
        Mat b = s * k.c2(at) * s;
        ops.push_back(q.transpose() * b * q);
    }

    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j) {
            double c = (ops[i] * ops[j] - ops[j] * ops[i]).norm();
            if (c > comm_tol) {
                res.fail_i = static_cast<int>(i);
                res.fail_j = static_cast<int>(j);
                res.commutator_norm = c;
                return res;
            }
        }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.2, 1.0);
    Mat combo = Mat::Zero(m, m);
    for (const auto& op : ops)
        combo += unit(rng) * op;
    Eigen::SelfAdjointEigenSolver<Mat> es(combo);
    Mat e = es.eigenvectors();

    // resolve eigenvalue ties by refining within each degenerate eigenspace
    const double gap_tol = 1e-6;
    int start = 0;
    while (start < m) {
        int end = start + 1;
        while (end < m && es.eigenvalues()(end) - es.eigenvalues()(end - 1) < gap_tol)
            ++end;
        if (end - start > 1) {
            Mat block = e.middleCols(start, end - start);
            for (const auto& op : ops) {
                Mat sub = block.transpose() * op * block;
                Eigen::SelfAdjointEigenSolver<Mat> sub_es(sub);
                // rotate only if the operator actually splits the space
                if (sub_es.eigenvalues().maxCoeff() - sub_es.eigenvalues().minCoeff() > gap_tol) {
                    block = block * sub_es.eigenvectors();
                    break;
                }
            }
            e.middleCols(start, end - start) = block;
        }
        start = end;
    }

    res.success = true;
    res.frame = sinv * q * e; // g-orthogonal columns in chart coordinates
    return res;
}

} // namespace rank1sep::mech
