#pragma once

#include "rank1sep/linalg_exact.hpp"
#include "rank1sep/octonion.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace rank1sep {

namespace detail {

/// Wedge basis e_i ^ e_j, i < j, in lexicographic order; spans so(8).
inline const std::vector<std::pair<int, int>>& wedge_index_pairs()
{
    static const std::vector<std::pair<int, int>> pairs = [] {
        std::vector<std::pair<int, int>> p;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                p.emplace_back(i, j);
        return p;
    }();
    return pairs;
}

struct LambdaTables {
    std::vector<QMat> lam;  // lambda(e_i ^ e_j) per wedge pair
    std::vector<QMat> lam2; // lambda^2(e_i ^ e_j)

    static const LambdaTables& get()
    {
        static const LambdaTables t = build();
        return t;
    }

private:
    static LambdaTables build()
    {
        LambdaTables t;
        const Rat half(1, 2);
        for (auto [i, j] : wedge_index_pairs()) {
            Octonion a = Octonion::basis(i), b = Octonion::basis(j);
            if (i == 0) {
                // e_0 ^ e_j = -(e_j ^ e_0); apply the generator formula with
                // the imaginary slot first, as lambda is defined only there.
                QMat l = left_mul_matrix(conj(a)) * left_mul_matrix(conj(b)) * half;
                QMat r = right_mul_matrix(conj(a)) * right_mul_matrix(conj(b)) * half;
                t.lam.push_back(-l);
                t.lam2.push_back(-r);
            } else {
                t.lam.push_back(left_mul_matrix(conj(b)) * left_mul_matrix(conj(a)) * half);
                t.lam2.push_back(right_mul_matrix(conj(b)) * right_mul_matrix(conj(a)) * half);
            }
        }
        return t;
    }
};

} // namespace detail

/// lambda automorphism of so(8): on generators a ^ b with a, b imaginary,
/// lambda(a ^ b) = 1/2 L_{b*} L_{a*}; extended linearly over the wedge basis.
inline QMat lambda_auto(const QMat& m)
{
    if (!m.is_skew())
        throw std::invalid_argument("lambda_auto: input is not skew-symmetric");
    const auto& pairs = detail::wedge_index_pairs();
    const auto& t = detail::LambdaTables::get();
    QMat out(8, 8);
    for (size_t k = 0; k < pairs.size(); ++k) {
        const Rat& c = m(pairs[k].first, pairs[k].second);
        if (c != 0)
            out = out + t.lam[k] * c;
    }
    return out;
}

/// lambda^2 automorphism of so(8): lambda^2(a ^ b) = 1/2 R_{b*} R_{a*}.
inline QMat lambda2_auto(const QMat& m)
{
    if (!m.is_skew())
        throw std::invalid_argument("lambda2_auto: input is not skew-symmetric");
    const auto& pairs = detail::wedge_index_pairs();
    const auto& t = detail::LambdaTables::get();
    QMat out(8, 8);
    for (size_t k = 0; k < pairs.size(); ++k) {
        const Rat& c = m(pairs[k].first, pairs[k].second);
        if (c != 0)
            out = out + t.lam2[k] * c;
    }
    return out;
}

/// Element of f4^- in the quadruple model so(8) + O + O + O.
struct F4Element {
    QMat A{8, 8};
    Octonion u, v, w;

    F4Element() = default;
    F4Element(QMat a, Octonion uu, Octonion vv, Octonion ww)
        : A(std::move(a)), u(std::move(uu)), v(std::move(vv)), w(std::move(ww))
    {
        if (!A.is_skew())
            throw std::invalid_argument("F4Element: so(8) component must be skew");
    }

    F4Element operator+(const F4Element& o) const { return {A + o.A, u + o.u, v + o.v, w + o.w}; }
    F4Element operator-(const F4Element& o) const { return {A - o.A, u - o.u, v - o.v, w - o.w}; }
    F4Element operator*(const Rat& s) const { return {A * s, u * s, v * s, w * s}; }

    bool is_zero() const { return A.is_zero() && u.is_zero() && v.is_zero() && w.is_zero(); }
};

/// Bracket of the quadruple model:
///   C = AB - BA - 4 u^x + 4 lambda^2(v^y) + 4 lambda(w^z)
///   r = Ax - Bu - (vz)* + (yw)*
///   s = lambda(A)y - lambda(B)v + (wx)* - (zu)*
///   t = lambda^2(A)z - lambda^2(B)w + (uy)* - (xv)*
inline F4Element bracket(const F4Element& X, const F4Element& Y)
{
    const QMat& A = X.A;
    const QMat& B = Y.A;
    const Octonion &u = X.u, &v = X.v, &w = X.w;
    const Octonion &x = Y.u, &y = Y.v, &z = Y.w;

    QMat C = A * B - B * A - wedge(u, x) * Rat(4) + lambda2_auto(wedge(v, y)) * Rat(4)
        + lambda_auto(wedge(w, z)) * Rat(4);
    Octonion r = Octonion::from_coords(A * x.coords()) - Octonion::from_coords(B * u.coords())
        - conj(v * z) + conj(y * w);
    Octonion s = Octonion::from_coords(lambda_auto(A) * y.coords())
        - Octonion::from_coords(lambda_auto(B) * v.coords()) + conj(w * x) - conj(z * u);
    Octonion t = Octonion::from_coords(lambda2_auto(A) * z.coords())
        - Octonion::from_coords(lambda2_auto(B) * w.coords()) + conj(u * y) - conj(x * v);
    return {std::move(C), std::move(r), std::move(s), std::move(t)};
}

/// Coordinate model of f4^-: 28 wedge coordinates followed by the three
/// octonion slots, 52 real dimensions in total.
struct F4Model {
    using Element = F4Element;

    static int dim() { return 52; }

    static Element basis(int k)
    {
        const auto& pairs = detail::wedge_index_pairs();
        F4Element e;
        if (k < 28) {
            e.A = wedge(Octonion::basis(pairs[k].first), Octonion::basis(pairs[k].second));
        } else if (k < 36) {
            e.u = Octonion::basis(k - 28);
        } else if (k < 44) {
            e.v = Octonion::basis(k - 36);
        } else {
            e.w = Octonion::basis(k - 44);
        }
        return e;
    }

    static QVec coords(const Element& x)
    {
        const auto& pairs = detail::wedge_index_pairs();
        QVec c(52);
        for (int k = 0; k < 28; ++k)
            c[k] = x.A(pairs[k].first, pairs[k].second);
        for (int i = 0; i < 8; ++i) {
            c[28 + i] = x.u[i];
            c[36 + i] = x.v[i];
            c[44 + i] = x.w[i];
        }
        return c;
    }

    static Element from_coords(const QVec& c)
    {
        const auto& pairs = detail::wedge_index_pairs();
        F4Element x;
        for (int k = 0; k < 28; ++k) {
            x.A(pairs[k].first, pairs[k].second) = c[k];
            x.A(pairs[k].second, pairs[k].first) = -c[k];
        }
        for (int i = 0; i < 8; ++i) {
            x.u[i] = c[28 + i];
            x.v[i] = c[36 + i];
            x.w[i] = c[44 + i];
        }
        return x;
    }

    static Element lie_bracket(const Element& a, const Element& b) { return bracket(a, b); }

    /// Gram matrix of the Killing form B(X,Y) = tr(ad_X ad_Y) on the basis.
    /// Computed once from structure constants; safe for concurrent readers.
    static const QMat& killing_gram()
    {
        static const QMat gram = [] {
            constexpr int dim = 52;
            std::vector<QMat> ad(dim, QMat(dim, dim));
            for (int i = 0; i < dim; ++i) {
                Element ei = basis(i);
                for (int k = 0; k < dim; ++k) {
                    QVec col = coords(lie_bracket(ei, basis(k)));
                    for (int r = 0; r < dim; ++r)
                        ad[i](r, k) = col[r];
                }
            }
            QMat g(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = i; j < dim; ++j) {
                    Rat tr = 0;
                    for (int k = 0; k < dim; ++k)
                        for (int l = 0; l < dim; ++l)
                            if (ad[i](k, l) != 0)
                                tr += ad[i](k, l) * ad[j](l, k);
                    g(i, j) = tr;
                    g(j, i) = tr;
                }
            return g;
        }();
        return gram;
    }
};

} // namespace rank1sep
