#pragma once

#include "rank1sep/lie_f4.hpp"
#include "rank1sep/lie_su.hpp"
#include "rank1sep/linalg_exact.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace rank1sep {

/// Span of a list of elements of an ambient algebra, kept as the raw basis.
/// Linear independence over the reals is asserted on construction.
template <class Model>
struct Subalgebra {
    std::vector<typename Model::Element> basis;

    Subalgebra() = default;
    Subalgebra(const Model& model, std::vector<typename Model::Element> b) : basis(std::move(b))
    {
        std::vector<QVec> cols;
        cols.reserve(basis.size());
        for (const auto& e : basis)
            cols.push_back(model.coords(e));
        if (!basis.empty() && rank(columns(cols)) != static_cast<int>(basis.size()))
            throw std::invalid_argument("Subalgebra: basis is linearly dependent");
    }
};

template <class Model>
struct AbelianReport {
    bool abelian = true;
    int i = -1, j = -1; // indices of a non-commuting pair when !abelian
    typename Model::Element commutator{};
};

/// True iff all pairwise brackets of the basis vanish; otherwise reports a
/// witness pair together with its commutator.
template <class Model>
AbelianReport<Model> is_abelian(const Model& model, const Subalgebra<Model>& s)
{
    AbelianReport<Model> rep;
    for (size_t i = 0; i < s.basis.size(); ++i)
        for (size_t j = i + 1; j < s.basis.size(); ++j) {
            auto c = model.lie_bracket(s.basis[i], s.basis[j]);
            if (!is_zero(model.coords(c))) {
                rep.abelian = false;
                rep.i = static_cast<int>(i);
                rep.j = static_cast<int>(j);
                rep.commutator = std::move(c);
                return rep;
            }
        }
    return rep;
}

/// ad_X as a real matrix in the model basis.
template <class Model>
QMat adjoint_matrix(const Model& model, const typename Model::Element& x)
{
    int d = model.dim();
    QMat ad(d, d);
    for (int k = 0; k < d; ++k) {
        QVec col = model.coords(model.lie_bracket(x, model.basis(k)));
        for (int r = 0; r < d; ++r)
            ad(r, k) = col[r];
    }
    return ad;
}

/// dim ker(ad_X), by exact rank. Equals the rank of the algebra at generic X.
template <class Model>
int centralizer_dimension(const Model& model, const typename Model::Element& x)
{
    return model.dim() - rank(adjoint_matrix(model, x));
}

/// Killing form B(X,Y) = tr(ad_X ad_Y) via the cached basis Gram matrix.
template <class Model>
Rat killing_form(const Model& model, const typename Model::Element& x,
    const typename Model::Element& y)
{
    const QMat& g = model.killing_gram();
    QVec cx = model.coords(x), cy = model.coords(y);
    Rat s = 0;
    for (int i = 0; i < g.rows(); ++i) {
        if (cx[i] == 0)
            continue;
        for (int j = 0; j < g.cols(); ++j)
            if (cy[j] != 0)
                s += cx[i] * g(i, j) * cy[j];
    }
    return s;
}

/// Basis of { Y in `within` : B(Y, s) = 0 for all s in S }. Throws if the
/// Killing form restricted to `within` is degenerate.
template <class Model>
Subalgebra<Model> orthogonal_complement(const Model& model, const Subalgebra<Model>& s,
    const Subalgebra<Model>& within)
{
    const QMat& g = model.killing_gram();
    std::vector<QVec> wcols, scols;
    for (const auto& e : within.basis)
        wcols.push_back(model.coords(e));
    for (const auto& e : s.basis)
        scols.push_back(model.coords(e));
    QMat w = columns(wcols);

    int nw = static_cast<int>(wcols.size());
    QMat wgw(nw, nw);
    {
        QMat gw = g * w;
        QMat wt = w.transpose();
        wgw = wt * gw;
    }
    if (rank(wgw) != nw)
        throw std::domain_error(
            "orthogonal_complement: Killing form degenerate on `within`");

    // constraints: (S^T g W) c = 0 on coefficient vectors c of `within`
    int ns = static_cast<int>(scols.size());
    QMat constraints(ns, nw);
    for (int a = 0; a < ns; ++a) {
        QVec gs = g * scols[a];
        for (int b = 0; b < nw; ++b)
            constraints(a, b) = dot(gs, wcols[b]);
    }
    QMat coeffs = ns == 0 ? QMat::identity(nw) : null_space(constraints);

    std::vector<typename Model::Element> out;
    for (int k = 0; k < coeffs.cols(); ++k) {
        QVec v(model.dim());
        for (int b = 0; b < nw; ++b)
            if (coeffs(b, k) != 0)
                for (int r = 0; r < model.dim(); ++r)
                    v[r] += coeffs(b, k) * wcols[b][r];
        out.push_back(model.from_coords(v));
    }
    return Subalgebra<Model>(model, std::move(out));
}

/// Exact span dimension of a list of elements.
template <class Model>
int span_dimension(const Model& model, const std::vector<typename Model::Element>& elems)
{
    std::vector<QVec> cols;
    for (const auto& e : elems)
        cols.push_back(model.coords(e));
    return rank(columns(cols));
}

} // namespace rank1sep
