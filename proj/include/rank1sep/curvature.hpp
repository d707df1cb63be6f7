#pragma once

#include "rank1sep/linalg_exact.hpp"
#include "rank1sep/octonion.hpp"

#include <stdexcept>
#include <vector>

namespace rank1sep {

enum class Family { real, complex, quaternionic, octonionic };

/// Rank-1 symmetric space at a base point: family, compact (+1) or
/// noncompact (-1) sign, and real dimension of the tangent space.
struct SpaceModel {
    Family family;
    int sign; // +1 compact, -1 noncompact
    int real_dimension;

    SpaceModel(Family f, int s, int dim) : family(f), sign(s), real_dimension(dim)
    {
        if (s != 1 && s != -1)
            throw std::invalid_argument("SpaceModel: sign must be +1 or -1");
        bool ok = false;
        switch (f) {
        case Family::real: ok = dim >= 2; break;
        case Family::complex: ok = dim >= 4 && dim % 2 == 0; break;
        case Family::quaternionic: ok = dim >= 8 && dim % 4 == 0; break;
        case Family::octonionic: ok = dim == 16; break;
        }
        if (!ok)
            throw std::invalid_argument("SpaceModel: dimension incompatible with family");
    }
};

using TangentVector = QVec;

namespace detail {

inline void check_dim(const SpaceModel& m, const TangentVector& v)
{
    if (static_cast<int>(v.size()) != m.real_dimension)
        throw std::invalid_argument("curvature: tangent vector dimension mismatch");
}

/// Complex structure J (a = 0) or quaternionic structures J_a, a in {0,1,2},
/// acting blockwise as left multiplication by i, j, k.
inline TangentVector apply_j(const SpaceModel& m, int a, const TangentVector& v)
{
    TangentVector r(v.size());
    if (m.family == Family::complex) {
        for (size_t k = 0; k + 1 < v.size(); k += 2) {
            r[k] = -v[k + 1];
            r[k + 1] = v[k];
        }
    } else { // quaternionic blocks of 4, via the octonion table's quaternion part
        for (size_t k = 0; k + 3 < v.size(); k += 4) {
            Octonion q;
            for (int t = 0; t < 4; ++t)
                q[t] = v[k + t];
            Octonion jq = Octonion::basis(a + 1) * q;
            for (int t = 0; t < 4; ++t)
                r[k + t] = jq[t];
        }
    }
    return r;
}

inline std::pair<Octonion, Octonion> split_oct(const TangentVector& v)
{
    Octonion a, b;
    for (int i = 0; i < 8; ++i) {
        a[i] = v[i];
        b[i] = v[8 + i];
    }
    return {a, b};
}

inline TangentVector join_oct(const Octonion& a, const Octonion& b)
{
    TangentVector v(16);
    for (int i = 0; i < 8; ++i) {
        v[i] = a[i];
        v[8 + i] = b[i];
    }
    return v;
}

} // namespace detail

/// Curvature operator R(X,Y)Z at the base point.
///
/// Real family: R(X,Y)Z = <Y,Z>X - <X,Z>Y (constant curvature 1).
/// Complex/quaternionic: space-form formulas with holomorphic (resp.
/// quaternionic) sectional curvature 4,
///   R(X,Y)Z = <Y,Z>X - <X,Z>Y
///             + sum_a ( <J_aY,Z>J_aX - <J_aX,Z>J_aY + 2<J_aY,X>J_aZ ).
/// Octonionic: the OP^2 tensor of sectional curvature between 1 and 4,
/// on X=(x1,x2), Y=(y1,y2), Z=(z1,z2) in O^2:
///   ( 4<x1,z1>y1 - 4<y1,z1>x1 - (z1 y2)x2* + (z1 x2)y2* - (x1 y2 - y1 x2)z2*,
///     4<x2,z2>y2 - 4<y2,z2>x2 - x1*(y1 z2) + y1*(x1 z2) + z1*(x1 y2 - y1 x2) ).
/// Note that with this formula the octonionic tensor carries the opposite
/// overall sign convention: <R(X,Y)Y,X> is -4 on a line O x {0}; sectional()
/// accounts for this per family. Noncompact spaces flip the overall sign.
inline TangentVector curvature(const SpaceModel& m, const TangentVector& X,
    const TangentVector& Y, const TangentVector& Z)
{
    detail::check_dim(m, X);
    detail::check_dim(m, Y);
    detail::check_dim(m, Z);
    const Rat s(m.sign);

    if (m.family == Family::octonionic) {
        auto [x1, x2] = detail::split_oct(X);
        auto [y1, y2] = detail::split_oct(Y);
        auto [z1, z2] = detail::split_oct(Z);
        Octonion d = x1 * y2 - y1 * x2;
        Octonion first = Rat(4) * oct_inner(x1, z1) * y1 - Rat(4) * oct_inner(y1, z1) * x1
            - (z1 * y2) * conj(x2) + (z1 * x2) * conj(y2) - d * conj(z2);
        Octonion second = Rat(4) * oct_inner(x2, z2) * y2 - Rat(4) * oct_inner(y2, z2) * x2
            - conj(x1) * (y1 * z2) + conj(y1) * (x1 * z2) + conj(z1) * d;
        TangentVector out = detail::join_oct(first, second);
        for (auto& c : out)
            c *= s;
        return out;
    }

    TangentVector r = dot(Y, Z) * X - dot(X, Z) * Y;
    int nj = m.family == Family::real ? 0 : (m.family == Family::complex ? 1 : 3);
    for (int a = 0; a < nj; ++a) {
        TangentVector jx = detail::apply_j(m, a, X);
        TangentVector jy = detail::apply_j(m, a, Y);
        TangentVector jz = detail::apply_j(m, a, Z);
        r = r + dot(jy, Z) * jx - dot(jx, Z) * jy + (Rat(2) * dot(jy, X)) * jz;
    }
    for (auto& c : r)
        c *= s;
    return r;
}

/// <R(X,Y)Z, W>.
inline Rat curvature4(const SpaceModel& m, const TangentVector& X, const TangentVector& Y,
    const TangentVector& Z, const TangentVector& W)
{
    detail::check_dim(m, W);
    return dot(curvature(m, X, Y, Z), W);
}

/// Sectional curvature of span{X, Y}. Per-family sign convention matching
/// the curvature operators above, so that values land in [1,4] for compact
/// models and [-4,-1] for noncompact ones.
inline Rat sectional(const SpaceModel& m, const TangentVector& X, const TangentVector& Y)
{
    Rat gram = dot(X, X) * dot(Y, Y) - dot(X, Y) * dot(X, Y);
    if (gram == 0)
        throw std::invalid_argument("sectional: X, Y do not span a 2-plane");
    Rat num = m.family == Family::octonionic ? curvature4(m, X, Y, X, Y)
                                             : curvature4(m, X, Y, Y, X);
    return num / gram;
}

/// Subspace of the tangent space at the base point.
struct TangentSubspace {
    SpaceModel model;
    std::vector<TangentVector> basis;

    TangentSubspace(SpaceModel m, std::vector<TangentVector> b)
        : model(std::move(m)), basis(std::move(b))
    {
        for (const auto& v : basis)
            detail::check_dim(model, v);
        if (rank(columns(basis)) != static_cast<int>(basis.size()))
            throw std::invalid_argument("TangentSubspace: basis is linearly dependent");
    }
};

struct LieTripleReport {
    bool is_lie_triple = true;
    int i = -1, j = -1, k = -1;   // violating basis triple when negative
    TangentVector off_component;  // component of R(e_i,e_j)e_k off the subspace
};

/// Euclidean-orthogonal component of v off the column span of basis.
inline QVec off_span_component(const std::vector<QVec>& basis, const QVec& v)
{
    if (basis.empty())
        return v;
    int nb = static_cast<int>(basis.size());
    QMat gram(nb, nb);
    QVec rhs(nb);
    for (int a = 0; a < nb; ++a) {
        for (int b = 0; b < nb; ++b)
            gram(a, b) = dot(basis[a], basis[b]);
        rhs[a] = dot(basis[a], v);
    }
    QVec coef = solve(gram, rhs);
    QVec r = v;
    for (int a = 0; a < nb; ++a)
        r = r - coef[a] * basis[a];
    return r;
}

/// True iff R(S,S)S is contained in S, checked over all basis triples;
/// a violating triple and its off-S component serve as the witness.
inline LieTripleReport is_lie_triple(const TangentSubspace& s)
{
    LieTripleReport rep;
    int n = static_cast<int>(s.basis.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                TangentVector r = curvature(s.model, s.basis[i], s.basis[j], s.basis[k]);
                QVec off = off_span_component(s.basis, r);
                if (!is_zero(off)) {
                    rep.is_lie_triple = false;
                    rep.i = i;
                    rep.j = j;
                    rep.k = k;
                    rep.off_component = std::move(off);
                    return rep;
                }
            }
    return rep;
}

struct QuadViolation {
    int i, j, k, l;
    Rat value; // R(e_i, e_j, e_k, e_l)
};

/// Components R_{ijkl} with pairwise distinct indices that are nonzero
/// (in absolute value above `tol`); a diagonalizing coordinate frame must
/// make all of them vanish. Quadruples are reported once per equivalence
/// class of the curvature symmetries: i < j, k < l, (i,j) <= (k,l).
inline std::vector<QuadViolation> diagonal_obstruction(const SpaceModel& m,
    const std::vector<TangentVector>& frame, const Rat& tol = Rat(0))
{
    int n = m.real_dimension;
    if (static_cast<int>(frame.size()) != n)
        throw std::invalid_argument("diagonal_obstruction: frame must span the tangent space");
    for (int a = 0; a < n; ++a) {
        detail::check_dim(m, frame[a]);
        for (int b = a; b < n; ++b)
            if (dot(frame[a], frame[b]) != Rat(a == b ? 1 : 0))
                throw std::invalid_argument("diagonal_obstruction: frame is not orthonormal");
    }

    std::vector<QuadViolation> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = i; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (std::make_pair(k, l) < std::make_pair(i, j))
                        continue;
                    if (k == i || k == j || l == i || l == j)
                        continue;
                    Rat v = curvature4(m, frame[i], frame[j], frame[k], frame[l]);
                    if (abs(v) > tol)
                        out.push_back({i, j, k, l, std::move(v)});
                }
    return out;
}

/// Left-hand side of the planarity condition on O P^2: with e_1 = (1,0) and
/// e_2 = (y_1, y_2), y_1 perp 1, the vanishing of R(e_1,e_2,Z,W) for
/// Z = (z_1,z_2), W = (w_1,w_2) perpendicular to e_1, e_2 is equivalent to
///   <y_2 z_2*, w_1> + <2 y_1 z_2 - z_1* y_2, w_2> = 0.
inline Rat octo_residual(const Octonion& y1, const Octonion& y2, const Octonion& z1,
    const Octonion& z2, const Octonion& w1, const Octonion& w2)
{
    if (!imaginary(y1))
        throw std::invalid_argument("octo_residual: y1 must be imaginary");
    return oct_inner(y2 * conj(z2), w1) + oct_inner(Rat(2) * (y1 * z2) - conj(z1) * y2, w2);
}

/// Residual of the closing identity 1/2 za = <zu,a>u - <u,a>zu of the
/// octonionic nonexistence argument; nonzero for some basis a certifies the
/// contradiction.
inline Octonion octo_final_identity_residual(const Octonion& u, const Octonion& z,
    const Octonion& a)
{
    if (!imaginary(z) || z.is_zero())
        throw std::invalid_argument("octo_final_identity_residual: z must be imaginary nonzero");
    Octonion zu = z * u;
    return Rat(1, 2) * (z * a) - oct_inner(zu, a) * u + oct_inner(u, a) * zu;
}

} // namespace rank1sep
