#pragma once

#include "rank1sep/linalg_exact.hpp"
#include "rank1sep/rational.hpp"

#include <array>
#include <stdexcept>
#include <type_traits>

namespace rank1sep {

/// Structure constants of the octonion basis product e_i e_j = sign * e_idx,
/// for the Cayley-Dickson doubling of the quaternions with basis ordered as
/// (1, i, j, k, l, il, jl, kl).
struct OctTable {
    std::array<std::array<int, 8>, 8> idx;
    std::array<std::array<int, 8>, 8> sign;

    static const OctTable& get()
    {
        static const OctTable table = build();
        return table;
    }

private:
    static OctTable build()
    {
        // quaternion table on indices 0..3 = (1, i, j, k)
        int qidx[4][4], qsgn[4][4];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == 0) {
                    qidx[i][j] = j;
                    qsgn[i][j] = 1;
                } else if (j == 0) {
                    qidx[i][j] = i;
                    qsgn[i][j] = 1;
                } else if (i == j) {
                    qidx[i][j] = 0;
                    qsgn[i][j] = -1;
                } else {
                    // i*j=k, j*k=i, k*i=j and anticommutativity
                    int k = 6 - i - j;
                    qidx[i][j] = k;
                    qsgn[i][j] = (j == i % 3 + 1) ? 1 : -1;
                }
            }
        auto qconj_sign = [](int a) { return a == 0 ? 1 : -1; };

        // Cayley-Dickson product (a,b)(c,d) = (ac - d* b, da + b c*)
        OctTable t{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                int p = i & 3, hi = i >> 2;
                int q = j & 3, hj = j >> 2;
                int out, s;
                if (hi == 0 && hj == 0) {
                    out = qidx[p][q];
                    s = qsgn[p][q];
                } else if (hi == 0 && hj == 1) {
                    out = qidx[q][p] + 4; // d a
                    s = qsgn[q][p];
                } else if (hi == 1 && hj == 0) {
                    out = qidx[p][q] + 4; // b c*
                    s = qsgn[p][q] * qconj_sign(q);
                } else {
                    out = qidx[q][p]; // -(d* b)
                    s = -qsgn[q][p] * qconj_sign(q);
                }
                t.idx[i][j] = out;
                t.sign[i][j] = s;
            }
        return t;
    }
};

/// Element of the real octonion algebra with exact rational coefficients.
class Octonion {
public:
    Octonion() = default;
    explicit Octonion(std::array<Rat, 8> c) : c_(std::move(c)) {}

    static Octonion basis(int i)
    {
        Octonion o;
        o.c_[i] = 1;
        return o;
    }
    static Octonion real(const Rat& r)
    {
        Octonion o;
        o.c_[0] = r;
        return o;
    }

    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }

    Octonion operator+(const Octonion& o) const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i)
            r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Octonion operator-(const Octonion& o) const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i)
            r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Octonion operator-() const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i)
            r.c_[i] = -c_[i];
        return r;
    }
    Octonion operator*(const Rat& s) const
    {
        Octonion r;
        for (int i = 0; i < 8; ++i)
            r.c_[i] = c_[i] * s;
        return r;
    }
    template <class S, std::enable_if_t<std::is_same_v<S, Rat>, int> = 0>
    friend Octonion operator*(const S& s, const Octonion& o) { return o * s; }

    bool operator==(const Octonion& o) const { return c_ == o.c_; }

    bool is_zero() const
    {
        for (const auto& x : c_)
            if (x != 0)
                return false;
        return true;
    }

    QVec coords() const { return QVec(c_.begin(), c_.end()); }
    static Octonion from_coords(const QVec& v)
    {
        Octonion o;
        for (int i = 0; i < 8; ++i)
            o.c_[i] = v[i];
        return o;
    }

private:
    std::array<Rat, 8> c_{};
};

inline Octonion oct_mul(const Octonion& u, const Octonion& v)
{
    const OctTable& t = OctTable::get();
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        if (u[i] == 0)
            continue;
        for (int j = 0; j < 8; ++j) {
            if (v[j] == 0)
                continue;
            Rat term = u[i] * v[j];
            if (t.sign[i][j] < 0)
                r[t.idx[i][j]] -= term;
            else
                r[t.idx[i][j]] += term;
        }
    }
    return r;
}

inline Octonion operator*(const Octonion& u, const Octonion& v) { return oct_mul(u, v); }

inline Octonion conj(const Octonion& u)
{
    Octonion r = -u;
    r[0] = u[0];
    return r;
}

/// <u,v> = Re(u v*); coincides with the Euclidean dot product of coefficients.
inline Rat oct_inner(const Octonion& u, const Octonion& v)
{
    Rat s = 0;
    for (int i = 0; i < 8; ++i)
        s += u[i] * v[i];
    return s;
}

inline Rat oct_norm2(const Octonion& u) { return oct_inner(u, u); }

inline bool imaginary(const Octonion& u) { return u[0] == 0; }

/// Matrix of x -> c x in the basis e_0..e_7. Skew iff c is imaginary.
inline QMat left_mul_matrix(const Octonion& c)
{
    QMat m(8, 8);
    for (int j = 0; j < 8; ++j) {
        Octonion col = c * Octonion::basis(j);
        for (int i = 0; i < 8; ++i)
            m(i, j) = col[i];
    }
    return m;
}

/// Matrix of x -> x c in the basis e_0..e_7. Skew iff c is imaginary.
inline QMat right_mul_matrix(const Octonion& c)
{
    QMat m(8, 8);
    for (int j = 0; j < 8; ++j) {
        Octonion col = Octonion::basis(j) * c;
        for (int i = 0; i < 8; ++i)
            m(i, j) = col[i];
    }
    return m;
}

/// a ^ b = a b^T - b a^T on coefficient column vectors; always skew.
inline QMat wedge(const Octonion& a, const Octonion& b)
{
    QMat m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            m(i, j) = a[i] * b[j] - b[i] * a[j];
    return m;
}

} // namespace rank1sep
