#pragma once

#include "rank1sep/rational.hpp"

#include <cassert>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace rank1sep {

using QVec = std::vector<Rat>;

/// Dense matrix over exact rationals. Row-major, dynamically sized.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMat identity(int n)
    {
        QMat m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    QMat operator+(const QMat& o) const
    {
        QMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    QMat operator-(const QMat& o) const
    {
        QMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    QMat operator-() const
    {
        QMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = -a_[k];
        return r;
    }
    QMat operator*(const QMat& o) const
    {
        assert(cols_ == o.rows_);
        QMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& aik = (*this)(i, k);
                if (aik == 0)
                    continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) += aik * o(k, j);
            }
        return r;
    }
    QMat operator*(const Rat& s) const
    {
        QMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] * s;
        return r;
    }
    // constrained so Eigen scalar expressions never try a Rat conversion
    template <class S, std::enable_if_t<std::is_same_v<S, Rat>, int> = 0>
    friend QMat operator*(const S& s, const QMat& m) { return m * s; }

    QVec operator*(const QVec& v) const
    {
        assert(static_cast<int>(v.size()) == cols_);
        QVec r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0)
                    r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    QMat transpose() const
    {
        QMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    bool is_skew() const
    {
        if (rows_ != cols_)
            return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j <= i; ++j)
                if ((*this)(i, j) != -(*this)(j, i))
                    return false;
        return true;
    }

    Rat trace() const
    {
        Rat t = 0;
        for (int i = 0; i < rows_; ++i)
            t += (*this)(i, i);
        return t;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

inline Rat dot(const QVec& a, const QVec& b)
{
    assert(a.size() == b.size());
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline QVec operator+(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}
inline QVec operator-(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}
template <class S, std::enable_if_t<std::is_same_v<S, Rat>, int> = 0>
QVec operator*(const S& s, const QVec& a)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}
inline bool is_zero(const QVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

/// Row echelon form computed in place; returns the rank and records the
/// pivot column of each nonzero row.
inline int row_echelon(QMat& m, std::vector<int>* pivot_cols = nullptr)
{
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(rank, j));
        Rat inv = m(rank, col);
        for (int j = col; j < m.cols(); ++j)
            m(rank, j) /= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, col) == 0)
                continue;
            Rat f = m(r, col);
            for (int j = col; j < m.cols(); ++j)
                m(r, j) -= f * m(rank, j);
        }
        if (pivot_cols)
            pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

inline int rank(QMat m) { return row_echelon(m); }

/// Basis of the right null space, returned as columns of the result.
inline QMat null_space(QMat m)
{
    std::vector<int> pivots;
    int r = row_echelon(m, &pivots);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots)
        is_pivot[c] = true;
    QMat basis(n, n - r);
    int k = 0;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        basis(free, k) = 1;
        for (int row = 0; row < r; ++row) {
            // pivot row `row` has pivot 1 at pivots[row]
            basis(pivots[row], k) = -m(row, free);
        }
        ++k;
    }
    return basis;
}

/// Solve m x = b exactly; throws if the system is singular/inconsistent.
inline QVec solve(QMat m, QVec b)
{
    assert(m.rows() == static_cast<int>(b.size()));
    int n = m.cols();
    QMat aug(m.rows(), n + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    std::vector<int> pivots;
    int r = row_echelon(aug, &pivots);
    if (r < n || (!pivots.empty() && pivots.back() == n))
        throw std::domain_error("solve: singular or inconsistent system");
    QVec x(n);
    for (int i = 0; i < n; ++i)
        x[pivots[i]] = aug(i, n);
    return x;
}

/// Columns of `vectors` stacked as a matrix.
inline QMat columns(const std::vector<QVec>& vectors)
{
    if (vectors.empty())
        return QMat(0, 0);
    QMat m(static_cast<int>(vectors[0].size()), static_cast<int>(vectors.size()));
    for (size_t j = 0; j < vectors.size(); ++j)
        for (size_t i = 0; i < vectors[j].size(); ++i)
            m(static_cast<int>(i), static_cast<int>(j)) = vectors[j][i];
    return m;
}

/// True iff v lies in the column span of basis.
inline bool in_span(const QMat& basis, const QVec& v)
{
    QMat aug(basis.rows(), basis.cols() + 1);
    for (int i = 0; i < basis.rows(); ++i) {
        for (int j = 0; j < basis.cols(); ++j)
            aug(i, j) = basis(i, j);
        aug(i, basis.cols()) = v[i];
    }
    QMat b = basis;
    return rank(std::move(b)) == rank(std::move(aug));
}

} // namespace rank1sep
