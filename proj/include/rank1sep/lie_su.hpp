#pragma once

#include "rank1sep/linalg_exact.hpp"
#include "rank1sep/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace rank1sep {

/// Gaussian rational a + b i.
struct GRat {
    Rat re, im;

    GRat() = default;
    GRat(Rat r) : re(std::move(r)) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GRat i() { return {Rat(0), Rat(1)}; }

    GRat operator+(const GRat& o) const { return {re + o.re, im + o.im}; }
    GRat operator-(const GRat& o) const { return {re - o.re, im - o.im}; }
    GRat operator-() const { return {-re, -im}; }
    GRat operator*(const GRat& o) const
    {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline GRat conj(const GRat& z) { return {z.re, -z.im}; }

/// Dense complex matrix over Gaussian rationals.
class CQMat {
public:
    CQMat() = default;
    CQMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GRat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const GRat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    CQMat operator+(const CQMat& o) const
    {
        CQMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    CQMat operator-(const CQMat& o) const
    {
        CQMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    CQMat operator*(const CQMat& o) const
    {
        CQMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const GRat& aik = (*this)(i, k);
                if (aik.is_zero())
                    continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = r(i, j) + aik * o(k, j);
            }
        return r;
    }
    bool operator==(const CQMat& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_zero() const
    {
        for (const auto& z : a_)
            if (!z.is_zero())
                return false;
        return true;
    }
    CQMat conj_transpose() const
    {
        CQMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = conj((*this)(i, j));
        return r;
    }
    GRat trace() const
    {
        GRat t;
        for (int i = 0; i < rows_; ++i)
            t = t + (*this)(i, i);
        return t;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<GRat> a_;
};

/// The matrix Lie algebra su(p,q): traceless X with X^dag J + J X = 0,
/// J = diag(1,...,1,-1,...,-1) of signature (p,q). su(n+1) is su(n+1, 0).
class SuModel {
public:
    using Element = CQMat;

    SuModel(int p, int q) : p_(p), q_(q), n_(p + q)
    {
        if (n_ < 2)
            throw std::invalid_argument("SuModel: need p + q >= 2");
        build_basis();
    }

    int p() const { return p_; }
    int q() const { return q_; }
    int size() const { return n_; }
    int dim() const { return n_ * n_ - 1; }

    Rat j_sign(int i) const { return i < p_ ? Rat(1) : Rat(-1); }

    const CQMat& basis(int k) const { return basis_[k]; }

    bool contains(const CQMat& x) const
    {
        if (x.rows() != n_ || x.cols() != n_ || !x.trace().is_zero())
            return false;
        // X^dag J + J X = 0  <=>  X(i,j) = -sigma_ij conj(X(j,i))
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Rat sigma = j_sign(i) * j_sign(j);
                GRat want = -(conj(x(j, i)) * GRat(sigma));
                if (!(x(i, j) == want))
                    return false;
            }
        return true;
    }

    static CQMat lie_bracket(const CQMat& a, const CQMat& b) { return a * b - b * a; }

    QVec coords(const CQMat& x) const
    {
        if (!contains(x))
            throw std::invalid_argument("SuModel::coords: element not in su(p,q)");
        QVec c(dim());
        int k = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                c[k++] = x(i, j).re;
                c[k++] = x(i, j).im;
            }
        // diagonal entries are i d_i with sum d_i = 0; coefficients of
        // the basis D_k = i(E_kk - E_{k+1,k+1}) are the partial sums.
        Rat partial = 0;
        for (int d = 0; d < n_ - 1; ++d) {
            partial += x(d, d).im;
            c[k++] = partial;
        }
        return c;
    }

    CQMat from_coords(const QVec& c) const
    {
        CQMat x(n_, n_);
        int k = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                GRat z(c[k], c[k + 1]);
                k += 2;
                x(i, j) = z;
                x(j, i) = -(conj(z) * GRat(j_sign(i) * j_sign(j)));
            }
        Rat prev = 0;
        for (int d = 0; d < n_ - 1; ++d) {
            x(d, d) = GRat(Rat(0), c[k] - prev);
            prev = c[k];
            ++k;
        }
        x(n_ - 1, n_ - 1) = GRat(Rat(0), -prev);
        return x;
    }

    /// Killing form Gram matrix on the basis, from structure constants.
    const QMat& killing_gram() const
    {
        std::call_once(gram_once_, [this] {
            int d = dim();
            std::vector<QMat> ad(d, QMat(d, d));
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k) {
                    QVec col = coords(lie_bracket(basis_[i], basis_[k]));
                    for (int r = 0; r < d; ++r)
                        ad[i](r, k) = col[r];
                }
            QMat g(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j) {
                    Rat tr = 0;
                    for (int k = 0; k < d; ++k)
                        for (int l = 0; l < d; ++l)
                            if (ad[i](k, l) != 0)
                                tr += ad[i](k, l) * ad[j](l, k);
                    g(i, j) = tr;
                    g(j, i) = tr;
                }
            gram_ = std::move(g);
        });
        return gram_;
    }

private:
    void build_basis()
    {
        // order matches coords(): per pair (i<j) the real and the imaginary
        // off-diagonal generators, then the diagonal ones.
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                Rat sigma = j_sign(i) * j_sign(j);
                CQMat x1(n_, n_);
                x1(i, j) = GRat(Rat(1));
                x1(j, i) = GRat(-sigma);
                basis_.push_back(std::move(x1));
                CQMat x2(n_, n_);
                x2(i, j) = GRat::i();
                x2(j, i) = GRat(Rat(0), sigma);
                basis_.push_back(std::move(x2));
            }
        for (int d = 0; d < n_ - 1; ++d) {
            CQMat x(n_, n_);
            x(d, d) = GRat::i();
            x(d + 1, d + 1) = -GRat::i();
            basis_.push_back(std::move(x));
        }
    }

    int p_, q_, n_;
    std::vector<CQMat> basis_;
    mutable std::once_flag gram_once_;
    mutable QMat gram_;
};

} // namespace rank1sep
