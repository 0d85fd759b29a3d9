// Dense and sparse exact linear algebra over the rationals.
// Sizes here are small (Cartan matrices, per-weight Gram blocks), so
// plain Gaussian elimination is all we need.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thaforge/rational.hpp"

namespace thaforge {

class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    static QMatrix identity(size_t n)
    {
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = Rational(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational &operator()(size_t i, size_t j) { return a_[i][j]; }
    const Rational &operator()(size_t i, size_t j) const { return a_[i][j]; }

    friend bool operator==(const QMatrix &x, const QMatrix &y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    QMatrix multiply(const QMatrix &b) const
    {
        if (cols_ != b.rows_)
            throw std::invalid_argument("QMatrix: shape mismatch");
        QMatrix r(rows_, b.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (a_[i][k].is_zero())
                    continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a_[i][k] * b(k, j);
            }
        return r;
    }

    Rational determinant() const
    {
        if (rows_ != cols_)
            throw std::invalid_argument("QMatrix: determinant of non-square");
        QMatrix m = *this;
        Rational det(1);
        for (size_t col = 0, row = 0; col < cols_; ++col, ++row) {
            size_t piv = row;
            while (piv < rows_ && m(piv, col).is_zero())
                ++piv;
            if (piv == rows_)
                return Rational(0);
            if (piv != row) {
                std::swap(m.a_[piv], m.a_[row]);
                det = -det;
            }
            det *= m(row, col);
            for (size_t i = row + 1; i < rows_; ++i) {
                if (m(i, col).is_zero())
                    continue;
                Rational f = m(i, col) / m(row, col);
                for (size_t j = col; j < cols_; ++j)
                    m(i, j) -= f * m(row, j);
            }
        }
        return det;
    }

    std::optional<QMatrix> inverse() const
    {
        if (rows_ != cols_)
            throw std::invalid_argument("QMatrix: inverse of non-square");
        size_t n = rows_;
        QMatrix m = *this;
        QMatrix inv = identity(n);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && m(piv, col).is_zero())
                ++piv;
            if (piv == n)
                return std::nullopt;
            std::swap(m.a_[piv], m.a_[col]);
            std::swap(inv.a_[piv], inv.a_[col]);
            Rational d = m(col, col);
            for (size_t j = 0; j < n; ++j) {
                m(col, j) /= d;
                inv(col, j) /= d;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == col || m(i, col).is_zero())
                    continue;
                Rational f = m(i, col);
                for (size_t j = 0; j < n; ++j) {
                    m(i, j) -= f * m(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    // Solves A x = b for square nonsingular A.
    std::vector<Rational> solve(const std::vector<Rational> &b) const
    {
        if (rows_ != cols_ || b.size() != rows_)
            throw std::invalid_argument("QMatrix: solve shape mismatch");
        size_t n = rows_;
        QMatrix m = *this;
        std::vector<Rational> x = b;
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && m(piv, col).is_zero())
                ++piv;
            if (piv == n)
                throw std::domain_error("QMatrix: singular system");
            std::swap(m.a_[piv], m.a_[col]);
            std::swap(x[piv], x[col]);
            Rational d = m(col, col);
            for (size_t j = col; j < n; ++j)
                m(col, j) /= d;
            x[col] /= d;
            for (size_t i = 0; i < n; ++i) {
                if (i == col || m(i, col).is_zero())
                    continue;
                Rational f = m(i, col);
                for (size_t j = col; j < n; ++j)
                    m(i, j) -= f * m(col, j);
                x[i] -= f * x[col];
            }
        }
        return x;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> a_;
};

// Sparse rational vector keyed by an ordered index type.
template <typename Key> class SparseVec {
  public:
    using Map = std::map<Key, Rational>;

    SparseVec() = default;

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map &terms() const { return terms_; }

    Rational coeff(const Key &k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Key &k, const Rational &c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add_scaled(const SparseVec &v, const Rational &c)
    {
        if (c.is_zero())
            return;
        for (const auto &[k, x] : v.terms_)
            add(k, x * c);
    }

    SparseVec &operator+=(const SparseVec &v)
    {
        add_scaled(v, Rational(1));
        return *this;
    }
    SparseVec &operator-=(const SparseVec &v)
    {
        add_scaled(v, Rational(-1));
        return *this;
    }
    friend SparseVec operator+(SparseVec a, const SparseVec &b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec &b) { return a -= b; }

    SparseVec scaled(const Rational &c) const
    {
        SparseVec r;
        if (!c.is_zero())
            for (const auto &[k, x] : terms_)
                r.terms_.emplace(k, x * c);
        return r;
    }

    friend bool operator==(const SparseVec &a, const SparseVec &b)
    {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparseVec &a, const SparseVec &b)
    {
        return !(a == b);
    }

  private:
    Map terms_;
};

// Incremental row echelon over sparse vectors; used for radical quotients,
// span membership and dimension counts.
template <typename Key> class SparseEchelon {
  public:
    // Reduces v against the current rows; returns the remainder.
    SparseVec<Key> reduce(SparseVec<Key> v) const
    {
        for (const auto &row : rows_) {
            if (v.is_zero())
                break;
            const Key &lead = row.terms().begin()->first;
            Rational c = v.coeff(lead);
            if (!c.is_zero())
                v.add_scaled(row, -(c / row.terms().begin()->second));
        }
        return v;
    }

    // Returns true (and absorbs v) if v was independent of the span.
    bool insert(const SparseVec<Key> &v)
    {
        SparseVec<Key> r = reduce(v);
        if (r.is_zero())
            return false;
        rows_.push_back(std::move(r));
        // keep rows sorted by leading key so reduce() sweeps once
        for (size_t i = rows_.size(); i-- > 1;) {
            if (rows_[i].terms().begin()->first < rows_[i - 1].terms().begin()->first)
                std::swap(rows_[i], rows_[i - 1]);
            else
                break;
        }
        return true;
    }

    bool contains(const SparseVec<Key> &v) const { return reduce(v).is_zero(); }
    size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec<Key>> &rows() const { return rows_; }

  private:
    std::vector<SparseVec<Key>> rows_;
};

} // namespace thaforge
