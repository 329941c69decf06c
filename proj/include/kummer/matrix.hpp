#ifndef KUMMER_MATRIX_HPP
#define KUMMER_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace kummer {

template <FieldElement K>
using Vec = std::vector<K>;

template <FieldElement K>
K dot(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "dot product of vectors of different length");
    K s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <FieldElement K>
bool is_zero_vec(const Vec<K>& v) {
    for (const auto& a : v)
        if (!a.is_zero()) return false;
    return true;
}

template <FieldElement K>
Vec<K> operator-(Vec<K> a) {
    for (auto& x : a) x = -x;
    return a;
}
template <FieldElement K>
Vec<K> operator+(Vec<K> a, const Vec<K>& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector sum of different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
template <FieldElement K>
Vec<K> operator*(const K& s, Vec<K> a) {
    for (auto& x : a) x *= s;
    return a;
}

/// Dense row-major matrix with exact Gaussian elimination.
template <FieldElement K>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != c_) fail(Errc::DimensionMismatch, "ragged matrix literal");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }
    static Matrix from_rows(const std::vector<Vec<K>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.c_) fail(Errc::DimensionMismatch, "ragged rows");
            for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<K>>& cols) { return from_rows(cols).transpose(); }
    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix diagonal(const Vec<K>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec<K> row(std::size_t i) const { return Vec<K>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }
    Vec<K> col(std::size_t j) const {
        Vec<K> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const { return is_zero_vec(a_); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) fail(Errc::DimensionMismatch, "matrix product shape");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const K& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Vec<K> operator*(const Matrix& a, const Vec<K>& v) {
        if (a.c_ != v.size()) fail(Errc::DimensionMismatch, "matrix-vector shape");
        Vec<K> r(a.r_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t j = 0; j < a.c_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) fail(Errc::DimensionMismatch, "matrix sum shape");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) fail(Errc::DimensionMismatch, "matrix difference shape");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const K& s, Matrix a) {
        for (auto& x : a.a_) x *= s;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

    /// Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t j = 0; j < c_ && r < r_; ++j) {
            std::size_t p = r;
            while (p < r_ && (*this)(p, j).is_zero()) ++p;
            if (p == r_) continue;
            if (p != r)
                for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(p, k), (*this)(r, k));
            const K inv = (*this)(r, j).inverse();
            for (std::size_t k = j; k < c_; ++k) (*this)(r, k) *= inv;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == r || (*this)(i, j).is_zero()) continue;
                const K f = (*this)(i, j);
                for (std::size_t k = j; k < c_; ++k) (*this)(i, k) -= f * (*this)(r, k);
            }
            pivots.push_back(j);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref_in_place().size();
    }

    /// Basis of the right kernel {v : M v = 0}; exact.
    std::vector<Vec<K>> kernel() const {
        Matrix m = *this;
        const auto pivots = m.rref_in_place();
        std::vector<bool> is_pivot(c_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<Vec<K>> basis;
        for (std::size_t free = 0; free < c_; ++free) {
            if (is_pivot[free]) continue;
            Vec<K> v(c_);
            // the one of this field, taken from a pivot entry or built from scratch
            K one = one_like();
            v[free] = one;
            for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Matrix inverse() const {
        if (r_ != c_) fail(Errc::DimensionMismatch, "inverse of a non-square matrix");
        Matrix aug(r_, 2 * c_);
        const K one = one_like();
        for (std::size_t i = 0; i < r_; ++i) {
            for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_ + i) = one;
        }
        const auto pivots = aug.rref_in_place();
        if (pivots.size() < r_ || pivots.back() >= c_) fail(Errc::DivisionByZero, "singular matrix");
        Matrix inv(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
        return inv;
    }

    K determinant() const {
        if (r_ != c_) fail(Errc::DimensionMismatch, "determinant of a non-square matrix");
        Matrix m = *this;
        K det = one_like();
        for (std::size_t j = 0; j < c_; ++j) {
            std::size_t p = j;
            while (p < r_ && m(p, j).is_zero()) ++p;
            if (p == r_) return K{};
            if (p != j) {
                for (std::size_t k = 0; k < c_; ++k) std::swap(m(p, k), m(j, k));
                det = -det;
            }
            det *= m(j, j);
            const K inv = m(j, j).inverse();
            for (std::size_t i = j + 1; i < r_; ++i) {
                if (m(i, j).is_zero()) continue;
                const K f = m(i, j) * inv;
                for (std::size_t k = j; k < c_; ++k) m(i, k) -= f * m(j, k);
            }
        }
        return det;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < r_; ++i) {
            s += i ? "; " : "";
            for (std::size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
        }
        return s + "]";
    }

   private:
    K one_like() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return x / x;
        // all-zero matrix: only reachable with a field that has a default one
        if constexpr (std::is_constructible_v<K, long>) return K(1L);
        fail(Errc::InvalidArgument, "cannot infer the field of an all-zero matrix");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

}  // namespace kummer

#endif
