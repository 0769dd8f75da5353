#pragma once

#include "fracture/core/integer.hpp"

#include <cassert>
#include <cstddef>
#include <ostream>
#include <vector>

namespace fracture {

// Dense row-major matrix. Zero-sized dimensions are allowed and common:
// a differential out of a rank-0 module is an n x 0 matrix.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        assert(a_.size() == rows * cols);
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<T>& entries() const { return a_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix m(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

    Matrix column(std::size_t j) const {
        Matrix m(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, j);
        return m;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.a_) x = -x;
        return c;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.a_) x *= s;
        return c;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using QMatrix = Matrix<Rat>;

template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.rows() == b.rows());
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.cols() == b.cols());
    Matrix<T> m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

// Block-diagonal sum.
template <class T>
Matrix<T> dsum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

// Copy b into m with its top-left corner at (r, c).
template <class T>
void place(Matrix<T>& m, std::size_t r, std::size_t c, const Matrix<T>& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(r + i, c + j) = b(i, j);
}

QMatrix to_rational(const IntMatrix& a);
bool is_integral(const QMatrix& a);
IntMatrix to_integer(const QMatrix& a); // requires is_integral
// Least common multiple of all denominators (1 for the empty matrix).
Int common_denominator(const QMatrix& a);

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
}

} // namespace fracture
