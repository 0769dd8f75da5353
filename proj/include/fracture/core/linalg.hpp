#pragma once

#include "fracture/core/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fracture {

// Field policies for the elimination routines below.
struct RationalField {
    using value_type = Rat;
    Rat zero() const { return 0; }
    Rat one() const { return 1; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat inv(const Rat& a) const { return 1 / a; }
    Rat neg(const Rat& a) const { return -a; }
    bool is_zero(const Rat& a) const { return a == 0; }
};

struct PrimeField {
    using value_type = std::int64_t;
    std::int64_t q;
    std::int64_t norm(std::int64_t a) const {
        a %= q;
        return a < 0 ? a + q : a;
    }
    std::int64_t zero() const { return 0; }
    std::int64_t one() const { return 1; }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return norm(a + b); }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return norm(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (q < (std::int64_t(1) << 31)) return norm(norm(a) * norm(b));
        return norm(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % q));
    }
    std::int64_t neg(std::int64_t a) const { return norm(-a); }
    std::int64_t inv(std::int64_t a) const {
        std::int64_t t = 0, nt = 1, r = q, nr = norm(a);
        while (nr != 0) {
            std::int64_t k = r / nr;
            t -= k * nt;
            std::swap(t, nt);
            r -= k * nr;
            std::swap(r, nr);
        }
        return norm(t);
    }
    bool is_zero(std::int64_t a) const { return norm(a) == 0; }
};

template <class F>
using FMatrix = Matrix<typename F::value_type>;

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, FMatrix<F>& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && f.is_zero(M(p, c))) ++p;
        if (p == M.rows()) continue;
        M.swap_rows(r, p);
        auto iv = f.inv(M(r, c));
        for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = f.mul(M(r, j), iv);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || f.is_zero(M(i, c))) continue;
            auto k = M(i, c);
            for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = f.sub(M(i, j), f.mul(k, M(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(const F& f, FMatrix<F> M) {
    return rref(f, M).size();
}

// Columns form a basis of the null space.
template <class F>
FMatrix<F> kernel(const F& f, FMatrix<F> M) {
    auto piv = rref(f, M);
    std::vector<bool> is_piv(M.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < M.cols(); ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    FMatrix<F> K(M.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        K(free_cols[k], k) = f.one();
        for (std::size_t i = 0; i < piv.size(); ++i) K(piv[i], k) = f.neg(M(i, free_cols[k]));
    }
    return K;
}

// Some X with A X = B, if one exists.
template <class F>
std::optional<FMatrix<F>> solve(const F& f, const FMatrix<F>& A, const FMatrix<F>& B) {
    FMatrix<F> aug = hcat(A, B);
    auto piv = rref(f, aug);
    const std::size_t n = A.cols();
    FMatrix<F> X(n, B.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] >= n) return std::nullopt;
        for (std::size_t j = 0; j < B.cols(); ++j) X(piv[i], j) = aug(i, n + j);
    }
    return X;
}

template <class F>
std::optional<FMatrix<F>> inverse(const F& f, const FMatrix<F>& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    FMatrix<F> I(A.rows(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) I(i, i) = f.one();
    auto X = solve(f, A, I);
    if (!X) return std::nullopt;
    if (rank(f, A) != A.rows()) return std::nullopt;
    return X;
}

// Convenience wrappers over Q.
std::size_t rank(const QMatrix& M);
QMatrix kernel(const QMatrix& M);
std::optional<QMatrix> solve(const QMatrix& A, const QMatrix& B);
std::optional<QMatrix> inverse(const QMatrix& A);
// Columns: a basis of the column space, chosen among the columns of M.
QMatrix column_basis(const QMatrix& M);

// Kernel over Q in reduced form, computed modulo word-size primes, lifted by
// CRT and rational reconstruction, and accepted only once M * K = 0 holds
// exactly. Falls back to exact elimination if no lift verifies.
QMatrix kernel_multimodular(const QMatrix& M);

// Kernel over F_q in reduced form; a word-arithmetic path for q < 2^31.
FMatrix<PrimeField> kernel_mod(const PrimeField& f, const FMatrix<PrimeField>& M);

} // namespace fracture
