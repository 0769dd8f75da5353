#include "fracture/core/linalg.hpp"

namespace fracture {

namespace {

// Primes below 2^31, so that products of residues fit in 64 bits.
constexpr std::uint64_t kPrimes[] = {
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497,
    2147483489, 2147483477, 2147483423, 2147483399, 2147483353, 2147483323, 2147483269, 2147483249,
    2147483237, 2147483179, 2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(q), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
        std::int64_t k = r / nr;
        t -= k * nt;
        std::swap(t, nt);
        r -= k * nr;
        std::swap(r, nr);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(q) : t);
}

// Kernel of a dense residue matrix in reduced form, plus the pivot columns.
std::vector<std::size_t> kernel_mod(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t q,
                                    std::vector<std::uint64_t>& ker, std::size_t& ker_cols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        std::uint64_t* pr = &a[r * cols];
        std::uint64_t iv = inv_mod(pr[c], q);
        for (std::size_t j = c; j < cols; ++j) pr[j] = pr[j] * iv % q;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t* pi = &a[i * cols];
            std::uint64_t k = pi[c];
            if (k == 0) continue;
            std::uint64_t nk = q - k;
            for (std::size_t j = c; j < cols; ++j)
                if (pr[j]) pi[j] = (pi[j] + nk * pr[j]) % q;
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    ker_cols = free_cols.size();
    ker.assign(cols * ker_cols, 0);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        ker[free_cols[k] * ker_cols + k] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            std::uint64_t v = a[i * cols + free_cols[k]];
            ker[piv[i] * ker_cols + k] = v ? q - v : 0;
        }
    }
    return piv;
}

Int to_int(std::int64_t x) { return Int(std::to_string(x)); }

// a/b with a = u b mod m and |a|, |b| <= sqrt(m / 2), if one exists.
std::optional<Rat> reconstruct(const Int& u, const Int& m) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = u, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat x(r1, t1);
    x.canonicalize();
    return x;
}

} // namespace

QMatrix kernel_multimodular(const QMatrix& M) {
    std::vector<std::size_t> pivots;
    std::optional<IntMatrix> acc; // CRT residues of the kernel entries
    Int modulus = 1;
    for (std::uint64_t q : kPrimes) {
        const Int Q = to_int(static_cast<std::int64_t>(q));
        std::vector<std::uint64_t> A(M.rows() * M.cols(), 0);
        bool good = true;
        for (std::size_t i = 0; i < M.rows() && good; ++i)
            for (std::size_t j = 0; j < M.cols(); ++j) {
                const Rat& x = M(i, j);
                if (x == 0) continue;
                Int den = x.get_den() % Q;
                if (den == 0) {
                    good = false;
                    break;
                }
                Int num = x.get_num() % Q;
                if (num < 0) num += Q;
                A[i * M.cols() + j] = num.get_ui() * inv_mod(den.get_ui(), q) % q;
            }
        if (!good) continue;
        std::vector<std::uint64_t> ker;
        std::size_t kc = 0;
        auto piv = kernel_mod(A, M.rows(), M.cols(), q, ker, kc);
        if (acc && piv != pivots) {
            // An unlucky prime loses rank; a lucky one after unlucky ones gains it.
            if (piv.size() < pivots.size()) continue;
            acc.reset();
            modulus = 1;
        }
        pivots = piv;
        IntMatrix Kz(M.cols(), kc);
        for (std::size_t i = 0; i < M.cols(); ++i)
            for (std::size_t j = 0; j < kc; ++j) Kz(i, j) = Int(static_cast<unsigned long>(ker[i * kc + j]));
        if (!acc) {
            acc = Kz;
            modulus = Q;
        } else {
            Int inv;
            mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), Q.get_mpz_t());
            for (std::size_t i = 0; i < Kz.rows(); ++i)
                for (std::size_t j = 0; j < Kz.cols(); ++j) {
                    Int a = (*acc)(i, j);
                    Int t = ((Kz(i, j) - a) % Q) * inv % Q;
                    if (t < 0) t += Q;
                    (*acc)(i, j) = a + modulus * t;
                }
            modulus *= Q;
        }
        QMatrix lift(acc->rows(), acc->cols());
        bool ok = true;
        for (std::size_t i = 0; i < acc->rows() && ok; ++i)
            for (std::size_t j = 0; j < acc->cols() && ok; ++j) {
                auto r = reconstruct((*acc)(i, j), modulus);
                if (r) lift(i, j) = *r;
                else ok = false;
            }
        if (ok && (M * lift).is_zero()) return lift;
    }
    return kernel(M);
}

std::size_t rank(const QMatrix& M) { return rank(RationalField{}, M); }
QMatrix kernel(const QMatrix& M) { return kernel(RationalField{}, M); }
std::optional<QMatrix> solve(const QMatrix& A, const QMatrix& B) { return solve(RationalField{}, A, B); }
std::optional<QMatrix> inverse(const QMatrix& A) { return inverse(RationalField{}, A); }

FMatrix<PrimeField> kernel_mod(const PrimeField& f, const FMatrix<PrimeField>& M) {
    if (f.q >= (std::int64_t(1) << 31)) return kernel(f, M);
    const auto q = static_cast<std::uint64_t>(f.q);
    std::vector<std::uint64_t> a(M.rows() * M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) a[i * M.cols() + j] = static_cast<std::uint64_t>(f.norm(M(i, j)));
    std::vector<std::uint64_t> ker;
    std::size_t kc = 0;
    kernel_mod(a, M.rows(), M.cols(), q, ker, kc);
    FMatrix<PrimeField> K(M.cols(), kc);
    for (std::size_t i = 0; i < M.cols(); ++i)
        for (std::size_t j = 0; j < kc; ++j) K(i, j) = static_cast<std::int64_t>(ker[i * kc + j]);
    return K;
}

QMatrix column_basis(const QMatrix& M) {
    QMatrix R = M;
    auto piv = rref(RationalField{}, R);
    std::vector<std::size_t> rows(M.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return M.select(rows, piv);
}

} // namespace fracture
