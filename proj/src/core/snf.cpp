#include "fracture/core/snf.hpp"

#include "fracture/core/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fracture {

namespace {

void add_row_multiple(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < M.cols(); ++j) M(dst, j) += q * M(src, j);
}

void add_col_multiple(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += q * M(i, src);
}

} // namespace

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    for (long i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
}

SmithForm smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithForm r{IntMatrix::identity(m), A, IntMatrix::identity(n), 0};
    IntMatrix& D = r.D;
    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
        bool found = false;
        for (;;) {
            std::size_t pr = 0, pc = 0;
            found = false;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D(i, j) == 0) continue;
                    Int a = abs(D(i, j));
                    if (!found || a < best) {
                        best = a;
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            if (!found) break;
            D.swap_rows(t, pr);
            r.U.swap_rows(t, pr);
            D.swap_cols(t, pc);
            r.V.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                add_row_multiple(D, i, t, -q);
                add_row_multiple(r.U, i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                add_col_multiple(D, j, t, -q);
                add_col_multiple(r.V, j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        add_row_multiple(D, t, i, 1);
                        add_row_multiple(r.U, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!found) break;
        if (D(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < m; ++j) r.U(t, j) = -r.U(t, j);
        }
        r.rank = static_cast<long>(t) + 1;
    }
    return r;
}

std::string FgAbGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FgAbGroup fg_invariants(const IntMatrix& relations) {
    SmithForm s = smith_normal_form(relations);
    FgAbGroup g;
    g.free_rank = static_cast<long>(relations.cols()) - s.rank;
    for (const auto& d : s.diagonal())
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

FgAbGroup make_group(long free_rank, const std::vector<Int>& cyclic_orders) {
    // Primary decomposition, then recombine powers into invariant factors.
    std::map<long, std::vector<Int>> primary;
    for (const auto& c : cyclic_orders) {
        require(c >= 1, ErrorCode::Precondition, "cyclic order must be positive");
        if (c == 1) continue;
        for (long p : prime_divisors(c)) primary[p].push_back(p_part(c, p));
    }
    std::size_t len = 0;
    for (auto& [p, v] : primary) {
        std::sort(v.begin(), v.end(), [](const Int& a, const Int& b) { return a > b; });
        len = std::max(len, v.size());
    }
    std::vector<Int> factors(len, Int(1));
    for (auto& [p, v] : primary)
        for (std::size_t i = 0; i < v.size(); ++i) factors[len - 1 - i] *= v[i];
    FgAbGroup g;
    g.free_rank = free_rank;
    for (const auto& f : factors)
        if (f > 1) g.invariant_factors.push_back(f);
    return g;
}

IntMatrix integer_kernel(const IntMatrix& A) {
    SmithForm s = smith_normal_form(A);
    const std::size_t n = A.cols();
    std::vector<std::size_t> rows(n), cols;
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    for (std::size_t j = static_cast<std::size_t>(s.rank); j < n; ++j) cols.push_back(j);
    return s.V.select(rows, cols);
}

Int determinant(const IntMatrix& A) {
    require(A.rows() == A.cols(), ErrorCode::Precondition, "determinant of non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMatrix M = A;
    Int prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && M(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            M.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M(i, j) = v;
            }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

} // namespace fracture
