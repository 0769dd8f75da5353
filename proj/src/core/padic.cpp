#include "fracture/core/padic.hpp"

#include "fracture/core/errors.hpp"

#include <algorithm>

namespace fracture {

namespace {

Int power(long p, long n) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    return r;
}

Int reduce(const Int& a, long p, long n) {
    Int m = power(p, n), r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

PadicApprox::PadicApprox(long p, long precision, const Int& residue, bool exact)
    : p_(p), n_(precision), exact_(exact) {
    require(p >= 2 && is_prime(p), ErrorCode::Input, "p-adic prime must be prime");
    require(precision >= 1, ErrorCode::PrecisionExhausted, "p-adic precision exhausted");
    r_ = reduce(residue, p, precision);
}

PadicApprox PadicApprox::from_integer(const Int& a, long p, long precision) {
    return PadicApprox(p, precision, a, true);
}

PadicApprox PadicApprox::from_rational(const Rat& a, long p, long precision) {
    require(a.get_den() % p != 0, ErrorCode::Precondition, "rational is not p-integral");
    Int m = power(p, precision), inv;
    mpz_invert(inv.get_mpz_t(), a.get_den_mpz_t(), m.get_mpz_t());
    return PadicApprox(p, precision, a.get_num() * inv, true);
}

long PadicApprox::valuation() const {
    if (r_ == 0) return n_;
    return fracture::valuation(r_, p_);
}

PadicApprox PadicApprox::operator+(const PadicApprox& b) const {
    require(p_ == b.p_, ErrorCode::Precondition, "p-adic primes differ");
    return PadicApprox(p_, std::min(n_, b.n_), r_ + b.r_, exact_ && b.exact_);
}

PadicApprox PadicApprox::operator-(const PadicApprox& b) const {
    require(p_ == b.p_, ErrorCode::Precondition, "p-adic primes differ");
    return PadicApprox(p_, std::min(n_, b.n_), r_ - b.r_, exact_ && b.exact_);
}

PadicApprox PadicApprox::operator-() const { return PadicApprox(p_, n_, -r_, exact_); }

PadicApprox PadicApprox::operator*(const PadicApprox& b) const {
    require(p_ == b.p_, ErrorCode::Precondition, "p-adic primes differ");
    long n = std::min(n_ + b.valuation(), b.n_ + valuation());
    return PadicApprox(p_, n, r_ * b.r_, exact_ && b.exact_);
}

PadicApprox PadicApprox::scaled(const Int& m) const {
    long gain = (m == 0) ? 0 : fracture::valuation(m, p_);
    return PadicApprox(p_, n_ + gain, r_ * m, exact_);
}

PadicApprox PadicApprox::inv() const {
    if (!is_unit()) fail(ErrorCode::NonUnit, "inverse of a non-unit p-adic: " + to_string());
    Int m = power(p_, n_), x;
    mpz_invert(x.get_mpz_t(), r_.get_mpz_t(), m.get_mpz_t());
    return PadicApprox(p_, n_, x, exact_);
}

PadicApprox PadicApprox::divide_by_p_power(long k) const {
    require(k >= 0, ErrorCode::Precondition, "negative power");
    if (n_ - k < 1) fail(ErrorCode::PrecisionExhausted, "p-adic precision exhausted by division");
    require(valuation() >= k, ErrorCode::NonUnit, "not divisible by p^k");
    Int q;
    mpz_divexact(q.get_mpz_t(), r_.get_mpz_t(), power(p_, k).get_mpz_t());
    return PadicApprox(p_, n_ - k, q, exact_);
}

bool PadicApprox::agrees(const PadicApprox& b) const {
    if (p_ != b.p_) return false;
    long n = std::min(n_, b.n_);
    return reduce(r_ - b.r_, p_, n) == 0;
}

std::string PadicApprox::to_string() const {
    return r_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(n_);
}

PadicApprox padic_op(const PadicApprox& a, const PadicApprox& b, PadicOp op) {
    switch (op) {
    case PadicOp::Add: return a + b;
    case PadicOp::Mul: return a * b;
    case PadicOp::Inv: return a.inv();
    }
    return a;
}

} // namespace fracture
