#include "fracture/core/integer.hpp"

#include "fracture/core/errors.hpp"

#include <algorithm>

namespace fracture {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long next_prime(long n) {
    long c = std::max(n + 1, 2L);
    while (!is_prime(c)) ++c;
    return c;
}

long valuation(const Int& a, long p) {
    require(a != 0, ErrorCode::Precondition, "valuation of zero");
    Int x = abs(a);
    long v = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
        ++v;
    }
    return v;
}

long valuation(const Rat& a, long p) {
    return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

std::vector<long> prime_divisors(const Int& a) {
    require(a != 0, ErrorCode::Precondition, "prime divisors of zero");
    Int x = abs(a);
    std::vector<long> out;
    for (long d = 2; d <= 1000000 && x > 1; ++d) {
        if (Int(d) * d > x) break;
        if (mpz_divisible_ui_p(x.get_mpz_t(), d)) {
            out.push_back(d);
            while (mpz_divisible_ui_p(x.get_mpz_t(), d))
                mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), d);
        }
    }
    if (x > 1) {
        require(x.fits_slong_p() && mpz_probab_prime_p(x.get_mpz_t(), 30) > 0,
                ErrorCode::Precondition, "integer too large to factor: " + x.get_str());
        out.push_back(x.get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int p_part(const Int& a, long p) {
    if (a == 0) return 0;
    Int r = 1;
    for (long i = valuation(a, p); i > 0; --i) r *= p;
    return r;
}

Int strip_primes(const Int& a, const Support& S) {
    Int x = abs(a);
    if (x == 0) return 0;
    for (long p : S)
        while (mpz_divisible_ui_p(x.get_mpz_t(), p))
            mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
    return x;
}

bool is_smooth(const Int& a, const Support& S) { return strip_primes(a, S) == 1; }

Support normalize_support(Support S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    for (long p : S) require(is_prime(p), ErrorCode::Input, "support entry not prime: " + std::to_string(p));
    return S;
}

Support support_union(const Support& a, const Support& b) {
    Support S = a;
    S.insert(S.end(), b.begin(), b.end());
    return normalize_support(S);
}

bool contains(const Support& S, long p) { return std::binary_search(S.begin(), S.end(), p); }

Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorCode::Input, "not a rational: '" + s + "'");
    require(r.get_den() != 0, ErrorCode::Input, "zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_string(const Rat& r) { return r.get_str(); }

} // namespace fracture
