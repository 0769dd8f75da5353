#include "fracture/curve/p1.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/core/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <type_traits>

namespace fracture {

FieldDescriptor FieldDescriptor::prime_field(long q) {
    require(is_prime(q), ErrorCode::Input, "field characteristic must be prime");
    return {Tag::PrimeField, q};
}

std::string FieldDescriptor::name() const { return tag == Tag::Rationals ? "Q" : "F" + std::to_string(q); }

FieldDescriptor parse_field(const std::string& s) {
    if (s == "Q" || s == "QQ" || s == "Rationals") return FieldDescriptor::rationals();
    std::string digits;
    if (s.size() > 1 && s[0] == 'F') digits = s.substr(1);
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
        return FieldDescriptor::prime_field(std::stol(digits));
    fail(ErrorCode::Input, "unknown field '" + s + "'");
}

std::string P1Point::to_string() const { return infinity ? "inf" : rat_string(value); }

long degree(const DivisorP1& d) {
    long s = 0;
    for (const auto& [x, n] : d) s += n;
    return s;
}

long default_tail_bound(const DivisorP1& d) {
    long b = std::labs(degree(d)) + 4;
    for (const auto& [x, n] : d) b = std::max(b, std::labs(n) + 2);
    return b;
}

namespace {

Rat reduce(const FieldDescriptor& k, const Rat& x) {
    if (k.tag == FieldDescriptor::Tag::Rationals) return x;
    Int q = k.q;
    Int den = x.get_den();
    require(den % q != 0, ErrorCode::Input, "point " + rat_string(x) + " is not defined over " + k.name());
    PrimeField f{k.q};
    Int n = x.get_num() % q;
    Int dm = den % q;
    std::int64_t v = f.mul(f.norm(n.get_si()), f.inv(f.norm(dm.get_si())));
    return Rat(Int(std::to_string(v)));
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

template <class F>
typename F::value_type from_int(const F& f, const Int& x);
template <>
Rat from_int(const RationalField&, const Int& x) {
    return Rat(x);
}
template <>
std::int64_t from_int(const PrimeField& f, const Int& x) {
    Int r = x % Int(f.q);
    return f.norm(r.get_si());
}

template <class F>
typename F::value_type from_rat(const F& f, const Rat& x) {
    return f.mul(from_int(f, x.get_num()), f.inv(from_int(f, x.get_den())));
}

std::string show(const Rat& x) { return rat_string(x); }
std::string show(std::int64_t x) { return std::to_string(x); }

template <class F>
typename F::value_type power(const F& f, typename F::value_type x, long e) {
    if (e < 0) {
        x = f.inv(x);
        e = -e;
    }
    typename F::value_type r = f.one();
    for (long i = 0; i < e; ++i) r = f.mul(r, x);
    return r;
}

template <class F>
struct Setup {
    using V = typename F::value_type;
    struct Place {
        bool inf;
        V x;
        long n;
    };
    F f;
    long B;
    std::vector<Place> places;
    std::vector<std::size_t> finite; // indices into places

    std::size_t k_dim() const { return 1 + B * finite.size() + B; }

    // Laurent coefficients of the K-basis element `col` at `place`, exponents -B..B.
    std::vector<V> expansion(std::size_t col, const Place& pl) const {
        std::vector<V> c(2 * B + 1, f.zero());
        auto put = [&](long e, V v) {
            if (e >= -B && e <= B) c[e + B] = f.add(c[e + B], v);
        };
        if (col == 0) {
            put(0, f.one());
            return c;
        }
        col -= 1;
        if (col < B * finite.size()) {
            const Place& y = places[finite[col / B]];
            long j = static_cast<long>(col % B) + 1;
            if (pl.inf) {
                // (t - y)^-j = u^j (1 - y u)^-j
                for (long k = 0; j + k <= B; ++k)
                    put(j + k, f.mul(from_int(f, binom(j + k - 1, k)), power(f, y.x, k)));
            } else if (f.is_zero(f.sub(pl.x, y.x))) {
                put(-j, f.one());
            } else {
                // (c + s)^-j with c = x - y, s = t - x
                V cc = f.sub(pl.x, y.x);
                for (long k = 0; k <= B; ++k) {
                    V b = from_int(f, binom(j + k - 1, k));
                    if (k % 2) b = f.neg(b);
                    put(k, f.mul(b, power(f, cc, -j - k)));
                }
            }
            return c;
        }
        long j = static_cast<long>(col - B * finite.size()) + 1;
        if (pl.inf) {
            put(-j, f.one());
        } else {
            for (long k = 0; k <= j; ++k) put(k, f.mul(from_int(f, binom(j, k)), power(f, pl.x, j - k)));
        }
        return c;
    }
};

template <class F>
Setup<F> make_setup(const F& f, const FieldDescriptor& k, const DivisorP1& d, long B) {
    Setup<F> s{f, B, {}, {}};
    bool has_inf = false;
    std::vector<Rat> used;
    for (const auto& [x, n] : d) {
        if (x.infinity) {
            has_inf = true;
            s.places.push_back({true, f.zero(), n});
        } else {
            Rat r = reduce(k, x.value);
            used.push_back(r);
            s.places.push_back({false, from_rat(f, r), n});
        }
    }
    if (!has_inf) s.places.push_back({true, f.zero(), 0});
    // Witness: the first small integer point outside the support, if any is left.
    long limit = k.tag == FieldDescriptor::Tag::PrimeField ? k.q : static_cast<long>(used.size()) + 1;
    for (long w = 0; w < limit; ++w)
        if (std::find(used.begin(), used.end(), Rat(w)) == used.end()) {
            s.places.push_back({false, from_int(f, Int(w)), 0});
            break;
        }
    for (std::size_t i = 0; i < s.places.size(); ++i)
        if (!s.places[i].inf) s.finite.push_back(i);
    return s;
}

template <class F>
FMatrix<F> null_space(const F& f, const FMatrix<F>& M) {
    if constexpr (std::is_same_v<F, RationalField>) return kernel_multimodular(M);
    else return kernel_mod(f, M);
}

template <class F>
struct Dims {
    long h0 = 0, h1 = 0;
    std::vector<std::vector<typename F::value_type>> basis; // K-coordinates
};

template <class F>
Dims<F> residue_route(const Setup<F>& s) {
    using V = typename F::value_type;
    const F& f = s.f;
    const long B = s.B;
    const std::size_t kd = s.k_dim();
    std::size_t rows = s.places.size() * (2 * B + 1), cols = kd;
    for (const auto& p : s.places) cols += B + p.n + 1;
    FMatrix<F> M(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = f.zero();
    std::size_t col = kd;
    for (std::size_t pi = 0; pi < s.places.size(); ++pi) {
        const auto& p = s.places[pi];
        const std::size_t r0 = pi * (2 * B + 1);
        for (std::size_t c = 0; c < kd; ++c) {
            auto e = s.expansion(c, p);
            for (long t = 0; t < 2 * B + 1; ++t) M(r0 + t, c) = e[t];
        }
        for (long e = -p.n; e <= B; ++e) M(r0 + e + B, col++) = f.neg(f.one());
    }
    FMatrix<F> K = null_space(f, M);
    Dims<F> d;
    std::size_t r = cols - K.cols();
    d.h0 = static_cast<long>(K.cols());
    d.h1 = static_cast<long>(rows - r);
    if (K.cols() == 0) return d;
    FMatrix<F> P(K.cols(), kd);
    for (std::size_t v = 0; v < K.cols(); ++v)
        for (std::size_t c = 0; c < kd; ++c) P(v, c) = K(c, v);
    auto piv = rref(f, P);
    for (std::size_t v = 0; v < piv.size(); ++v) {
        std::vector<V> row(kd);
        for (std::size_t c = 0; c < kd; ++c) row[c] = P(v, c);
        d.basis.push_back(std::move(row));
    }
    return d;
}

template <class F>
Dims<F> cousin_route(const Setup<F>& s) {
    const F& f = s.f;
    const long B = s.B;
    const std::size_t kd = s.k_dim();
    std::size_t rows = 0;
    for (const auto& p : s.places) rows += B - p.n;
    FMatrix<F> M(rows, kd);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < kd; ++j) M(i, j) = f.zero();
    std::size_t r0 = 0;
    for (const auto& p : s.places) {
        for (std::size_t c = 0; c < kd; ++c) {
            auto e = s.expansion(c, p);
            for (long x = -B; x < -p.n; ++x) M(r0 + (x + B), c) = e[x + B];
        }
        r0 += B - p.n;
    }
    std::size_t r = kd - null_space(f, M).cols();
    Dims<F> d;
    d.h0 = static_cast<long>(kd - r);
    d.h1 = static_cast<long>(rows - r);
    return d;
}

template <class F>
using Poly = std::vector<typename F::value_type>;

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> c(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    return c;
}

template <class F>
Poly<F> linear_power(const F& f, typename F::value_type x, long e) {
    Poly<F> p{f.one()};
    for (long i = 0; i < e; ++i) p = mul(f, p, Poly<F>{f.neg(x), f.one()});
    return p;
}

// Divides by (t - x) when x is a root; returns false otherwise.
template <class F>
bool divide_linear(const F& f, Poly<F>& p, typename F::value_type x) {
    if (p.size() < 2) return false;
    Poly<F> q(p.size() - 1, f.zero());
    typename F::value_type carry = f.zero();
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = f.add(p[i], f.mul(carry, x));
        q[i - 1] = carry;
    }
    if (!f.is_zero(f.add(p[0], f.mul(carry, x)))) return false;
    p = std::move(q);
    return true;
}

template <class F>
RationalFunction to_function(const Setup<F>& s, const std::vector<typename F::value_type>& c) {
    const F& f = s.f;
    const long B = s.B;
    Poly<F> den{f.one()};
    for (std::size_t a : s.finite) den = mul(f, den, linear_power(f, s.places[a].x, B));
    Poly<F> num(den.size() + B + 1, f.zero());
    auto add_into = [&](const Poly<F>& p, typename F::value_type k) {
        for (std::size_t i = 0; i < p.size(); ++i) num[i] = f.add(num[i], f.mul(k, p[i]));
    };
    add_into(den, c[0]);
    for (std::size_t ai = 0; ai < s.finite.size(); ++ai)
        for (long j = 1; j <= B; ++j) {
            auto k = c[1 + ai * B + (j - 1)];
            if (f.is_zero(k)) continue;
            Poly<F> p = linear_power(f, s.places[s.finite[ai]].x, B - j);
            for (std::size_t bi = 0; bi < s.finite.size(); ++bi)
                if (bi != ai) p = mul(f, p, linear_power(f, s.places[s.finite[bi]].x, B));
            add_into(p, k);
        }
    for (long j = 1; j <= B; ++j) {
        auto k = c[1 + s.finite.size() * B + (j - 1)];
        if (f.is_zero(k)) continue;
        Poly<F> tj(j + 1, f.zero());
        tj[j] = f.one();
        add_into(mul(f, tj, den), k);
    }
    while (num.size() > 1 && f.is_zero(num.back())) num.pop_back();
    for (std::size_t a : s.finite)
        while (true) {
            Poly<F> n2 = num, d2 = den;
            if (!divide_linear(f, d2, s.places[a].x) || !divide_linear(f, n2, s.places[a].x)) break;
            num = std::move(n2);
            den = std::move(d2);
        }
    RationalFunction r;
    for (const auto& x : num) r.num.push_back(show(x));
    for (const auto& x : den) r.den.push_back(show(x));
    return r;
}

template <class F>
CohomologyResult compute(const F& f, const FieldDescriptor& k, const DivisorP1& d, long B) {
    Setup<F> s = make_setup(f, k, d, B);
    Dims<F> a = residue_route(s);
    Dims<F> b = residue_route(make_setup(f, k, d, B + 2));
    require(a.h0 == b.h0 && a.h1 == b.h1, ErrorCode::TruncationUnstable,
            "cohomology changed between tail bounds " + std::to_string(B) + " and " + std::to_string(B + 2));
    CohomologyResult r;
    r.h0 = a.h0;
    r.h1 = a.h1;
    r.tail_bound = B;
    for (const auto& v : a.basis) r.h0_basis.push_back(to_function(s, v));
    return r;
}

long checked_bound(const DivisorP1& d, std::optional<long> tail_bound) {
    long B = tail_bound.value_or(default_tail_bound(d));
    long need = 0;
    for (const auto& [x, n] : d) need = std::max(need, std::labs(n));
    require(B >= need && B >= 1, ErrorCode::Truncation,
            "tail bound " + std::to_string(B) + " is below the largest multiplicity " + std::to_string(need));
    return B;
}

} // namespace

void validate(const FieldDescriptor& k, const DivisorP1& d) {
    std::vector<Rat> seen;
    int infs = 0;
    for (const auto& [x, n] : d) {
        require(n != 0, ErrorCode::Input, "divisor multiplicities must be nonzero");
        if (x.infinity) {
            require(++infs == 1, ErrorCode::Input, "point inf repeated in divisor");
            continue;
        }
        Rat r = reduce(k, x.value);
        require(std::find(seen.begin(), seen.end(), r) == seen.end(), ErrorCode::Input,
                "point " + x.to_string() + " repeated in divisor");
        seen.push_back(r);
    }
}

CohomologyResult line_bundle_cohomology(const FieldDescriptor& k, const DivisorP1& d, std::optional<long> tail_bound) {
    validate(k, d);
    long B = checked_bound(d, tail_bound);
    if (k.tag == FieldDescriptor::Tag::Rationals) return compute(RationalField{}, k, d, B);
    return compute(PrimeField{k.q}, k, d, B);
}

CousinComparison cousin_vs_residue(const FieldDescriptor& k, const DivisorP1& d, std::optional<long> tail_bound) {
    validate(k, d);
    long B = checked_bound(d, tail_bound);
    CousinComparison c;
    auto run = [&](const auto& f) {
        auto s = make_setup(f, k, d, B);
        auto a = residue_route(s);
        auto b = cousin_route(s);
        c = {a.h0, a.h1, b.h0, b.h1};
    };
    if (k.tag == FieldDescriptor::Tag::Rationals)
        run(RationalField{});
    else
        run(PrimeField{k.q});
    require(c.h0_residue == c.h0_cousin && c.h1_residue == c.h1_cousin, ErrorCode::Mismatch,
            "Cousin and residue computations disagree");
    return c;
}

} // namespace fracture
