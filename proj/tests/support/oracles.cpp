#include "support/oracles.hpp"

#include "fracture/core/linalg.hpp"

#include <functional>
#include <optional>

namespace oracle {

using fracture::Rat;

namespace {

Int laplace(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    if (n == 1) return a(rows[0], cols[0]);
    Int det = 0;
    std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        if (a(rows[0], cols[j]) == 0) continue;
        std::vector<std::size_t> cs;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cs.push_back(cols[k]);
        Int m = a(rows[0], cols[j]) * laplace(a, rest, cs);
        det += (j % 2 ? -m : m);
    }
    return det;
}

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> s;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (s.size() == k) {
            visit(s);
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            s.push_back(i);
            rec(i + 1);
            s.pop_back();
        }
    };
    rec(0);
}

Int minor_gcd(const IntMatrix& a, std::size_t k) {
    Int g = 0;
    subsets(a.rows(), k, [&](const std::vector<std::size_t>& rs) {
        subsets(a.cols(), k, [&](const std::vector<std::size_t>& cs) {
            Int d = laplace(a, rs, cs);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

IntMatrix differential(const fracture::ChainComplex& c, int n) {
    return fracture::to_integer(c.d(n));
}

long pval(Int x, long p) {
    long v = 0;
    if (x == 0) return 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

Int ipow(long p, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

std::vector<Int> invariant_factors_by_minors(const IntMatrix& a) {
    std::vector<Int> out;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        Int g = minor_gcd(a, k);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::size_t rank_by_minors(const IntMatrix& a) { return invariant_factors_by_minors(a).size(); }

std::map<int, Group> integral_homology(const fracture::ChainComplex& c) {
    std::map<int, Group> out;
    if (c.is_zero()) return out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        IntMatrix dn = differential(c, n), dn1 = differential(c, n + 1);
        long r = static_cast<long>(c.rank(n)) - static_cast<long>(rank_by_minors(dn)) -
                 static_cast<long>(rank_by_minors(dn1));
        Group g{r, {}};
        for (const Int& d : invariant_factors_by_minors(dn1))
            if (abs(d) > 1) g.torsion.push_back(abs(d));
        if (g.free_rank || !g.torsion.empty()) out[n] = g;
    }
    return out;
}

std::map<int, Group> localized_homology(const fracture::ChainComplex& c, long p) {
    std::map<int, Group> out;
    for (auto [n, g] : integral_homology(c)) {
        Group h{g.free_rank, {}};
        for (const Int& d : g.torsion)
            if (long v = pval(d, p)) h.torsion.push_back(ipow(p, v));
        if (h.free_rank || !h.torsion.empty()) out[n] = h;
    }
    return out;
}

namespace {

// A system of cyclic groups Z/r_j (r = 0: Z) indexed by j, used to model each atom:
// Single: one group; Colim: maps multiply by a; Lim: maps are reductions.
struct System {
    enum Kind { Single, Colim, Lim } kind = Single;
    std::function<Int(long)> r; // r(j)
    Int a = 1;                  // colim multiplier
};

System model(const fracture::Atom& x) {
    using T = fracture::AtomType;
    switch (x.type) {
    case T::Z: return {System::Single, [](long) { return Int(0); }, 1};
    case T::Q: return {System::Colim, [](long) { return Int(0); }, 210};
    case T::Torsion: {
        Int r = ipow(x.p, x.k);
        return {System::Single, [r](long) { return r; }, 1};
    }
    case T::Prufer: {
        long l = x.p;
        return {System::Colim, [l](long j) { return ipow(l, j); }, Int(l)};
    }
    case T::ZpHat: {
        long l = x.p;
        return {System::Lim, [l](long j) { return ipow(l, j); }, 1};
    }
    case T::QpHat: {
        // colim of Z_l along multiplication by l; each Z_l is itself a limit,
        // and after (x) Z/p^s the inner limit is the finite stage Z/gcd(l^J, p^s).
        long l = x.p;
        return {System::Colim, [l](long) { return ipow(l, 40); }, Int(l)};
    }
    }
    return {};
}

// |X/p^s| and |X[p^s]| at stage j of the system.
Int q_order(const Int& r, const Int& ps) { return r == 0 ? ps : gcd(r, ps); }
Int t_order(const Int& r, const Int& ps) { return r == 0 ? Int(1) : gcd(r, ps); }

// Order of the colimit / limit of one tower of cyclic groups built from the stages.
Int stage_order(const System& m, long p, long s, bool torsion) {
    const Int ps = ipow(p, s);
    const long W = 24;
    if (m.kind == System::Single) return torsion ? t_order(m.r(0), ps) : q_order(m.r(0), ps);
    auto order = [&](long j) { return torsion ? t_order(m.r(j), ps) : q_order(m.r(j), ps); };
    auto gen = [&](long j) { return torsion ? (m.r(j) == 0 ? Int(0) : m.r(j) / gcd(m.r(j), ps)) : Int(1); };
    if (m.kind == System::Colim) {
        // Image of the generator of stage j in stage j + W.
        long j = W, J = 2 * W;
        Int n = order(J);
        if (n == 1) return 1;
        // generator g_j maps to a^(J-j) g_j inside Z/r_J; in units of g_J:
        Int img = gen(j);
        for (long i = j; i < J; ++i) img *= m.a;
        Int unit = gen(J);
        if (torsion && m.r(J) != 0) img = (img / unit) % n; // r_J / gcd is the generator
        else if (!torsion) img = img % n;
        if (img == 0) return 1;
        return n / gcd(n, img);
    }
    // Lim along reductions: eventual image of stage J in stage j.
    long j = W, J = 2 * W;
    Int n = order(j);
    if (n == 1) return 1;
    // g_J = r_J / gcd_J reduces into Z/r_j as (r_J / gcd_J) = mult * (r_j / gcd_j).
    Int mult = torsion ? (m.r(J) / gcd(m.r(J), ps)) / (m.r(j) / gcd(m.r(j), ps)) : Int(1);
    mult %= n;
    if (mult == 0) return 1;
    return n / gcd(n, mult);
}

std::optional<fracture::AtomicModule> tower_limit(const std::vector<Int>& orders, long p, bool torsion_side) {
    fracture::AtomicModule out;
    const long depth = static_cast<long>(orders.size()) - 1; // orders[s], s = 0..depth
    bool all_trivial = true;
    for (long s = 1; s <= depth; ++s) all_trivial = all_trivial && orders[s] == 1;
    if (all_trivial) return out;
    bool growing = true;
    for (long s = 1; s <= depth; ++s) growing = growing && orders[s] == ipow(p, s);
    // Transition maps: M/p^(s+1) -> M/p^s is onto; M[p^(s+1)] -> M[p^s] is mult by p,
    // onto iff |T_{s+1}| / p = |T_s|.
    bool onto = true;
    if (torsion_side)
        for (long s = 1; s < depth; ++s) onto = onto && orders[s + 1] / p == orders[s];
    if (growing && onto) {
        out.add(fracture::Atom::zp_hat(p));
        return out;
    }
    long k = pval(orders[depth], p);
    bool stable = orders[depth] == orders[depth - 1] && orders[depth] == ipow(p, k);
    if (!stable) return std::nullopt;
    if (!torsion_side) {
        out.add(fracture::Atom::torsion(p, k));
        return out;
    }
    // Stable orders under multiplication by p: the composite of k maps is zero.
    return out;
}

} // namespace

TowerLimits tower_completion(const fracture::Atom& a, long p, int depth) {
    System m = model(a);
    std::vector<Int> q, t;
    for (long s = 0; s <= depth; ++s) {
        q.push_back(stage_order(m, p, s, false));
        t.push_back(stage_order(m, p, s, true));
    }
    auto l0 = tower_limit(q, p, false), l1 = tower_limit(t, p, true);
    if (!l0 || !l1) throw std::runtime_error("tower oracle does not apply to " + a.to_string());
    return {*l0, *l1};
}

long p1_h0(long deg) { return std::max(deg + 1, 0L); }
long p1_h1(long deg) { return std::max(-deg - 1, 0L); }

namespace {

template <class F>
bool section_over(const F& f, const fracture::FieldDescriptor& k, const fracture::DivisorP1& d,
                  const fracture::RationalFunction& fn) {
    using V = typename F::value_type;
    auto conv = [&](const std::string& s) -> V {
        Rat x = fracture::parse_rat(s);
        if constexpr (std::is_same_v<V, Rat>) return x;
        else {
            auto md = [&](const Int& z) { return f.norm(Int(z % Int(k.q)).get_si()); };
            return f.mul(md(x.get_num()), f.inv(md(x.get_den())));
        }
    };
    std::vector<V> num, den;
    for (const auto& s : fn.num) num.push_back(conv(s));
    for (const auto& s : fn.den) den.push_back(conv(s));
    auto trim = [&](std::vector<V>& p) {
        while (p.size() > 1 && f.is_zero(p.back())) p.pop_back();
    };
    trim(num);
    trim(den);
    if (num.size() == 1 && f.is_zero(num[0])) return false;
    auto divide = [&](std::vector<V>& p, V x) {
        // true if (t - x) | p, replacing p by the quotient
        if (p.size() < 2) return false;
        std::vector<V> q(p.size() - 1);
        V carry = f.zero();
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = f.add(p[i], f.mul(carry, x));
            q[i - 1] = carry;
        }
        if (!f.is_zero(f.add(p[0], f.mul(carry, x)))) return false;
        p = q;
        return true;
    };
    long n_inf = 0;
    for (const auto& [pt, n] : d) {
        if (pt.infinity) {
            n_inf = n;
            continue;
        }
        V x = conv(fracture::rat_string(pt.value));
        long on = 0, od = 0;
        while (divide(num, x)) ++on;
        while (divide(den, x)) ++od;
        if (on - od + n < 0) return false;
    }
    // No other poles: what is left of den divides what is left of num (up to a unit).
    if (den.size() > 1) {
        std::vector<V> r = num;
        while (r.size() >= den.size() && !(r.size() == 1 && f.is_zero(r[0]))) {
            V c = f.mul(r.back(), f.inv(den.back()));
            std::size_t shift = r.size() - den.size();
            for (std::size_t i = 0; i < den.size(); ++i) r[i + shift] = f.sub(r[i + shift], f.mul(c, den[i]));
            r.pop_back();
            trim(r);
            if (r.size() < den.size()) break;
        }
        for (const auto& c : r)
            if (!f.is_zero(c)) return false;
    }
    long ord_inf = static_cast<long>(fn.den.size()) - static_cast<long>(fn.num.size());
    // recompute with trimmed originals
    std::vector<V> n0, d0;
    for (const auto& s : fn.num) n0.push_back(conv(s));
    for (const auto& s : fn.den) d0.push_back(conv(s));
    trim(n0);
    trim(d0);
    ord_inf = static_cast<long>(d0.size()) - static_cast<long>(n0.size());
    return ord_inf + n_inf >= 0;
}

} // namespace

bool is_section(const fracture::FieldDescriptor& k, const fracture::DivisorP1& d, const fracture::RationalFunction& f) {
    if (k.tag == fracture::FieldDescriptor::Tag::Rationals) return section_over(fracture::RationalField{}, k, d, f);
    return section_over(fracture::PrimeField{k.q}, k, d, f);
}

} // namespace oracle
