#include "fracture/complexes/homology.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/core/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fracture {

namespace {

// Filtration time: the P subcomplex comes first, then D, then F.
int time_of(Kind k) { return 2 - level(k); }

// Generator order within one degree: by time, then by index.
std::vector<std::size_t> filtration_order(const std::vector<Kind>& ks) {
    std::vector<std::size_t> ord(ks.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](std::size_t a, std::size_t b) { return time_of(ks[a]) < time_of(ks[b]); });
    return ord;
}

struct Reduction {
    // pivot_of_column[j] = row index (original) or -1 when the column reduced to zero.
    std::vector<long> pivot_of_column;
    // column_of_pivot[i] = column index (original) that has row i as pivot, or -1.
    std::vector<long> column_of_pivot;
};

Reduction reduce(const QMatrix& d, const std::vector<Kind>& row_kinds, const std::vector<Kind>& col_kinds) {
    const std::size_t m = d.rows(), n = d.cols();
    auto rord = filtration_order(row_kinds);
    auto cord = filtration_order(col_kinds);
    std::vector<std::size_t> rpos(m);
    for (std::size_t i = 0; i < m; ++i) rpos[rord[i]] = i;

    Reduction r{std::vector<long>(n, -1), std::vector<long>(m, -1)};
    std::vector<std::vector<Rat>> cols(n, std::vector<Rat>(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) cols[j][rpos[i]] = d(i, j);

    auto low = [&](const std::vector<Rat>& c) -> long {
        for (long i = static_cast<long>(m) - 1; i >= 0; --i)
            if (c[i] != 0) return i;
        return -1;
    };
    std::vector<long> owner(m, -1); // position -> reduced column
    for (std::size_t j : cord) {
        auto& c = cols[j];
        long l = low(c);
        while (l >= 0 && owner[l] >= 0) {
            const auto& o = cols[owner[l]];
            Rat k = c[l] / o[l];
            for (std::size_t i = 0; i < m; ++i)
                if (o[i] != 0) c[i] -= k * o[i];
            l = low(c);
        }
        if (l >= 0) {
            owner[l] = static_cast<long>(j);
            r.pivot_of_column[j] = static_cast<long>(rord[l]);
            r.column_of_pivot[rord[l]] = static_cast<long>(j);
        }
    }
    return r;
}

QMatrix lattice_block(const ChainComplex& c, int n) {
    return c.d(n).select(c.indices(n - 1, Kind::F), c.indices(n, Kind::F));
}

// Torsion in H_{n-1} of the F-block quotient complex, from the local Smith form of its d_n.
std::vector<Int> lattice_torsion(const ChainComplex& c, int n) {
    std::vector<Int> out;
    if (c.ring().lattice_is_field()) return out;
    QMatrix a = lattice_block(c, n);
    if (a.rows() == 0 || a.cols() == 0) return out;
    Int den = common_denominator(a);
    IntMatrix ai = to_integer(Rat(den) * a);
    for (const auto& e : smith_normal_form(ai).diagonal()) {
        Int t = c.ring().local_torsion(e);
        if (t > 1) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool LocalGroup::is_zero() const {
    if (free_rank != 0 || !torsion.empty()) return false;
    for (const auto& [k, v] : divisible)
        if (v) return false;
    for (const auto& [k, v] : quotients)
        if (v) return false;
    return true;
}

long LocalGroup::divisible_count(Kind k) const {
    auto it = divisible.find(k);
    return it == divisible.end() ? 0 : it->second;
}

long LocalGroup::quotient_count(Kind b, Kind a) const {
    auto it = quotients.find({b, a});
    return it == quotients.end() ? 0 : it->second;
}

std::string LocalGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank) {
        sep();
        os << "F^" << free_rank;
    }
    for (const auto& [k, v] : divisible)
        if (v) {
            sep();
            os << kind_char(k) << "^" << v;
        }
    for (const auto& [k, v] : quotients)
        if (v) {
            sep();
            os << "(" << kind_char(k.first) << "/" << kind_char(k.second) << ")^" << v;
        }
    for (const auto& t : torsion) {
        sep();
        os << "T" << t;
    }
    if (first) os << "0";
    return os.str();
}

GradedGroup homology(const ChainComplex& c) {
    GradedGroup out;
    if (c.is_zero()) return out;
    const int lo = c.lo() - 1, hi = c.hi() + 1;
    std::map<int, Reduction> red;
    for (int n = lo; n <= hi + 1; ++n) red[n] = reduce(c.d(n), c.kinds(n - 1), c.kinds(n));

    for (int n = c.lo(); n <= c.hi(); ++n) {
        LocalGroup g;
        const auto& ks = c.kinds(n);
        const auto& out_red = red[n];     // d_n : C_n -> C_{n-1}
        const auto& in_red = red[n + 1];  // d_{n+1} : C_{n+1} -> C_n
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (out_red.pivot_of_column[i] >= 0) continue; // not a cycle birth
            Kind b = ks[i];
            long killer = in_red.column_of_pivot[i];
            if (killer < 0) {
                if (b == Kind::F)
                    ++g.free_rank;
                else
                    ++g.divisible[b];
                continue;
            }
            Kind a = c.kinds(n + 1)[static_cast<std::size_t>(killer)];
            if (a != b) ++g.quotients[{b, a}];
        }
        g.torsion = lattice_torsion(c, n + 1);
        for (auto it = g.divisible.begin(); it != g.divisible.end();)
            it = it->second ? std::next(it) : g.divisible.erase(it);
        if (!g.is_zero()) out[n] = g;
    }
    return out;
}

bool is_acyclic(const ChainComplex& c) { return homology(c).empty(); }

std::map<int, FgAbGroup> integral_homology(const ChainComplex& c) {
    require(c.ring().tag == RingTag::IntegersZ, ErrorCode::Precondition, "integral homology needs an integral complex");
    std::map<int, FgAbGroup> out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        for (Kind k : c.kinds(n))
            require(k == Kind::F, ErrorCode::Precondition, "integral homology needs a perfect complex");
        long z = static_cast<long>(c.rank(n)) - static_cast<long>(rank(c.d(n)));
        IntMatrix in = to_integer(c.d(n + 1));
        auto s = smith_normal_form(in);
        FgAbGroup g;
        g.free_rank = z - s.rank;
        for (const auto& e : s.diagonal())
            if (e > 1) g.invariant_factors.push_back(e);
        if (!g.is_zero()) out[n] = g;
    }
    return out;
}

std::map<int, long> rational_betti(const ChainComplex& c) {
    std::map<int, long> out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        long b = static_cast<long>(c.rank(n)) - static_cast<long>(rank(c.d(n))) -
                 static_cast<long>(rank(c.d(n + 1)));
        if (b) out[n] = b;
    }
    return out;
}

std::map<int, long> mod_p_betti_of_lattice(const ChainComplex& c, long p) {
    PrimeField f{p};
    auto reduce_mod = [&](const QMatrix& a) {
        Matrix<std::int64_t> m(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const Rat& x = a(i, j);
                require(x.get_den() % p != 0, ErrorCode::Precondition, "entry is not p-integral");
                Int num = x.get_num() % p, den = x.get_den() % p;
                m(i, j) = f.mul(f.norm(num.get_si()), f.inv(f.norm(den.get_si())));
            }
        return m;
    };
    std::map<int, long> out;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        long fn = static_cast<long>(c.indices(n, Kind::F).size());
        long b = fn - static_cast<long>(rank(f, reduce_mod(lattice_block(c, n)))) -
                 static_cast<long>(rank(f, reduce_mod(lattice_block(c, n + 1))));
        if (b) out[n] = b;
    }
    return out;
}

long euler_characteristic(const ChainComplex& c) {
    long chi = 0;
    for (int n : c.degrees()) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(n));
    return chi;
}

std::string to_string(const GradedGroup& g) {
    if (g.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, x] : g) {
        os << (first ? "" : ", ") << "H" << n << "=" << x.to_string();
        first = false;
    }
    return os.str();
}

} // namespace fracture
