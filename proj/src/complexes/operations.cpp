#include "fracture/complexes/operations.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/core/linalg.hpp"

#include <set>

namespace fracture {

namespace {

std::set<int> degree_union(std::initializer_list<const ChainComplex*> cs, int lo_shift = 0, int hi_shift = 0) {
    std::set<int> s;
    for (auto* c : cs)
        for (int n : c->degrees())
            for (int k = lo_shift; k <= hi_shift; ++k) s.insert(n + k);
    return s;
}

std::vector<Kind> concat(std::initializer_list<const std::vector<Kind>*> parts) {
    std::vector<Kind> v;
    for (auto* p : parts) v.insert(v.end(), p->begin(), p->end());
    return v;
}

void require_same_ring(const ChainComplex& a, const ChainComplex& b, const char* what) {
    require(a.ring() == b.ring(), ErrorCode::Precondition,
            std::string(what) + ": rings differ (" + a.ring().name() + " vs " + b.ring().name() + ")");
}

} // namespace

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    require_same_ring(a, b, "direct sum");
    std::map<int, std::vector<Kind>> gens;
    std::map<int, QMatrix> d;
    for (int n : degree_union({&a, &b})) gens[n] = concat({&a.kinds(n), &b.kinds(n)});
    for (int n : degree_union({&a, &b}, 0, 1)) d[n] = dsum(a.d(n), b.d(n));
    return ChainComplex(a.ring(), std::move(gens), std::move(d));
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
    std::map<int, QMatrix> m;
    for (int n : degree_union({&f.source, &g.source})) m[n] = dsum(f.at(n), g.at(n));
    return ChainMap(direct_sum(f.source, g.source), direct_sum(f.target, g.target), std::move(m));
}

ChainComplex shift(const ChainComplex& c, int k) {
    std::map<int, std::vector<Kind>> gens;
    std::map<int, QMatrix> d;
    for (const auto& [n, ks] : c.generators()) gens[n + k] = ks;
    Rat sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [n, m] : c.differentials()) d[n + k] = sign * m;
    return ChainComplex(c.ring(), std::move(gens), std::move(d));
}

ChainComplex cone(const ChainMap& f) {
    require_same_ring(f.source, f.target, "cone");
    const auto& S = f.source;
    const auto& T = f.target;
    std::map<int, std::vector<Kind>> gens;
    std::map<int, QMatrix> d;
    std::set<int> degs = degree_union({&T});
    for (int n : S.degrees()) degs.insert(n + 1);
    for (int n : degs) gens[n] = concat({&T.kinds(n), &S.kinds(n - 1)});
    std::set<int> ddegs = degs;
    for (int n : degs) ddegs.insert(n + 1);
    for (int n : ddegs) {
        // C_n = T_n + S_{n-1} -> C_{n-1} = T_{n-1} + S_{n-2}
        QMatrix m(T.rank(n - 1) + S.rank(n - 2), T.rank(n) + S.rank(n - 1));
        place(m, 0, 0, T.d(n));
        place(m, 0, T.rank(n), f.at(n - 1));
        place(m, T.rank(n - 1), T.rank(n), -S.d(n - 1));
        d[n] = std::move(m);
    }
    return ChainComplex(T.ring(), std::move(gens), std::move(d));
}

ChainMap cone_inclusion(const ChainMap& f) {
    ChainComplex c = cone(f);
    std::map<int, QMatrix> m;
    for (int n : f.target.degrees()) {
        QMatrix x(c.rank(n), f.target.rank(n));
        place(x, 0, 0, QMatrix::identity(f.target.rank(n)));
        m[n] = std::move(x);
    }
    return ChainMap(f.target, c, std::move(m));
}

ChainComplex homotopy_pullback(const ChainMap& f, const ChainMap& g) {
    require_same_ring(f.source, f.target, "homotopy pullback");
    require_same_ring(g.source, g.target, "homotopy pullback");
    require_same_ring(f.source, g.source, "homotopy pullback");
    require(f.target.generators() == g.target.generators(), ErrorCode::Precondition,
            "homotopy pullback: legs have different targets");
    const auto& A = f.source;
    const auto& B = g.source;
    const auto& C = f.target;
    std::set<int> degs = degree_union({&A, &B});
    for (int n : C.degrees()) degs.insert(n - 1);
    std::map<int, std::vector<Kind>> gens;
    for (int n : degs) gens[n] = concat({&A.kinds(n), &B.kinds(n), &C.kinds(n + 1)});
    std::set<int> ddegs = degs;
    for (int n : degs) ddegs.insert(n + 1);
    std::map<int, QMatrix> d;
    for (int n : ddegs) {
        const std::size_t ra = A.rank(n), rb = B.rank(n), rc = C.rank(n + 1);
        const std::size_t sa = A.rank(n - 1), sb = B.rank(n - 1), sc = C.rank(n);
        QMatrix m(sa + sb + sc, ra + rb + rc);
        place(m, 0, 0, A.d(n));
        place(m, sa, ra, B.d(n));
        place(m, sa + sb, 0, f.at(n));
        place(m, sa + sb, ra, -g.at(n));
        place(m, sa + sb, ra + rb, -C.d(n + 1));
        d[n] = std::move(m);
    }
    return ChainComplex(C.ring(), std::move(gens), std::move(d));
}

ChainMap pullback_projection(const ChainMap& f, const ChainMap& g, int which) {
    ChainComplex X = homotopy_pullback(f, g);
    const ChainComplex& tgt = which == 0 ? f.source : g.source;
    std::map<int, QMatrix> m;
    for (int n : X.degrees()) {
        QMatrix x(tgt.rank(n), X.rank(n));
        place(x, 0, which == 0 ? 0 : f.source.rank(n), QMatrix::identity(tgt.rank(n)));
        m[n] = std::move(x);
    }
    return ChainMap(X, tgt, std::move(m));
}

ChainComplex fibre(const ChainMap& f) { return homotopy_pullback(f, ChainMap::zero(ChainComplex(f.target.ring()), f.target)); }

ChainMap fibre_projection(const ChainMap& f) {
    return pullback_projection(f, ChainMap::zero(ChainComplex(f.target.ring()), f.target), 0);
}

ChainComplex base_change(const ChainComplex& c, const Ring& target) {
    std::map<Kind, Kind> km;
    for (Kind k : {Kind::F, Kind::D, Kind::P})
        if (level(k) <= level(c.ring().max_kind())) km[k] = map_kind(c.ring(), target, k);
    if (c.is_zero()) {
        require(has_morphism(c.ring(), target), ErrorCode::NoMorphism,
                "no declared ring morphism " + c.ring().name() + " -> " + target.name());
        return ChainComplex(target);
    }
    return retag(c, target, km);
}

ChainMap base_change(const ChainMap& f, const Ring& target) {
    return ChainMap(base_change(f.source, target), base_change(f.target, target), f.f);
}

QuasiIsoReport is_quasi_iso(const ChainMap& f) {
    QuasiIsoReport r;
    r.cone_homology = homology(cone(f));
    r.quasi_iso = r.cone_homology.empty();
    return r;
}

bool is_kinded_iso_matrix(const Ring& ring, const std::vector<Kind>& src, const std::vector<Kind>& dst,
                          const QMatrix& m) {
    if (src.size() != dst.size()) return false;
    if (!is_kinded_matrix(ring, src, dst, m)) return false;
    auto inv = inverse(m);
    return inv && is_kinded_matrix(ring, dst, src, *inv);
}

bool is_kinded_surjective(const Ring& ring, const std::vector<Kind>& src, const std::vector<Kind>& dst,
                          const QMatrix& m) {
    for (Kind k : {Kind::F, Kind::D, Kind::P}) {
        std::vector<std::size_t> rs, cs;
        for (std::size_t i = 0; i < dst.size(); ++i)
            if (dst[i] == k) rs.push_back(i);
        if (rs.empty()) continue;
        for (std::size_t j = 0; j < src.size(); ++j)
            if (src[j] == k) cs.push_back(j);
        QMatrix b = m.select(rs, cs);
        if (rank(b) != rs.size()) return false;
        if (k == Kind::F && !ring.lattice_is_field()) {
            // Onto the lattice iff every elementary divisor of the block is a lattice unit.
            Int den = common_denominator(b);
            for (const auto& e : smith_normal_form(to_integer(Rat(den) * b)).diagonal())
                if (!ring.is_lattice_unit(e)) return false;
        }
    }
    return true;
}

bool is_kinded_iso(const ChainMap& f) {
    if (!(f.source.ring() == f.target.ring())) return false;
    for (int n : f.degrees())
        if (!is_kinded_iso_matrix(f.source.ring(), f.source.kinds(n), f.target.kinds(n), f.at(n))) return false;
    return true;
}

bool is_rational_iso(const ChainMap& f) {
    for (int n : f.degrees()) {
        if (f.source.rank(n) != f.target.rank(n)) return false;
        if (!inverse(f.at(n))) return false;
    }
    return true;
}

std::optional<ChainMap> inverse(const ChainMap& f) {
    std::map<int, QMatrix> m;
    for (int n : f.degrees()) {
        if (f.source.rank(n) != f.target.rank(n)) return std::nullopt;
        auto inv = inverse(f.at(n));
        if (!inv) return std::nullopt;
        m[n] = *inv;
    }
    return ChainMap(f.target, f.source, std::move(m));
}

ChainComplex total_of_square(const ChainMap& a, const ChainMap& b, const ChainMap& c, const ChainMap& e,
                             const std::map<int, QMatrix>* homotopy) {
    const ChainComplex& X = a.source;
    for (int n : X.degrees()) {
        QMatrix diff = c.at(n) * a.at(n) - e.at(n) * b.at(n);
        if (homotopy) {
            auto h = [&](int k) {
                auto it = homotopy->find(k);
                return it == homotopy->end() ? QMatrix(c.target.rank(k + 1), X.rank(k)) : it->second;
            };
            diff = diff - (c.target.d(n + 1) * h(n) + h(n - 1) * X.d(n));
        }
        require(diff.is_zero(), ErrorCode::NonCommutingSquare, "square does not commute in degree " + std::to_string(n));
    }
    ChainComplex H = homotopy_pullback(c, e);
    std::map<int, QMatrix> phi;
    for (int n : X.degrees()) {
        QMatrix m(H.rank(n), X.rank(n));
        place(m, 0, 0, a.at(n));
        place(m, a.target.rank(n), 0, b.at(n));
        if (homotopy) {
            auto it = homotopy->find(n);
            if (it != homotopy->end()) place(m, a.target.rank(n) + b.target.rank(n), 0, it->second);
        }
        phi[n] = std::move(m);
    }
    return cone(ChainMap(X, H, std::move(phi)));
}

bool is_homotopy(const ChainMap& f, const ChainMap& g, const std::map<int, QMatrix>& h) {
    auto H = [&](int k) {
        auto it = h.find(k);
        return it == h.end() ? QMatrix(f.target.rank(k + 1), f.source.rank(k)) : it->second;
    };
    for (int n : f.degrees())
        if (f.at(n) - g.at(n) != f.target.d(n + 1) * H(n) + H(n - 1) * f.source.d(n)) return false;
    return true;
}

} // namespace fracture
