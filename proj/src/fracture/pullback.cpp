#include "fracture/fracture/pullback.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/core/linalg.hpp"

#include <set>

namespace fracture {

namespace {

std::vector<std::size_t> all_rows(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<std::size_t> coords(const std::vector<Kind>& ks, std::initializer_list<Kind> want) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (Kind k : want)
            if (ks[i] == k) v.push_back(i);
    std::sort(v.begin(), v.end());
    return v;
}

// Columns of M whose images under `proj` form a basis of proj(M).
std::vector<std::size_t> independent_columns(const QMatrix& projected) {
    QMatrix r = projected;
    return rref(RationalField{}, r);
}

// Saturated Z-lattice of the column space of B (rows = ambient coordinates).
IntMatrix saturated_lattice(const QMatrix& B) {
    const std::size_t a = B.rows();
    QMatrix cb = column_basis(B);
    if (cb.cols() == 0) return IntMatrix(a, 0);
    if (cb.cols() == a) return IntMatrix::identity(a);
    // colspace(B) = ker(Y^T), Y a basis of the orthogonal complement.
    QMatrix Y = kernel(cb.transpose());
    QMatrix Yt = Y.transpose();
    Int den = common_denominator(Yt);
    return integer_kernel(to_integer(Rat(den) * Yt));
}

std::set<int> degree_span(std::initializer_list<const ChainComplex*> cs) {
    std::set<int> s;
    for (auto* c : cs)
        for (int n : c->degrees()) s.insert(n);
    return s;
}

} // namespace

KindedBasis kinded_kernel_basis(const Ring& ring, const QMatrix& W, const std::vector<Kind>& ambient) {
    const std::size_t N = ambient.size();
    auto Fc = coords(ambient, {Kind::F});
    auto Dc = coords(ambient, {Kind::D});
    auto FDc = coords(ambient, {Kind::F, Kind::D});
    const auto cols = all_rows(W.cols());
    KindedBasis out{QMatrix(N, 0), {}};

    // F piece: lifts of a lattice basis of proj_F(W).
    QMatrix WF = W.select(Fc, cols);
    if (!Fc.empty() && rank(WF) > 0) {
        QMatrix lat;
        if (ring.lattice_is_field()) {
            lat = WF.select(all_rows(WF.rows()), independent_columns(WF));
        } else {
            lat = to_rational(saturated_lattice(WF));
        }
        auto c = solve(WF, lat);
        require(c.has_value(), ErrorCode::Precondition, "kernel lattice lift failed");
        QMatrix lifted = W * *c;
        out.basis = hcat(out.basis, lifted);
        out.kinds.insert(out.kinds.end(), lifted.cols(), Kind::F);
    }
    // D piece: W ∩ (D + P), a basis of its D projection.
    QMatrix CDP = kernel(WF);
    QMatrix WDP = W * CDP;
    QMatrix projD = WDP.select(Dc, all_rows(WDP.cols()));
    if (!Dc.empty() && WDP.cols() > 0) {
        auto pick = independent_columns(projD);
        QMatrix part = WDP.select(all_rows(N), pick);
        out.basis = hcat(out.basis, part);
        out.kinds.insert(out.kinds.end(), part.cols(), Kind::D);
    }
    // P piece: W ∩ P.
    QMatrix CP = kernel(W.select(FDc, cols));
    QMatrix WP = W * CP;
    if (WP.cols() > 0) {
        QMatrix part = column_basis(WP);
        out.basis = hcat(out.basis, part);
        out.kinds.insert(out.kinds.end(), part.cols(), Kind::P);
    }
    return out;
}

bool sum_map_surjective(const ChainMap& f, const ChainMap& g) {
    const Ring& ring = f.target.ring();
    for (int n : f.target.degrees()) {
        QMatrix m = hcat(f.at(n), g.at(n));
        std::vector<Kind> src = f.source.kinds(n);
        src.insert(src.end(), g.source.kinds(n).begin(), g.source.kinds(n).end());
        if (!is_kinded_surjective(ring, src, f.target.kinds(n), m)) return false;
    }
    return true;
}

PullbackResult kinded_pullback(const ChainMap& f, const ChainMap& g, PullbackHints hints) {
    require(f.source.ring() == g.source.ring() && f.target.ring() == g.target.ring() &&
                f.source.ring() == f.target.ring(),
            ErrorCode::Precondition, "pullback legs must live over one ring");
    const Ring& ring = f.source.ring();
    const ChainComplex& A = f.source;
    const ChainComplex& B = g.source;
    bool surjective = hints.surjective ? *hints.surjective : sum_map_surjective(f, g);

    if (!surjective) {
        PullbackResult r;
        r.strict = false;
        r.to_a = pullback_projection(f, g, 0);
        r.to_b = pullback_projection(f, g, 1);
        r.object = r.to_a.source;
        for (int n : r.object.degrees()) {
            QMatrix h(f.target.rank(n + 1), r.object.rank(n));
            place(h, 0, A.rank(n) + B.rank(n), QMatrix::identity(f.target.rank(n + 1)));
            r.homotopy[n] = std::move(h);
        }
        return r;
    }

    bool g_iso = hints.g_iso ? *hints.g_iso : is_kinded_iso(g);
    bool f_iso = hints.f_iso ? *hints.f_iso : is_kinded_iso(f);
    auto degs = degree_span({&A, &B});

    std::map<int, QMatrix> basis;
    std::map<int, std::vector<Kind>> kinds;
    if (g_iso || f_iso) {
        // Canonical basis: the pullback is identified with the other leg's source.
        auto inv = inverse(g_iso ? g : f);
        require(inv.has_value(), ErrorCode::Precondition, "iso leg is not invertible");
        const ChainComplex& keep = g_iso ? A : B;
        for (int n : degs) {
            QMatrix other = inv->at(n) * (g_iso ? f.at(n) : g.at(n));
            QMatrix I = QMatrix::identity(keep.rank(n));
            basis[n] = g_iso ? vcat(I, other) : vcat(other, I);
            kinds[n] = keep.kinds(n);
        }
    } else {
        for (int n : degs) {
            QMatrix M = hcat(f.at(n), -g.at(n));
            std::vector<Kind> amb = A.kinds(n);
            amb.insert(amb.end(), B.kinds(n).begin(), B.kinds(n).end());
            auto kb = kinded_kernel_basis(ring, kernel(M), amb);
            basis[n] = kb.basis;
            kinds[n] = kb.kinds;
        }
    }

    auto basis_at = [&](int n) {
        auto it = basis.find(n);
        return it == basis.end() ? QMatrix(A.rank(n) + B.rank(n), 0) : it->second;
    };
    std::map<int, QMatrix> d;
    for (int n : degs) {
        QMatrix dn = dsum(A.d(n), B.d(n)) * basis_at(n);
        auto x = solve(basis_at(n - 1), dn);
        require(x.has_value(), ErrorCode::Precondition, "pullback differential does not restrict");
        d[n] = *x;
    }
    PullbackResult r;
    r.object = ChainComplex(ring, kinds, d);
    std::map<int, QMatrix> pa, pb;
    for (int n : degs) {
        QMatrix k = basis_at(n);
        std::vector<std::size_t> ra(A.rank(n)), rb(B.rank(n));
        for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = i;
        for (std::size_t i = 0; i < rb.size(); ++i) rb[i] = A.rank(n) + i;
        pa[n] = k.select(ra, all_rows(k.cols()));
        pb[n] = k.select(rb, all_rows(k.cols()));
    }
    r.to_a = ChainMap(r.object, A, pa);
    r.to_b = ChainMap(r.object, B, pb);
    return r;
}

PushoutResult homotopy_pushout(const ChainMap& f, const ChainMap& g) {
    require(f.source.generators() == g.source.generators(), ErrorCode::Precondition, "pushout legs differ in source");
    const ChainComplex& A = f.source;
    const ChainComplex& B = f.target;
    const ChainComplex& C = g.target;
    require(B.ring() == C.ring() && A.ring() == B.ring(), ErrorCode::Precondition, "pushout legs must live over one ring");
    std::set<int> degs = degree_span({&B, &C});
    for (int n : A.degrees()) degs.insert(n + 1);
    std::map<int, std::vector<Kind>> gens;
    for (int n : degs) {
        auto& v = gens[n];
        v = B.kinds(n);
        v.insert(v.end(), C.kinds(n).begin(), C.kinds(n).end());
        v.insert(v.end(), A.kinds(n - 1).begin(), A.kinds(n - 1).end());
    }
    std::set<int> ddegs = degs;
    for (int n : degs) ddegs.insert(n + 1);
    std::map<int, QMatrix> d;
    for (int n : ddegs) {
        QMatrix m(B.rank(n - 1) + C.rank(n - 1) + A.rank(n - 2), B.rank(n) + C.rank(n) + A.rank(n - 1));
        place(m, 0, 0, B.d(n));
        place(m, 0, B.rank(n) + C.rank(n), f.at(n - 1));
        place(m, B.rank(n - 1), B.rank(n), C.d(n));
        place(m, B.rank(n - 1), B.rank(n) + C.rank(n), -g.at(n - 1));
        place(m, B.rank(n - 1) + C.rank(n - 1), B.rank(n) + C.rank(n), -A.d(n - 1));
        d[n] = std::move(m);
    }
    PushoutResult r;
    r.object = ChainComplex(B.ring(), std::move(gens), std::move(d));
    std::map<int, QMatrix> ib, ic;
    for (int n : B.degrees()) {
        QMatrix x(r.object.rank(n), B.rank(n));
        place(x, 0, 0, QMatrix::identity(B.rank(n)));
        ib[n] = std::move(x);
    }
    for (int n : C.degrees()) {
        QMatrix x(r.object.rank(n), C.rank(n));
        place(x, B.rank(n), 0, QMatrix::identity(C.rank(n)));
        ic[n] = std::move(x);
    }
    r.from_b = ChainMap(B, r.object, ib);
    r.from_c = ChainMap(C, r.object, ic);
    for (int n : A.degrees()) {
        QMatrix h(r.object.rank(n + 1), A.rank(n));
        place(h, B.rank(n + 1) + C.rank(n + 1), 0, QMatrix::identity(A.rank(n)));
        r.homotopy[n] = std::move(h);
    }
    return r;
}

} // namespace fracture
