#include "fracture/fracture/gamma.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/fracture/pullback.hpp"

namespace fracture {

namespace {

Kind all_f(Kind) { return Kind::F; }

ChainComplex flat(const ChainComplex& c) { return retag(c, Ring::rationals(), all_f); }

std::map<int, QMatrix> nonzero(std::map<int, QMatrix> m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
    return m;
}

std::map<int, QMatrix> scaled(const std::map<int, QMatrix>& m, const Rat& s) {
    std::map<int, QMatrix> out;
    for (const auto& [n, x] : m) out[n] = s * x;
    return nonzero(std::move(out));
}

// Rows [off, off + rows(n)) of every matrix of a degreewise family.
std::map<int, QMatrix> row_block(const std::map<int, QMatrix>& m, const std::map<int, std::size_t>& off,
                                 const ChainComplex& piece, int shift) {
    std::map<int, QMatrix> out;
    for (const auto& [n, x] : m) {
        std::size_t r = piece.rank(n + shift);
        auto it = off.find(n + shift);
        std::size_t o = it == off.end() ? 0 : it->second;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < r; ++i) rows.push_back(o + i);
        for (std::size_t j = 0; j < x.cols(); ++j) cols.push_back(j);
        out[n] = x.select(rows, cols);
    }
    return out;
}

std::map<int, QMatrix> compose_right(const std::map<int, QMatrix>& h, const ChainMap& g) {
    std::map<int, QMatrix> out;
    for (const auto& [n, x] : h) out[n] = x * g.at(n);
    return nonzero(std::move(out));
}

Placewise collect(Land land, const Support& S, const std::vector<ChainComplex>& at) {
    Placewise x{land, S, at};
    x.validate();
    return x;
}

} // namespace

GammaResult gamma_qc(const CospanDiagram& d) {
    d.validate();
    const std::size_t P = d.splice.places();
    Placewise hn = d.h_nub();
    Placewise jv = jstar(d.vertex, d.S);

    // Joint pullback of V -> (+) Q_i <- (+) h(N)_i, everything viewed as rational.
    ChainComplex B = ChainComplex(Ring::rationals()), C = ChainComplex(Ring::rationals());
    std::vector<std::map<int, std::size_t>> b_off(P), c_off(P);
    ChainMap g = ChainMap::identity(B);
    for (std::size_t i = 0; i < P; ++i) {
        for (int n : hn.at[i].degrees()) b_off[i][n] = B.rank(n);
        for (int n : d.splice.at[i].degrees()) c_off[i][n] = C.rank(n);
        ChainMap gi(flat(hn.at[i]), flat(d.splice.at[i]), d.horizontal[i].f);
        g = i == 0 ? gi : direct_sum(g, gi);
        B = g.source;
        C = g.target;
    }
    ChainComplex V = d.vertex;
    std::map<int, QMatrix> fm;
    for (int n : V.degrees()) {
        QMatrix col(0, V.rank(n));
        for (std::size_t i = 0; i < P; ++i) col = vcat(col, d.vertical[i].at(n));
        fm[n] = col;
    }
    ChainMap f(V, C, fm);

    bool surjective = true, g_iso = true;
    for (std::size_t i = 0; i < P; ++i) {
        g_iso = g_iso && is_kinded_iso(d.horizontal[i]);
        const ChainComplex& Q = d.splice.at[i];
        for (int n : Q.degrees()) {
            std::vector<Kind> src = jv.at[i].kinds(n);
            const auto& hk = hn.at[i].kinds(n);
            src.insert(src.end(), hk.begin(), hk.end());
            QMatrix m = hcat(d.vertical[i].at(n), d.horizontal[i].at(n));
            surjective = surjective && is_kinded_surjective(Q.ring(), src, Q.kinds(n), m);
        }
    }
    surjective = surjective && sum_map_surjective(f, g);
    PullbackResult pb = kinded_pullback(f, g, {surjective, false, g_iso});
    const ChainComplex& Vp = pb.object;

    GammaResult r;
    Placewise jvp = jstar(Vp, d.S);
    std::vector<std::map<int, QMatrix>> vert, hor, hv;
    for (std::size_t i = 0; i < P; ++i) {
        vert.push_back(row_block(pb.to_b.f, b_off[i], hn.at[i], 0));
        hor.push_back(ChainMap::identity(hn.at[i]).f);
        hv.push_back(scaled(row_block(pb.homotopy, c_off[i], d.splice.at[i], 1), Rat(-1)));
    }
    r.diagram = make_diagram(d.flavor, d.S, Vp, d.nub, hn, vert, hor);
    r.counit.vertex = pb.to_a;
    r.counit.nub = identity(d.nub);
    for (std::size_t i = 0; i < P; ++i) r.counit.splice.at.push_back(d.horizontal[i]);
    bool any = false;
    for (const auto& h : hv) any = any || !h.empty();
    if (any) r.counit.vertical_homotopy = hv;
    return r;
}

GammaResult gamma_e(const CospanDiagram& d) {
    d.validate();
    require(d.flavor == Flavor::Adelic, ErrorCode::Precondition, "gamma_e expects an adelic-shaped diagram");
    const std::size_t P = d.splice.places();
    Placewise sq = splice_to_nub(d.splice);
    Placewise sjv = splice_to_nub(jstar(d.vertex, d.S));
    std::vector<ChainComplex> np;
    std::vector<ChainMap> pa, pbm;
    std::vector<std::map<int, QMatrix>> hh;
    for (std::size_t i = 0; i < P; ++i) {
        ChainMap f(d.nub.at[i], sq.at[i], d.horizontal[i].f);
        ChainMap g(sjv.at[i], sq.at[i], d.vertical[i].f);
        PullbackResult pb = kinded_pullback(f, g, {std::nullopt, std::nullopt, is_kinded_iso(d.vertical[i])});
        np.push_back(pb.object);
        pa.push_back(pb.to_a);
        pbm.push_back(pb.to_b);
        hh.push_back(scaled(pb.homotopy, Rat(-1)));
    }
    Placewise Np = collect(Land::Nub, d.S, np);
    Placewise jv = jstar(d.vertex, d.S);
    std::vector<std::map<int, QMatrix>> vert, hor;
    for (std::size_t i = 0; i < P; ++i) {
        vert.push_back(ChainMap::identity(jv.at[i]).f);
        hor.push_back(pbm[i].f);
    }
    GammaResult r;
    r.diagram = make_diagram(Flavor::Adelic, d.S, d.vertex, Np, jv, vert, hor);
    r.counit.vertex = ChainMap::identity(d.vertex);
    for (std::size_t i = 0; i < P; ++i) {
        r.counit.nub.at.push_back(pa[i]);
        r.counit.splice.at.push_back(d.vertical[i]);
    }
    bool any = false;
    for (const auto& h : hh) any = any || !h.empty();
    if (any) r.counit.horizontal_homotopy = hh;
    return r;
}

GammaResult gamma_qce(const CospanDiagram& d) {
    // Gamma_e can leave a torsion nub whose L_g is acyclic but nonzero over a
    // smaller splice; a second pass makes the vertex absorb it.
    GammaResult r{d, identity(d)};
    for (int pass = 0; pass < 3; ++pass) {
        GammaResult a = gamma_qc(r.diagram);
        GammaResult b = gamma_e(a.diagram);
        r = {b.diagram, compose(r.counit, compose(a.counit, b.counit, a.diagram), r.diagram)};
        if (check_qc(r.diagram) && check_e(r.diagram)) break;
    }
    return r;
}

GammaResult gamma_ie(const CospanDiagram& d) {
    d.validate();
    require(d.nub.land == Land::Family, ErrorCode::Precondition, "gamma_ie expects a separated-shaped diagram");
    const std::size_t P = d.splice.places();
    Placewise pm = pi(d.nub);
    Placewise sq = splice_to_nub(d.splice);
    Placewise jv = jstar(d.vertex, d.S);
    Placewise sjv = splice_to_nub(jv);

    std::vector<ChainComplex> mp;
    std::vector<PullbackResult> pbs;
    for (std::size_t i = 0; i < P; ++i) {
        ChainMap f(pm.at[i], sq.at[i], d.horizontal[i].f);
        ChainMap g(sjv.at[i], sq.at[i], d.vertical[i].f);
        pbs.push_back(kinded_pullback(f, g));
        mp.push_back(pbs.back().object);
    }
    Placewise Mp = collect(Land::Nub, d.S, mp);
    Placewise fam = sigma(Mp);
    Placewise lm = lg(Mp);
    Placewise lps = lg(pi(fam));
    Placewise hn = d.h_nub();

    std::vector<ChainComplex> splice;
    std::vector<std::map<int, QMatrix>> vert, hor, hv, hh;
    GammaResult r;
    r.counit.vertex = ChainMap::identity(d.vertex);
    for (std::size_t i = 0; i < P; ++i) {
        const PullbackResult& pb = pbs[i];
        ChainMap lambda(lm.at[i], jv.at[i], pb.to_b.f);
        ChainMap eta(lm.at[i], lps.at[i], ChainMap::identity(Mp.at[i]).f);
        r.counit.nub.at.emplace_back(fam.at[i], d.nub.at[i], pb.to_a.f);
        std::map<int, QMatrix> beta_pa = compose(d.horizontal[i], ChainMap(lps.at[i], hn.at[i], pb.to_a.f)).f;
        if (is_kinded_iso(lambda)) {
            ChainMap inv = *inverse(lambda);
            splice.push_back(lps.at[i]);
            vert.push_back(compose(eta, inv).f);
            hor.push_back(ChainMap::identity(lps.at[i]).f);
            r.counit.splice.at.emplace_back(lps.at[i], d.splice.at[i], beta_pa);
            hv.push_back(compose_right(pb.homotopy, inv));
            hh.emplace_back();
        } else if (is_kinded_iso(eta)) {
            ChainMap inv = *inverse(eta);
            splice.push_back(jv.at[i]);
            vert.push_back(ChainMap::identity(jv.at[i]).f);
            hor.push_back(compose(lambda, inv).f);
            r.counit.splice.at.push_back(d.vertical[i]);
            hv.emplace_back();
            hh.push_back(scaled(compose_right(pb.homotopy, inv), Rat(-1)));
        } else {
            PushoutResult po = homotopy_pushout(lambda, eta);
            splice.push_back(po.object);
            vert.push_back(po.from_b.f);
            hor.push_back(po.from_c.f);
            std::map<int, QMatrix> psi;
            for (int n : po.object.degrees()) {
                QMatrix a = d.vertical[i].at(n);
                QMatrix b = beta_pa.count(n) ? beta_pa.at(n) : QMatrix(d.splice.at[i].rank(n), lps.at[i].rank(n));
                QMatrix h = pb.homotopy.count(n - 1) ? pb.homotopy.at(n - 1)
                                                     : QMatrix(d.splice.at[i].rank(n), Mp.at[i].rank(n - 1));
                psi[n] = hcat(hcat(a, b), -h);
            }
            r.counit.splice.at.emplace_back(po.object, d.splice.at[i], psi);
            hv.emplace_back();
            hh.emplace_back();
        }
    }
    Placewise Pp = collect(Land::Splice, d.S, splice);
    r.diagram = make_diagram(d.flavor, d.S, d.vertex, fam, Pp, vert, hor);
    auto keep = [](std::vector<std::map<int, QMatrix>>& h) {
        for (const auto& x : h)
            if (!x.empty()) return;
        h.clear();
    };
    keep(hv);
    keep(hh);
    r.counit.vertical_homotopy = hv;
    r.counit.horizontal_homotopy = hh;
    return r;
}

} // namespace fracture
