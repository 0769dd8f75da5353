#include "fracture/fracture/reconstruct.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/fracture/build.hpp"

#include <set>

namespace fracture {

namespace {

Kind keep_f(Kind k) { return k == Kind::F ? Kind::F : Kind::D; }
Kind all_d(Kind) { return Kind::D; }

struct LocalSquare {
    ChainMap vertical, horizontal; // V -> Q, N -> Q over the reconstruction ring
};

LocalSquare local_square(const CospanDiagram& d, std::size_t i, bool with_vertex) {
    Ring R = reconstruction_ring(d.S, i);
    Placewise an = d.assembled_nub();
    ChainComplex q = retag(d.splice.at[i], R, all_d);
    ChainComplex n = retag(an.at[i], R, keep_f);
    LocalSquare s;
    if (with_vertex)
        s.vertical = ChainMap(retag(d.vertex, R, all_d), q, d.vertical[i].f);
    else
        s.vertical = ChainMap::zero(ChainComplex(R), q);
    s.horizontal = ChainMap(n, q, d.horizontal[i].f);
    return s;
}

ChainComplex glue(const CospanDiagram& d, bool with_vertex) {
    std::vector<GradedGroup> hs;
    for (std::size_t i = 0; i < d.splice.places(); ++i) hs.push_back(homology(local_fibre(d, i, with_vertex)));
    std::set<int> degs;
    for (const auto& h : hs)
        for (const auto& [n, g] : h) degs.insert(n);
    const GradedGroup& gen = hs.back();
    std::map<int, LocalGroup> out;
    for (int n : degs) {
        LocalGroup ref = gen.count(n) ? gen.at(n) : LocalGroup{};
        std::vector<Int> orders(ref.torsion.begin(), ref.torsion.end());
        for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
            LocalGroup g = hs[i].count(n) ? hs[i].at(n) : LocalGroup{};
            bool agree = g.free_rank == ref.free_rank && g.divisible_count(Kind::D) == ref.divisible_count(Kind::D) &&
                         g.quotient_count(Kind::D, Kind::F) == ref.quotient_count(Kind::D, Kind::F);
            require(agree, ErrorCode::ReassemblyFailure,
                    "local data do not glue at " + place_label(d.S, i) + " in degree " + std::to_string(n));
            orders.insert(orders.end(), g.torsion.begin(), g.torsion.end());
        }
        LocalGroup x;
        x.free_rank = ref.free_rank;
        x.torsion = make_group(0, orders).invariant_factors;
        if (long a = ref.divisible_count(Kind::D)) x.divisible[Kind::D] = a;
        if (long b = ref.quotient_count(Kind::D, Kind::F)) x.quotients[{Kind::D, Kind::F}] = b;
        if (!x.is_zero()) out[n] = x;
    }
    return minimal_model(out);
}

void check_rank_match(const ChainComplex& x, const ChainComplex& y, const char* what) {
    for (int n : x.degrees())
        require(x.rank(n) == y.rank(n), ErrorCode::Input, std::string(what) + " is not the canonical image of X");
    for (int n : y.degrees())
        require(x.rank(n) == y.rank(n), ErrorCode::Input, std::string(what) + " is not the canonical image of X");
}

} // namespace

std::string place_label(const Support& S, std::size_t place) {
    return place == S.size() ? "generic" : "p=" + std::to_string(S[place]);
}

ChainComplex local_fibre(const CospanDiagram& d, std::size_t place, bool with_vertex) {
    LocalSquare s = local_square(d, place, with_vertex);
    return homotopy_pullback(s.vertical, s.horizontal);
}

ChainComplex minimal_model(const std::map<int, LocalGroup>& h) {
    ChainComplex out(Ring::integers());
    auto piece = [&](std::map<int, std::vector<Kind>> gens, std::map<int, QMatrix> d) {
        out = direct_sum(out, ChainComplex(Ring::integers(), std::move(gens), std::move(d)));
    };
    for (const auto& [n, g] : h) {
        for (long i = 0; i < g.free_rank; ++i) piece({{n, {Kind::F}}}, {});
        for (const Int& t : g.torsion) piece({{n, {Kind::F}}, {n + 1, {Kind::F}}}, {{n + 1, QMatrix(1, 1, {Rat(t)})}});
        for (long i = 0; i < g.divisible_count(Kind::D); ++i) piece({{n, {Kind::D}}}, {});
        for (long i = 0; i < g.quotient_count(Kind::D, Kind::F); ++i)
            piece({{n, {Kind::D}}, {n + 1, {Kind::F}}}, {{n + 1, QMatrix(1, 1, {Rat(1)})}});
        require(g.divisible_count(Kind::P) == 0 && g.quotients.size() <= 1 &&
                    (g.quotients.empty() || g.quotients.begin()->first == std::make_pair(Kind::D, Kind::F)),
                ErrorCode::ReassemblyFailure, "homology in degree " + std::to_string(n) + " has no integral model");
    }
    return out;
}

ChainComplex reconstruct(const CospanDiagram& d) { return glue(d, true); }

ChainComplex horizontal_fibre(const CospanDiagram& d) { return glue(d, false); }

bool quasi_isomorphic(const ChainComplex& a, const ChainComplex& b) { return homology(a) == homology(b); }

PullbackReport verify_pullback(const CospanDiagram& d, const ChainComplex& x) {
    require(x.ring().tag == RingTag::IntegersZ, ErrorCode::Input, "verify_pullback expects X over Z");
    Placewise an = d.assembled_nub();
    // A zero corner receives the zero leg; any other corner must be the canonical image.
    if (!d.vertex.is_zero()) check_rank_match(x, d.vertex, "vertex");
    const bool project = d.flavor == Flavor::Complete;
    PullbackReport r;
    for (std::size_t i = 0; i < d.splice.places(); ++i) {
        Ring R = reconstruction_ring(d.S, i);
        LocalSquare s = local_square(d, i, true);
        ChainComplex xr = retag(x, R, keep_f);
        std::map<int, QMatrix> a, b;
        for (int n : x.degrees()) {
            a[n] = d.vertex.is_zero() ? QMatrix(0, x.rank(n)) : QMatrix::identity(x.rank(n));
            if (an.at[i].is_zero()) {
                b[n] = QMatrix(0, x.rank(n));
            } else if (project) {
                auto fs = x.indices(n, Kind::F);
                require(fs.size() == an.at[i].rank(n), ErrorCode::Input, "nub is not the canonical image of X");
                QMatrix m(fs.size(), x.rank(n));
                for (std::size_t k = 0; k < fs.size(); ++k) m(k, fs[k]) = 1;
                b[n] = std::move(m);
            } else {
                require(x.rank(n) == an.at[i].rank(n), ErrorCode::Input, "nub is not the canonical image of X");
                b[n] = QMatrix::identity(x.rank(n));
            }
        }
        ChainMap va(xr, s.vertical.source, a), nb(xr, s.horizontal.source, b);
        const std::string label = place_label(d.S, i);
        // A square that fails to commute has no MV sequence: inexact where it fails.
        std::set<int> broken;
        for (int n : x.degrees())
            if (s.vertical.at(n) * va.at(n) != s.horizontal.at(n) * nb.at(n)) broken.insert(n);
        if (!broken.empty()) {
            r.local_acyclic[label] = r.rational[label] = false;
            if (i < d.S.size()) r.mod_p[label] = false;
            for (int n = x.lo(); n <= x.hi(); ++n) r.verdicts.push_back({label, n, broken.count(n) == 0});
            r.overall = false;
            continue;
        }
        ChainComplex tot = total_of_square(va, nb, s.vertical, s.horizontal);
        GradedGroup h = homology(tot);
        bool acyclic = h.empty();
        bool rational = rational_betti(tot).empty();
        bool modp = i == d.S.size() || mod_p_betti_of_lattice(tot, d.S[i]).empty();
        r.local_acyclic[label] = acyclic;
        r.rational[label] = rational;
        if (i < d.S.size()) r.mod_p[label] = modp;
        int lo = std::min(x.is_zero() ? 0 : x.lo(), tot.is_zero() ? 0 : tot.lo());
        int hi = std::max(x.is_zero() ? 0 : x.hi(), tot.is_zero() ? 0 : tot.hi());
        for (int n = lo; n <= hi; ++n) r.verdicts.push_back({label, n, h.count(n) == 0});
        r.overall = r.overall && acyclic && rational && modp;
    }
    return r;
}

CofibreReport cofibre_sequence(const CospanDiagram& d) {
    require(check_qc(d) && check_e(d), ErrorCode::Precondition, "cofibre sequence needs a qce diagram");
    const std::size_t P = d.splice.places();
    Placewise jv = jstar(d.vertex, d.S);
    Placewise ev = splice_to_nub(jv);
    Placewise lgn = splice_to_nub(d.h_nub());
    CofibreReport r;
    // Vertex and splice: 0 -> V -> V and 0 -> Q -> j*V.
    r.vertex = is_quasi_iso(ChainMap::identity(d.vertex)).quasi_iso;
    for (std::size_t i = 0; i < P; ++i) {
        auto ainv = inverse(d.vertical[i]);
        require(ainv.has_value(), ErrorCode::Precondition, "vertical witness is not invertible");
        r.splice = r.splice && is_quasi_iso(*ainv).quasi_iso;

        // Nub: N' = fib(N -> L_g N) -> N -> e(V)'s nub, null via H = a^-1 b h.
        const ChainComplex& N = d.nub.at[i];
        ChainMap iota(N, lgn.at[i], ChainMap::identity(N).f);
        ChainComplex Np = fibre(iota);
        ChainMap p = fibre_projection(iota);
        ChainMap g(N, ev.at[i], compose(*ainv, d.horizontal[i]).f);
        std::map<int, QMatrix> H;
        for (int n : Np.degrees()) {
            QMatrix h(N.rank(n + 1), Np.rank(n));
            place(h, 0, N.rank(n), QMatrix::identity(N.rank(n + 1)));
            H[n] = g.at(n + 1) * h;
        }
        ChainMap gf = compose(g, p);
        r.composite_null = r.composite_null && is_homotopy(gf, ChainMap::zero(Np, ev.at[i]), H);
        ChainComplex cn = cone(p);
        std::map<int, QMatrix> psi;
        for (int n : cn.degrees()) {
            QMatrix h = H.count(n - 1) ? H.at(n - 1) : QMatrix(ev.at[i].rank(n), Np.rank(n - 1));
            psi[n] = hcat(g.at(n), h);
        }
        r.nub = r.nub && is_quasi_iso(ChainMap(cn, ev.at[i], psi)).quasi_iso;
        // f(N') exists: L_g N' is rationally acyclic.
        r.nub = r.nub && rational_betti(Np).empty();
    }
    return r;
}

} // namespace fracture
