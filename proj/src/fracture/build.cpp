#include "fracture/fracture/build.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/core/snf.hpp"
#include "fracture/fracture/convert.hpp"

namespace fracture {

namespace {

std::vector<std::map<int, QMatrix>> identities(const Placewise& x) {
    std::vector<std::map<int, QMatrix>> out;
    for (const auto& c : x.at) out.push_back(ChainMap::identity(c).f);
    return out;
}

Kind all_f(Kind) { return Kind::F; }

} // namespace

Support minimal_support(const ChainComplex& x) {
    Support S;
    for (const auto& [n, m] : x.differentials()) {
        QMatrix b = m.select(x.indices(n - 1, Kind::F), x.indices(n, Kind::F));
        if (b.rows() == 0 || b.cols() == 0) continue;
        Int den = common_denominator(b);
        IntMatrix z = to_integer(Rat(den) * b);
        for (long p : prime_divisors(den)) S.push_back(p);
        for (const Int& e : smith_normal_form(z).diagonal())
            if (e != 0)
                for (long p : prime_divisors(e)) S.push_back(p);
    }
    return normalize_support(S);
}

CospanDiagram build_adelic(const ChainComplex& x, const Support& S0) {
    require(x.ring().tag == RingTag::IntegersZ, ErrorCode::Input, "build_adelic expects a complex over Z");
    x.validate();
    Support S = support_union(normalize_support(S0), minimal_support(x));
    if (S.empty()) S = {2};
    ChainComplex v = retag(x, Ring::rationals(), all_f);
    Placewise n = complete(x, S);
    Placewise q = lg(n);
    return make_diagram(Flavor::Adelic, S, v, n, q, identities(q), identities(q));
}

CospanDiagram make_e(const ChainComplex& w, const Support& S) {
    require(w.ring().tag == RingTag::RationalsQ, ErrorCode::Input, "e(W) expects a rational complex");
    Placewise q = jstar(w, S);
    Placewise n = splice_to_nub(q);
    return make_diagram(Flavor::Adelic, S, w, n, q, identities(q), identities(q));
}

CospanDiagram make_f(const Placewise& nub) {
    require(nub.land == Land::Nub, ErrorCode::Input, "f(N) expects a nub");
    Placewise q = lg(nub);
    for (const auto& c : q.at)
        require(rational_betti(c).empty(), ErrorCode::NonTorsion, "f(N) needs L_g N to be acyclic");
    // Weakly qc: L_g N -> 0 is a quasi-isomorphism.
    Placewise zero = Placewise::zero(Land::Splice, nub.S);
    std::vector<std::map<int, QMatrix>> none(nub.places());
    return make_diagram(Flavor::Adelic, nub.S, ChainComplex(Ring::rationals()), nub, zero, none, none);
}

CospanDiagram build(const ChainComplex& x, const Support& S, Flavor flavor) {
    CospanDiagram d = build_adelic(x, S);
    switch (flavor) {
    case Flavor::Adelic: return d;
    case Flavor::Separated: return to_separated(d);
    case Flavor::Complete: return to_complete(d);
    }
    return d;
}

} // namespace fracture
