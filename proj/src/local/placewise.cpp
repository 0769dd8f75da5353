#include "fracture/local/placewise.hpp"

#include "fracture/core/errors.hpp"

namespace fracture {

const char* land_name(Land l) {
    switch (l) {
    case Land::Nub: return "nub";
    case Land::Family: return "family";
    case Land::Splice: return "splice";
    }
    return "?";
}

Ring Placewise::ring_at(Land land, const Support& S, std::size_t place) {
    const bool gen = place == S.size();
    switch (land) {
    case Land::Nub: return gen ? Ring::profinite_nub(S) : Ring::padic_integers(S[place]);
    case Land::Family: return gen ? Ring::profinite_family(S) : Ring::padic_integers(S[place]);
    case Land::Splice: return gen ? Ring::finite_adeles(S) : Ring::padic_numbers(S[place]);
    }
    return Ring::integers();
}

Placewise Placewise::zero(Land land, const Support& S) {
    Placewise x{land, S, {}};
    for (std::size_t i = 0; i <= S.size(); ++i) x.at.emplace_back(ring_at(land, S, i));
    return x;
}

bool Placewise::is_zero() const {
    for (const auto& c : at)
        if (!c.is_zero()) return false;
    return true;
}

void Placewise::validate() const {
    require(at.size() == places(), ErrorCode::Input, std::string(land_name(land)) + ": wrong number of places");
    for (std::size_t i = 0; i < at.size(); ++i)
        require(at[i].ring() == ring(i), ErrorCode::Input,
                std::string(land_name(land)) + ": component ring mismatch at place " + std::to_string(i));
}

namespace {

Placewise assemble(const std::vector<ChainMap>& at, bool source) {
    require(!at.empty(), ErrorCode::Precondition, "empty placewise map");
    const ChainComplex& g = source ? at.back().source : at.back().target;
    Placewise x;
    x.S = g.ring().S;
    switch (g.ring().tag) {
    case RingTag::ProfiniteNub: x.land = Land::Nub; break;
    case RingTag::ProfiniteFamily: x.land = Land::Family; break;
    default: x.land = Land::Splice; break;
    }
    for (const auto& m : at) x.at.push_back(source ? m.source : m.target);
    return x;
}

} // namespace

Placewise PlacewiseMap::source() const { return assemble(at, true); }
Placewise PlacewiseMap::target() const { return assemble(at, false); }

PlacewiseMap identity(const Placewise& x) {
    PlacewiseMap f;
    for (const auto& c : x.at) f.at.push_back(ChainMap::identity(c));
    return f;
}

PlacewiseMap compose(const PlacewiseMap& g, const PlacewiseMap& f) {
    require(g.at.size() == f.at.size(), ErrorCode::Precondition, "placewise maps have different place counts");
    PlacewiseMap h;
    for (std::size_t i = 0; i < f.at.size(); ++i) h.at.push_back(compose(g.at[i], f.at[i]));
    return h;
}

bool is_kinded_iso(const PlacewiseMap& f) {
    for (const auto& m : f.at)
        if (!is_kinded_iso(m)) return false;
    return true;
}

bool is_rational_iso(const PlacewiseMap& f) {
    for (const auto& m : f.at)
        if (!is_rational_iso(m)) return false;
    return true;
}

bool is_quasi_iso(const PlacewiseMap& f) {
    for (const auto& m : f.at)
        if (!is_quasi_iso(m).quasi_iso) return false;
    return true;
}

bool is_rational_quasi_iso(const PlacewiseMap& f) {
    for (const auto& m : f.at)
        if (!rational_betti(cone(m)).empty()) return false;
    return true;
}

ChainComplex rationalize(const ChainComplex& c) { return base_change(c, Ring::rationals()); }

ChainComplex complete_at(const ChainComplex& c, long p) { return base_change(c, Ring::padic_integers(p)); }

Placewise complete(const ChainComplex& x, const Support& S) {
    Placewise n{Land::Nub, S, {}};
    for (std::size_t i = 0; i <= S.size(); ++i) n.at.push_back(base_change(x, n.ring(i)));
    return n;
}

Ring reconstruction_ring(const Support& S, std::size_t place) {
    return place == S.size() ? Ring::s_integers(S) : Ring::padic_integers(S[place]);
}

Placewise localize(const ChainComplex& x, const Support& S) {
    Placewise n{Land::Nub, S, {}};
    for (std::size_t i = 0; i <= S.size(); ++i) n.at.push_back(base_change(x, reconstruction_ring(S, i)));
    return n;
}

namespace {

Kind lg_kind(Kind k) { return k == Kind::P ? Kind::D : Kind::F; }
Kind to_f(Kind) { return Kind::F; }
Kind splice_nub_kind(Kind k) { return k == Kind::F ? Kind::D : Kind::P; }
Kind sigma_kind(Kind k) { return k == Kind::F ? Kind::F : Kind::D; }
Kind pi_kind(Kind k) { return k == Kind::F ? Kind::F : Kind::P; }

Placewise map_places(const Placewise& x, Land land, Kind (*prime_kind)(Kind), Kind (*generic_kind)(Kind)) {
    Placewise y{land, x.S, {}};
    for (std::size_t i = 0; i < x.places(); ++i)
        y.at.push_back(retag(x.at[i], y.ring(i), i == x.generic_index() ? generic_kind : prime_kind));
    return y;
}

Kind same(Kind k) { return k; }

PlacewiseMap map_maps(const PlacewiseMap& f, Placewise (*functor)(const Placewise&)) {
    Placewise s = functor(f.source()), t = functor(f.target());
    PlacewiseMap g;
    for (std::size_t i = 0; i < f.at.size(); ++i) g.at.emplace_back(s.at[i], t.at[i], f.at[i].f);
    return g;
}

} // namespace

Placewise lg(const Placewise& n) {
    if (n.land == Land::Family) return lg(pi(n));
    require(n.land == Land::Nub, ErrorCode::Precondition, "L_g expects a nub or a family");
    return map_places(n, Land::Splice, to_f, lg_kind);
}

PlacewiseMap lg(const PlacewiseMap& f) { return map_maps(f, static_cast<Placewise (*)(const Placewise&)>(lg)); }

Placewise jstar(const ChainComplex& v, const Support& S) {
    require(v.ring().tag == RingTag::RationalsQ, ErrorCode::Precondition, "j_* expects a rational complex");
    Placewise q{Land::Splice, S, {}};
    for (std::size_t i = 0; i <= S.size(); ++i) q.at.push_back(retag(v, q.ring(i), to_f));
    return q;
}

Placewise splice_to_nub(const Placewise& q) {
    require(q.land == Land::Splice, ErrorCode::Precondition, "expected a splice");
    return map_places(q, Land::Nub, splice_nub_kind, splice_nub_kind);
}

PlacewiseMap splice_to_nub(const PlacewiseMap& f) {
    return map_maps(f, static_cast<Placewise (*)(const Placewise&)>(splice_to_nub));
}

Placewise sigma(const Placewise& nub) {
    require(nub.land == Land::Nub, ErrorCode::Precondition, "sigma expects a nub");
    return map_places(nub, Land::Family, same, sigma_kind);
}

Placewise pi(const Placewise& family) {
    require(family.land == Land::Family, ErrorCode::Precondition, "pi expects a family");
    return map_places(family, Land::Nub, same, pi_kind);
}

PlacewiseMap sigma(const PlacewiseMap& f) { return map_maps(f, static_cast<Placewise (*)(const Placewise&)>(sigma)); }
PlacewiseMap pi(const PlacewiseMap& f) { return map_maps(f, static_cast<Placewise (*)(const Placewise&)>(pi)); }

PlacewiseMap unit_sigma_pi(const Placewise& nub) {
    Placewise t = pi(sigma(nub));
    PlacewiseMap u;
    for (std::size_t i = 0; i < nub.places(); ++i)
        u.at.emplace_back(nub.at[i], t.at[i], ChainMap::identity(nub.at[i]).f);
    return u;
}

PlacewiseMap counit_sigma_pi(const Placewise& family) {
    Placewise s = sigma(pi(family));
    PlacewiseMap c;
    for (std::size_t i = 0; i < family.places(); ++i)
        c.at.emplace_back(s.at[i], family.at[i], ChainMap::identity(family.at[i]).f);
    return c;
}

Placewise ell(const Placewise& family) {
    require(family.land == Land::Family, ErrorCode::Precondition, "L_0 expects a family");
    Placewise y{Land::Family, family.S, {}};
    for (const auto& c : family.at) {
        std::map<int, std::vector<Kind>> gens;
        std::map<int, QMatrix> d;
        for (int n : c.degrees()) gens[n] = std::vector<Kind>(c.indices(n, Kind::F).size(), Kind::F);
        for (const auto& [n, m] : c.differentials()) d[n] = m.select(c.indices(n - 1, Kind::F), c.indices(n, Kind::F));
        y.at.emplace_back(c.ring(), std::move(gens), std::move(d));
    }
    return y;
}

PlacewiseMap unit_ell(const Placewise& family) {
    Placewise t = ell(family);
    PlacewiseMap u;
    for (std::size_t i = 0; i < family.places(); ++i) {
        const auto& c = family.at[i];
        std::map<int, QMatrix> m;
        for (int n : c.degrees()) {
            auto fs = c.indices(n, Kind::F);
            QMatrix x(fs.size(), c.rank(n));
            for (std::size_t r = 0; r < fs.size(); ++r) x(r, fs[r]) = 1;
            m[n] = std::move(x);
        }
        u.at.emplace_back(c, t.at[i], std::move(m));
    }
    return u;
}

ChainComplex idempotent_piece(const Placewise& n, long p) {
    require(n.land != Land::Splice, ErrorCode::Precondition, "idempotent pieces are taken of nubs and families");
    for (std::size_t i = 0; i < n.S.size(); ++i)
        if (n.S[i] == p) return n.at[i];
    require(is_prime(p), ErrorCode::Input, "idempotent piece at a non-prime");
    return retag(n.generic(), Ring::padic_integers(p), sigma_kind);
}

Placewise enlarge_support(const Placewise& x, const Support& bigger) {
    for (long p : x.S) require(contains(bigger, p), ErrorCode::Precondition, "support does not contain the old one");
    Placewise y{x.land, bigger, {}};
    for (std::size_t i = 0; i <= bigger.size(); ++i) {
        if (i == bigger.size()) {
            y.at.push_back(retag(x.generic(), y.ring(i), same));
            continue;
        }
        long p = bigger[i];
        if (contains(x.S, p)) {
            for (std::size_t j = 0; j < x.S.size(); ++j)
                if (x.S[j] == p) y.at.push_back(x.at[j]);
            continue;
        }
        if (x.land == Land::Splice)
            y.at.push_back(retag(x.generic(), y.ring(i), to_f));
        else
            y.at.push_back(retag(x.generic(), y.ring(i), sigma_kind));
    }
    return y;
}

} // namespace fracture
