#include "fracture/fracture/convert.hpp"

#include "fracture/core/errors.hpp"

namespace fracture {

Adjunction parse_adjunction(const std::string& name) {
    if (name == "identity") return Adjunction::Identity;
    if (name == "sigma") return Adjunction::Sigma;
    if (name == "completion" || name == "L0") return Adjunction::Completion;
    fail(ErrorCode::UndeclaredAdjunction, "no declared adjunction '" + name + "'");
}

const char* adjunction_name(Adjunction a) {
    switch (a) {
    case Adjunction::Identity: return "identity";
    case Adjunction::Sigma: return "sigma";
    case Adjunction::Completion: return "completion";
    }
    return "?";
}

namespace {

Flavor pushed_flavor(Adjunction a, Flavor f) {
    switch (a) {
    case Adjunction::Identity: return f;
    case Adjunction::Sigma: return Flavor::Separated;
    case Adjunction::Completion: return Flavor::Complete;
    }
    return f;
}

Flavor pulled_flavor(Adjunction a, Flavor f) {
    switch (a) {
    case Adjunction::Identity: return f;
    case Adjunction::Sigma: return Flavor::Adelic;
    case Adjunction::Completion: return Flavor::Separated;
    }
    return f;
}

// F-block of a family map, the map induced on L_0.
PlacewiseMap ell_map(const PlacewiseMap& f) {
    Placewise s = ell(f.source()), t = ell(f.target());
    PlacewiseMap g;
    for (std::size_t i = 0; i < f.at.size(); ++i) {
        const ChainMap& m = f.at[i];
        std::map<int, QMatrix> x;
        for (int n : m.degrees())
            x[n] = m.at(n).select(m.target.indices(n, Kind::F), m.source.indices(n, Kind::F));
        g.at.emplace_back(s.at[i], t.at[i], std::move(x));
    }
    return g;
}

std::vector<std::map<int, QMatrix>> matrices(const PlacewiseMap& f) {
    std::vector<std::map<int, QMatrix>> out;
    for (const auto& m : f.at) out.push_back(m.f);
    return out;
}

PlacewiseMap inverse(const PlacewiseMap& f) {
    PlacewiseMap g;
    for (const auto& m : f.at) {
        auto inv = inverse(m);
        require(inv.has_value(), ErrorCode::Precondition, "witness is not invertible");
        g.at.push_back(*inv);
    }
    return g;
}

// h: L_g on a nub, L_g pi on a family.
PlacewiseMap h_map(const PlacewiseMap& f) { return lg(f); }

} // namespace

Placewise apply(Adjunction a, const Placewise& n) {
    switch (a) {
    case Adjunction::Identity: return n;
    case Adjunction::Sigma: return sigma(n);
    case Adjunction::Completion: return ell(n);
    }
    return n;
}

PlacewiseMap apply(Adjunction a, const PlacewiseMap& f) {
    switch (a) {
    case Adjunction::Identity: return f;
    case Adjunction::Sigma: return sigma(f);
    case Adjunction::Completion: return ell_map(f);
    }
    return f;
}

Placewise right_adjoint(Adjunction a, const Placewise& m) { return a == Adjunction::Sigma ? pi(m) : m; }

PlacewiseMap right_adjoint(Adjunction a, const PlacewiseMap& f) { return a == Adjunction::Sigma ? pi(f) : f; }

PlacewiseMap adjunction_unit(Adjunction a, const Placewise& n) {
    switch (a) {
    case Adjunction::Identity: return identity(n);
    case Adjunction::Sigma: return unit_sigma_pi(n);
    case Adjunction::Completion: return unit_ell(n);
    }
    return identity(n);
}

PlacewiseMap adjunction_counit(Adjunction a, const Placewise& m) {
    switch (a) {
    case Adjunction::Identity: return identity(m);
    case Adjunction::Sigma: return counit_sigma_pi(m);
    case Adjunction::Completion: {
        // L_0 of a complete family is itself; the counit is the identity.
        Placewise fm = ell(m);
        require(fm == m, ErrorCode::Precondition, "counit of L_0 needs a complete family");
        return identity(m);
    }
    }
    return identity(m);
}

CospanDiagram qc_pushforward(Adjunction a, const CospanDiagram& y) {
    require(check_qc(y), ErrorCode::Precondition, "qc_pushforward needs a qc diagram");
    Placewise fn = apply(a, y.nub);
    PlacewiseMap eta = adjunction_unit(a, y.nub);
    PlacewiseMap vert = compose(compose(h_map(eta), inverse(y.horizontal)), y.vertical);
    Placewise q = lg(fn);
    return make_diagram(pushed_flavor(a, y.flavor), y.S, y.vertex, fn, q, matrices(vert), matrices(identity(q)));
}

DiagramMap qc_pushforward(Adjunction a, const DiagramMap& f) {
    require(is_strict(f), ErrorCode::Precondition, "qc_pushforward of maps takes strict maps");
    PlacewiseMap fn = apply(a, f.nub);
    return {f.vertex, fn, h_map(fn), {}, {}};
}

CospanDiagram pullback_along(Adjunction a, const CospanDiagram& z) {
    Placewise rm = right_adjoint(a, z.nub);
    return make_diagram(pulled_flavor(a, z.flavor), z.S, z.vertex, rm, z.splice, matrices(z.vertical),
                        matrices(z.horizontal));
}

DiagramMap pullback_along(Adjunction a, const DiagramMap& f) {
    return {f.vertex, right_adjoint(a, f.nub), f.splice, f.vertical_homotopy, f.horizontal_homotopy};
}

DiagramMap pushforward_unit(Adjunction a, const CospanDiagram& y) {
    PlacewiseMap eta = adjunction_unit(a, y.nub);
    PlacewiseMap q = compose(h_map(eta), inverse(y.horizontal));
    return {ChainMap::identity(y.vertex), eta, q, {}, {}};
}

DiagramMap pushforward_counit(Adjunction a, const CospanDiagram& z) {
    PlacewiseMap eps = adjunction_counit(a, z.nub); // F r M -> M
    PlacewiseMap q = compose(z.horizontal, h_map(eps));
    return {ChainMap::identity(z.vertex), eps, q, {}, {}};
}

CospanDiagram to_separated(const CospanDiagram& d) {
    require(d.flavor == Flavor::Adelic, ErrorCode::Precondition, "to_separated expects an adelic diagram");
    return qc_pushforward(Adjunction::Sigma, d);
}

CospanDiagram to_complete(const CospanDiagram& d) {
    if (d.flavor == Flavor::Complete) return d;
    CospanDiagram s = d.flavor == Flavor::Adelic ? to_separated(d) : d;
    return qc_pushforward(Adjunction::Completion, s);
}

CospanDiagram to_adelic(const CospanDiagram& d) {
    if (d.flavor == Flavor::Adelic) return d;
    CospanDiagram a = make_diagram(Flavor::Adelic, d.S, d.vertex, pi(d.nub), d.splice, matrices(d.vertical),
                                   matrices(d.horizontal));
    CospanDiagram e = gamma_e(a).diagram;
    return check_qc(e) ? e : gamma_qce(e).diagram;
}

CospanDiagram convert(const CospanDiagram& d, Flavor target) {
    switch (target) {
    case Flavor::Adelic: return to_adelic(d);
    case Flavor::Separated:
        if (d.flavor == Flavor::Separated) return d;
        require(d.flavor == Flavor::Adelic, ErrorCode::Precondition, "complete diagrams convert to separated via adelic");
        return to_separated(d);
    case Flavor::Complete: return to_complete(d);
    }
    return d;
}

} // namespace fracture
