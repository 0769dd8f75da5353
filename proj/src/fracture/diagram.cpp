#include "fracture/fracture/diagram.hpp"

#include "fracture/core/errors.hpp"

namespace fracture {

const char* flavor_name(Flavor f) {
    switch (f) {
    case Flavor::Adelic: return "adelic";
    case Flavor::Separated: return "separated";
    case Flavor::Complete: return "complete";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s) {
    if (s == "adelic") return Flavor::Adelic;
    if (s == "separated") return Flavor::Separated;
    if (s == "complete") return Flavor::Complete;
    fail(ErrorCode::Input, "unknown flavor '" + s + "'");
}

Placewise CospanDiagram::assembled_nub() const { return nub.land == Land::Family ? pi(nub) : nub; }

void CospanDiagram::validate() const {
    require(vertex.ring().tag == RingTag::RationalsQ, ErrorCode::Input, "vertex must be a rational complex");
    require(nub.S == S && splice.S == S, ErrorCode::Input, "diagram corners disagree on the support");
    require(splice.land == Land::Splice, ErrorCode::Input, "splice must live over the finite adeles");
    require((flavor == Flavor::Adelic) == (nub.land == Land::Nub), ErrorCode::Input,
            "adelic diagrams carry a nub, separated and complete ones a family");
    nub.validate();
    splice.validate();
    require(vertical.at.size() == splice.places() && horizontal.at.size() == splice.places(), ErrorCode::Input,
            "witness maps need one component per place");
    Placewise jv = jstar(vertex, S);
    Placewise hn = h_nub();
    for (std::size_t i = 0; i < splice.places(); ++i) {
        require(vertical[i].source == jv.at[i] && vertical[i].target == splice.at[i], ErrorCode::Input,
                "vertical witness has the wrong endpoints");
        require(horizontal[i].source == hn.at[i] && horizontal[i].target == splice.at[i], ErrorCode::Input,
                "horizontal witness has the wrong endpoints");
        require(is_kinded(vertical[i]) && is_kinded(horizontal[i]), ErrorCode::Input,
                "witness map is not kind-legal");
    }
}

CospanDiagram make_diagram(Flavor flavor, const Support& S, ChainComplex vertex, Placewise nub, Placewise splice,
                           const std::vector<std::map<int, QMatrix>>& vertical,
                           const std::vector<std::map<int, QMatrix>>& horizontal) {
    CospanDiagram d;
    d.flavor = flavor;
    d.S = S;
    d.vertex = std::move(vertex);
    d.nub = std::move(nub);
    d.splice = std::move(splice);
    require(vertical.size() == S.size() + 1 && horizontal.size() == S.size() + 1, ErrorCode::Input,
            "witness maps need one component per place");
    Placewise jv = jstar(d.vertex, S);
    Placewise hn = d.h_nub();
    for (std::size_t i = 0; i <= S.size(); ++i) {
        d.vertical.at.emplace_back(jv.at[i], d.splice.at[i], vertical[i]);
        d.horizontal.at.emplace_back(hn.at[i], d.splice.at[i], horizontal[i]);
    }
    d.validate();
    return d;
}

bool check_qc(const CospanDiagram& d, bool weak) {
    return weak ? is_quasi_iso(d.horizontal) : is_kinded_iso(d.horizontal);
}

bool check_e(const CospanDiagram& d, bool weak) {
    return weak ? is_quasi_iso(d.vertical) : is_kinded_iso(d.vertical);
}

bool check_ie(const CospanDiagram& d, bool weak) {
    return weak ? is_rational_quasi_iso(d.vertical) : is_rational_iso(d.vertical);
}

bool check_complete(const CospanDiagram& d) {
    if (d.nub.land != Land::Family) return false;
    for (const auto& c : d.nub.at)
        for (const auto& [n, g] : homology(c)) {
            for (const auto& [k, v] : g.divisible)
                if (v) return false;
            for (const auto& [k, v] : g.quotients)
                if (v) return false;
        }
    return true;
}

DiagramFlags flags(const CospanDiagram& d) {
    DiagramFlags f;
    f.qc = check_qc(d);
    f.e = check_e(d);
    f.ie = check_ie(d);
    f.complete = check_complete(d);
    f.weak_qc = check_qc(d, true);
    f.weak_e = check_e(d, true);
    f.weak_ie = check_ie(d, true);
    return f;
}

DiagramMap identity(const CospanDiagram& d) {
    return {ChainMap::identity(d.vertex), identity(d.nub), identity(d.splice), {}, {}};
}

PlacewiseMap jstar(const ChainMap& f, const Support& S) {
    Placewise s = jstar(f.source, S), t = jstar(f.target, S);
    PlacewiseMap m;
    for (std::size_t i = 0; i <= S.size(); ++i) m.at.emplace_back(s.at[i], t.at[i], f.f);
    return m;
}

namespace {

QMatrix hom_at(const std::vector<std::map<int, QMatrix>>& h, std::size_t place, int n, std::size_t rows,
               std::size_t cols) {
    if (h.empty()) return QMatrix(rows, cols);
    auto it = h[place].find(n);
    return it == h[place].end() ? QMatrix(rows, cols) : it->second;
}

// H = phi_Q H_psi + H_phi psi_src  (composite of two squares, one place).
std::map<int, QMatrix> compose_homotopy(const ChainMap& phi_q, const std::vector<std::map<int, QMatrix>>& h_phi,
                                        const std::vector<std::map<int, QMatrix>>& h_psi, const ChainMap& psi_src,
                                        std::size_t place) {
    std::map<int, QMatrix> out;
    const ChainComplex& X = psi_src.source;
    for (int n : X.degrees()) {
        QMatrix a = phi_q.at(n + 1) * hom_at(h_psi, place, n, phi_q.source.rank(n + 1), X.rank(n));
        QMatrix b = hom_at(h_phi, place, n, phi_q.target.rank(n + 1), psi_src.target.rank(n)) * psi_src.at(n);
        QMatrix s = a + b;
        if (!s.is_zero()) out[n] = s;
    }
    return out;
}

bool square_ok(const ChainMap& top, const ChainMap& right, const ChainMap& left, const ChainMap& bottom,
               const std::vector<std::map<int, QMatrix>>& h, std::size_t place) {
    // right ∘ top  vs  bottom ∘ left, difference = dH + Hd
    const ChainComplex& X = top.source;
    const ChainComplex& Y = right.target;
    for (int n : X.degrees()) {
        QMatrix diff = right.at(n) * top.at(n) - bottom.at(n) * left.at(n);
        QMatrix H = hom_at(h, place, n, Y.rank(n + 1), X.rank(n));
        QMatrix Hm = hom_at(h, place, n - 1, Y.rank(n), X.rank(n - 1));
        if (diff != Y.d(n + 1) * H + Hm * X.d(n)) return false;
    }
    return true;
}

} // namespace

DiagramMap compose(const DiagramMap& g, const DiagramMap& f, const CospanDiagram& middle) {
    (void)middle;
    DiagramMap h;
    h.vertex = compose(g.vertex, f.vertex);
    h.nub = compose(g.nub, f.nub);
    h.splice = compose(g.splice, f.splice);
    const std::size_t places = f.splice.at.size();
    const Support S = f.splice.at.back().source.ring().S;
    bool strict = g.vertical_homotopy.empty() && f.vertical_homotopy.empty();
    if (!strict) {
        PlacewiseMap jf = jstar(f.vertex, S);
        for (std::size_t i = 0; i < places; ++i)
            h.vertical_homotopy.push_back(
                compose_homotopy(g.splice[i], g.vertical_homotopy, f.vertical_homotopy, jf[i], i));
    }
    strict = g.horizontal_homotopy.empty() && f.horizontal_homotopy.empty();
    if (!strict) {
        PlacewiseMap lf = lg(f.nub);
        for (std::size_t i = 0; i < places; ++i)
            h.horizontal_homotopy.push_back(
                compose_homotopy(g.splice[i], g.horizontal_homotopy, f.horizontal_homotopy, lf[i], i));
    }
    return h;
}

bool is_valid_map(const DiagramMap& m, const CospanDiagram& s, const CospanDiagram& t) {
    if (!(m.vertex.source == s.vertex && m.vertex.target == t.vertex)) return false;
    PlacewiseMap jv = jstar(m.vertex, s.S);
    PlacewiseMap hn = lg(m.nub);
    for (std::size_t i = 0; i < s.splice.places(); ++i) {
        if (!(m.nub[i].source == s.nub.at[i] && m.nub[i].target == t.nub.at[i])) return false;
        if (!(m.splice[i].source == s.splice.at[i] && m.splice[i].target == t.splice.at[i])) return false;
        if (!is_kinded(m.nub[i]) || !is_kinded(m.splice[i])) return false;
        if (!square_ok(s.vertical[i], m.splice[i], jv[i], t.vertical[i], m.vertical_homotopy, i)) return false;
        if (!square_ok(s.horizontal[i], m.splice[i], hn[i], t.horizontal[i], m.horizontal_homotopy, i)) return false;
    }
    return true;
}

bool is_strict(const DiagramMap& m) {
    for (const auto& h : m.vertical_homotopy)
        if (!h.empty()) return false;
    for (const auto& h : m.horizontal_homotopy)
        if (!h.empty()) return false;
    return true;
}

bool is_iso(const DiagramMap& m) {
    ChainMap v = m.vertex;
    return is_kinded_iso(v) && is_kinded_iso(m.nub) && is_kinded_iso(m.splice);
}

bool is_identity(const DiagramMap& m) {
    if (!is_identity(m.vertex)) return false;
    for (const auto& x : m.nub.at)
        if (!is_identity(x)) return false;
    for (const auto& x : m.splice.at)
        if (!is_identity(x)) return false;
    return is_strict(m);
}

CospanDiagram enlarge_support(const CospanDiagram& d, const Support& bigger) {
    Placewise nub = enlarge_support(d.nub, bigger);
    Placewise splice = enlarge_support(d.splice, bigger);
    auto spread = [&](const PlacewiseMap& m) {
        std::vector<std::map<int, QMatrix>> out;
        for (std::size_t i = 0; i <= bigger.size(); ++i) {
            std::size_t src = d.S.size();
            if (i < bigger.size())
                for (std::size_t j = 0; j < d.S.size(); ++j)
                    if (d.S[j] == bigger[i]) src = j;
            out.push_back(m[src].f);
        }
        return out;
    };
    return make_diagram(d.flavor, bigger, d.vertex, nub, splice, spread(d.vertical), spread(d.horizontal));
}

} // namespace fracture
