#include "fracture/fracture/labels.hpp"

#include "fracture/core/errors.hpp"
#include "fracture/fracture/reconstruct.hpp"

#include <algorithm>
#include <set>

namespace fracture {

namespace {

std::string sigma(int n) {
    if (n == 0) return "";
    if (n == 1) return "Σ ";
    return "Σ^" + std::to_string(n) + " ";
}

std::string times(const std::string& atom, long k) {
    return k == 1 ? atom : "(" + atom + ")^" + std::to_string(k);
}

std::string join(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " ⊕ " : "") + parts[i];
    return s;
}

// Prime-power pieces of a list of invariant factors.
std::vector<std::pair<long, long>> primary(const std::vector<Int>& factors) {
    std::vector<std::pair<long, long>> out;
    for (const Int& t : factors)
        for (long p : prime_divisors(t)) out.emplace_back(p, valuation(t, p));
    std::sort(out.begin(), out.end());
    return out;
}

std::string torsion_atom(long p, long e) {
    std::string s = "ℤ/" + std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

void add_torsion(std::vector<std::string>& parts, int n, const std::vector<Int>& factors) {
    for (auto [p, e] : primary(factors)) parts.push_back(sigma(n) + torsion_atom(p, e));
}

// Counts read off one degree of a nub-land homology group.
struct Counts {
    long f = 0, d = 0, p = 0, df = 0, pf = 0, pd = 0;
    friend bool operator==(const Counts&, const Counts&) = default;
};

Counts counts(const LocalGroup& g) {
    return {g.free_rank,
            g.divisible_count(Kind::D),
            g.divisible_count(Kind::P),
            g.quotient_count(Kind::D, Kind::F),
            g.quotient_count(Kind::P, Kind::F),
            g.quotient_count(Kind::P, Kind::D)};
}

LocalGroup at(const GradedGroup& h, int n) { return h.count(n) ? h.at(n) : LocalGroup{}; }

std::string local_atoms(const LocalGroup& g, int n, const std::string& where) {
    std::vector<std::string> parts;
    Counts c = counts(g);
    if (c.f) parts.push_back(times(sigma(n) + "F", c.f));
    if (c.d) parts.push_back(times(sigma(n) + "D", c.d));
    if (c.p) parts.push_back(times(sigma(n) + "P", c.p));
    if (c.df) parts.push_back(times(sigma(n) + "D/F", c.df));
    if (c.pf) parts.push_back(times(sigma(n) + "P/F", c.pf));
    if (c.pd) parts.push_back(times(sigma(n) + "P/D", c.pd));
    add_torsion(parts, n, g.torsion);
    return where + ": " + join(parts);
}

std::string per_place(const Placewise& n, const std::vector<GradedGroup>& hs) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (const auto& [deg, g] : hs[i]) parts.push_back(local_atoms(g, deg, place_label(n.S, i)));
    return parts.empty() ? "0" : "[" + [&] {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "; " : "") + parts[i];
        return s;
    }() + "]";
}

// Nub land over prod Z_p^: the primes must see what the generic template predicts.
std::string product_label(const Placewise& n) {
    std::vector<GradedGroup> hs;
    std::set<int> degs;
    for (const auto& c : n.at) {
        hs.push_back(homology(c));
        for (const auto& [d, g] : hs.back()) degs.insert(d);
    }
    std::vector<std::string> parts;
    for (int d : degs) {
        Counts g = counts(at(hs.back(), d));
        for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
            Counts c = counts(at(hs[i], d));
            if (c.f != g.f || c.d != g.d + g.p || c.df != g.df + g.pf || c.p || c.pf || c.pd)
                return per_place(n, hs);
        }
        const std::string s = sigma(d);
        if (g.f) parts.push_back(times("∏_p " + s + "ℤ_p^∧", g.f));
        if (g.d) parts.push_back(times("ℚ ⊗ ∏_p " + s + "ℤ_p^∧", g.d));
        if (g.p) parts.push_back(times("∏_p " + s + "ℚ_p", g.p));
        if (g.df) parts.push_back(times("⊕_p " + s + "ℤ/p^∞", g.df));
        if (g.pf) parts.push_back(times("∏_p " + s + "ℤ/p^∞", g.pf));
        if (g.pd) parts.push_back(times("ℚ ⊗ ∏_p " + s + "ℤ/p^∞", g.pd));
        std::vector<Int> tors;
        for (const auto& h : hs) {
            LocalGroup x = at(h, d);
            tors.insert(tors.end(), x.torsion.begin(), x.torsion.end());
        }
        add_torsion(parts, d, tors);
    }
    return join(parts);
}

std::string family_label(const Placewise& n) {
    std::vector<GradedGroup> hs;
    std::set<int> degs;
    for (const auto& c : n.at) {
        hs.push_back(homology(c));
        for (const auto& [d, g] : hs.back()) degs.insert(d);
    }
    std::vector<std::string> parts;
    for (int d : degs) {
        Counts g = counts(at(hs.back(), d));
        for (std::size_t i = 0; i + 1 < hs.size(); ++i)
            if (!(counts(at(hs[i], d)) == g)) return per_place(n, hs);
        const std::string s = sigma(d);
        if (g.f) parts.push_back(times("{ " + s + "ℤ_p^∧ }_p", g.f));
        if (g.d) parts.push_back(times("{ " + s + "ℚ_p }_p", g.d));
        if (g.df) parts.push_back(times("{ " + s + "ℤ/p^∞ }_p", g.df));
        std::vector<Int> tors;
        for (const auto& h : hs) {
            LocalGroup x = at(h, d);
            tors.insert(tors.end(), x.torsion.begin(), x.torsion.end());
        }
        add_torsion(parts, d, tors);
    }
    return join(parts);
}

std::string ascii_sigma(int n) { return n == 0 ? "" : "sigma^" + std::to_string(n) + " "; }

} // namespace

std::string vertex_label(const ChainComplex& v) {
    std::vector<std::string> parts;
    for (const auto& [n, b] : rational_betti(v)) parts.push_back(times(sigma(n) + "ℚ", b));
    return join(parts);
}

std::string nub_label(const Placewise& n) {
    return n.land == Land::Family ? family_label(n) : product_label(n);
}

std::string splice_label(const Placewise& q) { return product_label(splice_to_nub(q)); }

CornerLabels labels(const CospanDiagram& d) {
    return {vertex_label(d.vertex), nub_label(d.nub), splice_label(d.splice)};
}

std::vector<std::vector<std::string>> ascii_components(const Placewise& n) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < n.places(); ++i) {
        const bool gen = i == n.generic_index() && n.land == Land::Nub;
        std::vector<std::string> atoms;
        for (const auto& [deg, g] : homology(n.at[i])) {
            Counts c = counts(g);
            auto push = [&](const char* name, long k) {
                for (long j = 0; j < k; ++j) atoms.push_back(ascii_sigma(deg) + name);
            };
            push("ZpHat", c.f);
            push(gen ? "Q(x)ZpHat" : "QpHat", c.d);
            push("QpHat", c.p);
            push("Prufer", c.df);
            push("ProdPrufer", c.pf);
            push("Q(x)ProdPrufer", c.pd);
            for (const Int& t : g.torsion) atoms.push_back(ascii_sigma(deg) + "Torsion(" + t.get_str() + ")");
        }
        out.push_back(std::move(atoms));
    }
    return out;
}

} // namespace fracture
