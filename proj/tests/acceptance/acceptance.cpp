// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "fracture/complexes/homology.hpp"
#include "fracture/complexes/operations.hpp"
#include "fracture/complexes/random.hpp"
#include "fracture/core/errors.hpp"
#include "fracture/core/snf.hpp"
#include "fracture/curve/p1.hpp"
#include "fracture/fracture/build.hpp"
#include "fracture/fracture/convert.hpp"
#include "fracture/fracture/demo.hpp"
#include "fracture/fracture/gamma.hpp"
#include "fracture/fracture/labels.hpp"
#include "fracture/fracture/reconstruct.hpp"
#include "fracture/io/json.hpp"
#include "fracture/io/report.hpp"
#include "fracture/local/atomic.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace fracture;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    int failures = 0;
    std::string detail;
    void check(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ < 4) detail += (detail.empty() ? "" : "; ") + what;
        pass = false;
    }
};

ChainComplex random_x(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_perfect_complex(rng);
}

ChainComplex cone12() {
    return ChainComplex(Ring::integers(), {{0, {Kind::F}}, {1, {Kind::F}}}, {{1, QMatrix(1, 1, {Rat(12)})}});
}

Support fresh_support(const ChainComplex& x) {
    Support S = minimal_support(x);
    long q = next_prime(S.empty() ? 1 : S.back());
    S.push_back(q);
    return normalize_support(S);
}

Support enlarged(const Support& S) {
    Support T = S;
    T.push_back(next_prime(S.back()));
    return normalize_support(T);
}

std::vector<ChainComplex> hasse_inputs() {
    std::vector<ChainComplex> xs{demo_input("Z", {}), cone12()};
    for (std::uint64_t s = 1; s <= 20; ++s) xs.push_back(random_x(s));
    return xs;
}

Outcome criterion1() {
    Outcome o;
    int i = 0;
    for (const auto& x : hasse_inputs()) {
        auto t0 = Clock::now();
        Support S = fresh_support(x);
        CospanDiagram d = build_adelic(x, S);
        bool ok = verify_pullback(d, x).overall && quasi_isomorphic(reconstruct(d), x);
        double t = seconds_since(t0);
        o.check(ok, "instance " + std::to_string(i) + " does not reconstruct");
        o.check(t < 1.0, "instance " + std::to_string(i) + " took " + std::to_string(t) + " s");
        ++i;
    }
    return o;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

Outcome criterion2() {
    Outcome o;
    for (std::string name : {"Q", "Q-mod-Z"}) {
        std::string golden = read_file(std::string(GOLDEN_DIR) + "/" + name + ".json");
        std::string got = io::canonical(io::golden_view(io::demo_report(name, default_demo_support())));
        o.check(!golden.empty(), "golden file for " + name + " missing");
        o.check(got == golden, "demo " + name + " differs from golden: " + got);
    }
    return o;
}

std::map<int, LocalGroup> hom(const ChainComplex& c) { return homology(c); }

Outcome criterion3() {
    Outcome o;
    for (std::uint64_t s = 1; s <= 20; ++s) {
        ChainComplex x = random_x(s);
        Support S = fresh_support(x);
        CospanDiagram ad = build_adelic(x, S);
        CospanDiagram sep = to_separated(ad);
        CospanDiagram comp = to_complete(sep);
        CospanDiagram back = to_adelic(comp);
        std::string tag = "seed " + std::to_string(s);
        auto fib = hom(horizontal_fibre(ad));
        for (const auto* d : {&ad, &sep, &comp, &back}) {
            o.check(quasi_isomorphic(reconstruct(*d), x), tag + ": reconstruction changes along the ladder");
            o.check(hom(horizontal_fibre(*d)) == fib, tag + ": horizontal fibres disagree");
        }
    }
    return o;
}

// Seeded diagrams of all three flavors, with non-qc, non-e and non-ie perturbations.
std::vector<CospanDiagram> gamma_suite() {
    std::vector<CospanDiagram> out;
    for (std::uint64_t s = 1; out.size() < 50; ++s) {
        ChainComplex x = random_x(100 + s);
        Support S = fresh_support(x);
        CospanDiagram d = build_adelic(x, S);
        switch (s % 6) {
        case 0: out.push_back(d); break;
        case 1: out.push_back(to_separated(d)); break;
        case 2: out.push_back(to_complete(to_separated(d))); break;
        case 3: {
            // non-qc: forget the splice
            CospanDiagram z = d;
            z.splice = Placewise::zero(Land::Splice, S);
            z.horizontal.at.clear();
            z.vertical.at.clear();
            for (std::size_t i = 0; i < z.splice.places(); ++i) {
                z.horizontal.at.push_back(ChainMap::zero(d.h_nub().at[i], z.splice.at[i]));
                z.vertical.at.push_back(ChainMap::zero(jstar(d.vertex, S).at[i], z.splice.at[i]));
            }
            out.push_back(z);
            break;
        }
        case 4: {
            // non-e: drop the vertex
            CospanDiagram z = d;
            z.vertex = ChainComplex(Ring::rationals());
            z.vertical.at.clear();
            for (std::size_t i = 0; i < z.splice.places(); ++i)
                z.vertical.at.push_back(ChainMap::zero(jstar(z.vertex, S).at[i], z.splice.at[i]));
            out.push_back(z);
            break;
        }
        case 5: {
            // non-ie: one family component and its splice lost
            CospanDiagram z = to_separated(d);
            z.nub.at[0] = ChainComplex(z.nub.ring(0));
            z.splice.at[0] = ChainComplex(z.splice.ring(0));
            z.horizontal.at[0] = ChainMap::zero(lg(pi(z.nub)).at[0], z.splice.at[0]);
            z.vertical.at[0] = ChainMap::zero(jstar(z.vertex, S).at[0], z.splice.at[0]);
            out.push_back(z);
            break;
        }
        }
    }
    return out;
}

void check_gamma(Outcome& o, const std::string& name, const std::function<GammaResult(const CospanDiagram&)>& g,
                 const CospanDiagram& d, bool flag) {
    GammaResult r = g(d);
    o.check(is_valid_map(r.counit, r.diagram, d), name + ": counit is not a diagram map");
    o.check(is_iso(r.counit) == flag, name + ": counit iso does not match the flag");
    GammaResult rr = g(r.diagram);
    o.check(is_iso(rr.counit), name + ": not idempotent");
}

Outcome criterion4() {
    Outcome o;
    int i = 0;
    for (const auto& d : gamma_suite()) {
        std::string tag = "diagram " + std::to_string(i++) + " ";
        check_gamma(o, tag + "qc", gamma_qc, d, check_qc(d));
        if (d.flavor == Flavor::Adelic) {
            check_gamma(o, tag + "e", gamma_e, d, check_e(d));
            check_gamma(o, tag + "qce", gamma_qce, d, check_qc(d) && check_e(d));
        } else {
            check_gamma(o, tag + "ie", gamma_ie, d, check_ie(d));
        }

        Placewise n = d.assembled_nub();
        PlacewiseMap t1 = compose(counit_sigma_pi(sigma(n)), sigma(unit_sigma_pi(n)));
        o.check(t1 == identity(sigma(n)), tag + "sigma triangle");
        if (d.flavor != Flavor::Adelic) {
            PlacewiseMap t2 = compose(pi(counit_sigma_pi(d.nub)), unit_sigma_pi(pi(d.nub)));
            o.check(t2 == identity(pi(d.nub)), tag + "pi triangle");
        }
        if (d.flavor == Flavor::Adelic && check_qc(d)) {
            CospanDiagram y = d;
            CospanDiagram fy = qc_pushforward(Adjunction::Sigma, y);
            DiagramMap l = compose(pushforward_counit(Adjunction::Sigma, fy),
                                   qc_pushforward(Adjunction::Sigma, pushforward_unit(Adjunction::Sigma, y)),
                                   qc_pushforward(Adjunction::Sigma, pullback_along(Adjunction::Sigma, fy)));
            o.check(is_strict(l) && is_identity(l), tag + "pushforward triangle (F)");
            CospanDiagram ry = pullback_along(Adjunction::Sigma, fy);
            DiagramMap r = compose(pullback_along(Adjunction::Sigma, pushforward_counit(Adjunction::Sigma, fy)),
                                   pushforward_unit(Adjunction::Sigma, ry),
                                   pullback_along(Adjunction::Sigma, qc_pushforward(Adjunction::Sigma, ry)));
            o.check(is_strict(r) && is_identity(r), tag + "pushforward triangle (r)");
        }
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::vector<Atom> atoms{Atom::z(), Atom::q()};
    for (long l : {2L, 3L, 5L}) {
        for (long k = 1; k <= 3; ++k) atoms.push_back(Atom::torsion(l, k));
        atoms.push_back(Atom::prufer(l));
        atoms.push_back(Atom::zp_hat(l));
        atoms.push_back(Atom::qp_hat(l));
    }
    for (long p : {2L, 3L, 5L}) {
        for (const Atom& a : atoms) {
            AtomicModule m;
            m.add(a);
            DerivedCompletion got = derived_completion(m, p);
            oracle::TowerLimits want = oracle::tower_completion(a, p, 6);
            o.check(got.L0 == want.l0 && got.L1 == want.l1,
                    a.to_string() + " at p=" + std::to_string(p) + ": " + got.L0.to_string() + ", " +
                        got.L1.to_string());
        }
        // Complete-model values: Q has no complete part, Q/Z completes to a shifted Z_p.
        DerivedCompletion q = derived_completion(AtomicModule{{Atom::q(), 1}}, p);
        o.check(q.L0.is_zero() && q.L1.is_zero(), "Q does not complete to 0");
        AtomicModule qz;
        for (long l : {2L, 3L, 5L}) qz.add(Atom::prufer(l));
        DerivedCompletion c = derived_completion(qz, p);
        o.check(c.L0.is_zero() && c.L1 == AtomicModule{{Atom::zp_hat(p), 1}}, "Q/Z does not complete to Sigma Z_p");
    }
    CospanDiagram comp = to_complete(to_separated(build_adelic(demo_input("Q-mod-Z", {2, 3, 5}), {2, 3, 5})));
    for (const auto& place : ascii_components(comp.nub))
        o.check(place == std::vector<std::string>{"sigma^1 ZpHat"}, "complete Q/Z nub is not sigma^1 ZpHat");
    return o;
}

DivisorP1 random_divisor(std::mt19937_64& rng, const FieldDescriptor& k, long deg) {
    // Points from {inf, 0, 1, ..., 6}; 1-3 points, multiplicities nonzero, summing to deg.
    std::vector<P1Point> pool{P1Point::at_infinity()};
    for (long v = 0; v <= 6; ++v) pool.push_back(P1Point::finite(Rat(k.tag == FieldDescriptor::Tag::Rationals ? v - 3 : v)));
    std::shuffle(pool.begin(), pool.end(), rng);
    for (;;) {
        std::size_t npts = 1 + rng() % 3;
        DivisorP1 d;
        long rest = deg;
        for (std::size_t i = 0; i + 1 < npts; ++i) {
            long n = static_cast<long>(rng() % 6) - 3;
            if (n >= 0) ++n;
            d.push_back({pool[i], n});
            rest -= n;
        }
        if (rest != 0) {
            d.push_back({pool[npts - 1], rest});
            return d;
        }
        if (npts == 1) return d;
    }
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    auto t0 = Clock::now();
    for (const auto& k : {FieldDescriptor::rationals(), FieldDescriptor::prime_field(7)}) {
        for (long deg = -5; deg <= 5; ++deg) {
            for (int rep = 0; rep < 3; ++rep) {
                DivisorP1 d = random_divisor(rng, k, deg);
                std::string tag = k.name() + " deg " + std::to_string(deg);
                CohomologyResult r = line_bundle_cohomology(k, d);
                CousinComparison c = cousin_vs_residue(k, d);
                o.check(r.h0 == oracle::p1_h0(deg) && r.h1 == oracle::p1_h1(deg), tag + ": dimensions");
                o.check(r.h0 - r.h1 == deg + 1, tag + ": Riemann-Roch");
                o.check(c.h0_cousin == r.h0 && c.h1_cousin == r.h1, tag + ": Cousin route disagrees");
                for (const auto& f : r.h0_basis) o.check(oracle::is_section(k, d, f), tag + ": basis element not a section");
            }
        }
    }
    double t = seconds_since(t0);
    o.check(t < 1.0, "took " + std::to_string(t) + " s");
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (std::uint64_t s = 1; s <= 20; ++s) {
        ChainComplex x = random_x(700 + s);
        Support S = fresh_support(x), T = enlarged(S);
        std::string tag = "seed " + std::to_string(s);
        CospanDiagram a = build_adelic(x, S), b = build_adelic(x, T);
        o.check(enlarge_support(a, T) == b, tag + ": enlarged diagram differs");
        PullbackReport ra = verify_pullback(a, x), rb = verify_pullback(b, x);
        o.check(ra.overall == rb.overall, tag + ": overall verdict moves");
        for (const auto& [place, ok] : ra.local_acyclic) o.check(rb.local_acyclic.at(place) == ok, tag + ": verdict at " + place);
        for (const auto& v : ra.verdicts) {
            bool found = false;
            for (const auto& w : rb.verdicts)
                if (w.place == v.place && w.degree == v.degree) found = w.exact == v.exact;
            o.check(found, tag + ": MV verdict at " + v.place);
        }
        for (Flavor f : {Flavor::Adelic, Flavor::Separated, Flavor::Complete})
            o.check(quasi_isomorphic(reconstruct(build(x, S, f)), reconstruct(build(x, T, f))),
                    tag + ": reconstruction moves");
    }
    return o;
}

IntMatrix abs_diag(std::vector<Int> v) {
    IntMatrix m(1, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = abs(v[i]);
    return m;
}

long homology_euler(const ChainComplex& c) {
    long chi = 0;
    for (const auto& [n, g] : oracle::integral_homology(c)) chi += (n % 2 ? -1 : 1) * g.free_rank;
    return chi;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix a = random_int_matrix(rng, r, c, 9);
        o.check(abs_diag(smith_normal_form(a).diagonal()) == abs_diag(oracle::invariant_factors_by_minors(a)),
                "SNF disagrees with minors on matrix " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
        ChainComplex s = random_perfect_complex(rng), extra = random_perfect_complex(rng);
        ChainMap g = random_chain_map(rng, s);
        ChainComplex t = direct_sum(s, extra);
        std::map<int, QMatrix> m;
        for (int n : s.degrees()) {
            QMatrix x(t.rank(n), s.rank(n));
            place(x, 0, 0, g.at(n));
            m[n] = x;
        }
        ChainMap f(s, t, m);
        o.check(homology_euler(cone(f)) == homology_euler(t) - homology_euler(s),
                "Euler characteristic not additive on map " + std::to_string(i));
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 Hasse reconstruction", criterion1},   {"2 golden tables", criterion2},
        {"3 ladder coherence", criterion3},       {"4 skeleton functors", criterion4},
        {"5 derived completion", criterion5},     {"6 P1 cohomology", criterion6},
        {"7 support enlargement", criterion7},    {"8 core oracles", criterion8},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %s (%.3f s)", o.pass ? "PASS" : "FAIL", name.c_str(), seconds_since(t0));
        if (!o.pass) std::printf(": %d failed checks: %s", std::max(o.failures, 1), o.detail.c_str());
        std::printf("\n");
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
