#include "fracture/complexes/homology.hpp"
#include "fracture/complexes/operations.hpp"
#include "fracture/complexes/random.hpp"
#include "fracture/core/errors.hpp"
#include "fracture/fracture/build.hpp"
#include "fracture/fracture/convert.hpp"
#include "fracture/fracture/demo.hpp"
#include "fracture/fracture/gamma.hpp"
#include "fracture/fracture/labels.hpp"
#include "fracture/fracture/reconstruct.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fracture;

namespace {

ChainComplex z0() { return demo_input("Z", {}); }
ChainComplex q0() { return demo_input("Q", {}); }
ChainComplex qz() { return demo_input("Q-mod-Z", {}); }

ChainComplex times(long m) {
    return ChainComplex(Ring::integers(), {{0, {Kind::F}}, {1, {Kind::F}}}, {{1, QMatrix(1, 1, {Rat(m)})}});
}

const Support S235{2, 3, 5};

} // namespace

TEST_CASE("minimal support") {
    CHECK(minimal_support(z0()).empty());
    CHECK(minimal_support(times(12)) == Support{2, 3});
    CHECK(build_adelic(z0(), {}).S == Support{2});
    CHECK(build_adelic(times(12), {5}).S == Support{2, 3, 5});
}

TEST_CASE("Hasse square of Z") {
    CospanDiagram d = build_adelic(z0(), {2, 3});
    auto l = labels(d);
    CHECK(l.vertex == "ℚ");
    CHECK(l.nub == "∏_p ℤ_p^∧");
    CHECK(l.splice == "ℚ ⊗ ∏_p ℤ_p^∧");
    auto f = flags(d);
    CHECK(f.qc);
    CHECK(f.e);
    CHECK(f.ie);
    CHECK(verify_pullback(d, z0()).overall);
}

TEST_CASE("build_adelic of torsion and acyclic inputs") {
    CospanDiagram d = build_adelic(times(2), {2, 3});
    CHECK(is_acyclic(d.vertex));
    CHECK_FALSE(is_acyclic(d.nub.at[0]));
    CHECK(is_acyclic(d.nub.at[1]));
    CHECK(is_acyclic(d.nub.generic()));
    CospanDiagram a = build_adelic(demo_input("zero", {}), {2});
    CHECK(a.vertex.is_zero());
    CHECK(a.nub.is_zero());
}

TEST_CASE("flags on perturbed diagrams") {
    CospanDiagram d = build_adelic(z0(), {2, 3});
    CospanDiagram z = d;
    z.splice = Placewise::zero(Land::Splice, d.S);
    for (std::size_t i = 0; i < z.splice.places(); ++i) {
        z.horizontal.at[i] = ChainMap::zero(d.h_nub().at[i], z.splice.at[i]);
        z.vertical.at[i] = ChainMap::zero(jstar(d.vertex, d.S).at[i], z.splice.at[i]);
    }
    CHECK_FALSE(check_qc(z));
    CospanDiagram sep = to_separated(build_adelic(q0(), S235));
    CHECK(check_ie(sep));
    CHECK_FALSE(check_e(sep));
}

TEST_CASE("gamma_qc") {
    CospanDiagram d = build_adelic(z0(), {2, 3});
    GammaResult r = gamma_qc(d);
    CHECK(is_iso(r.counit));
    // Zero splice: the new vertex is V plus the adeles of Z.
    CospanDiagram z = d;
    z.splice = Placewise::zero(Land::Splice, d.S);
    for (std::size_t i = 0; i < z.splice.places(); ++i) {
        z.horizontal.at[i] = ChainMap::zero(d.h_nub().at[i], z.splice.at[i]);
        z.vertical.at[i] = ChainMap::zero(jstar(d.vertex, d.S).at[i], z.splice.at[i]);
    }
    GammaResult g = gamma_qc(z);
    CHECK(check_qc(g.diagram));
    // One rational line for V, one per place for the adeles.
    CHECK(rational_betti(g.diagram.vertex).at(0) == 1 + static_cast<long>(d.splice.places()));
    CHECK(g.diagram.splice == lg(d.nub));
    CHECK(is_valid_map(g.counit, g.diagram, z));
    // Acyclic nub: splice acyclic, vertex unchanged up to homology.
    GammaResult a = gamma_qc(build_adelic(times(3), {3}));
    for (const auto& c : a.diagram.splice.at) CHECK(is_acyclic(c));
    CHECK(is_acyclic(a.diagram.vertex));
}

TEST_CASE("gamma_e and gamma_qce") {
    CospanDiagram d = build_adelic(z0(), {2, 3});
    CHECK(is_iso(gamma_e(d).counit));
    CHECK(is_iso(gamma_qce(d).counit));
    // Q/Z with zero vertex: the splice becomes j_*0 and the nub the torsion fibre of N -> L_g N.
    CospanDiagram t = build_adelic(qz(), S235);
    t.vertex = ChainComplex(Ring::rationals());
    for (std::size_t i = 0; i < t.splice.places(); ++i)
        t.vertical.at[i] = ChainMap::zero(jstar(t.vertex, t.S).at[i], t.splice.at[i]);
    CHECK_FALSE(check_e(t));
    GammaResult e = gamma_e(t);
    CHECK(check_e(e.diagram));
    CHECK(is_valid_map(e.counit, e.diagram, t));
    for (std::size_t i = 0; i < t.nub.places(); ++i) CHECK(homology(e.diagram.nub.at[i]) == homology(t.nub.at[i]));
    GammaResult r = gamma_qce(t);
    CHECK(check_qc(r.diagram));
    CHECK(check_e(r.diagram));
    CHECK(is_valid_map(r.counit, r.diagram, t));
    CHECK(gamma_qce(build_adelic(z0(), S235)).diagram == build_adelic(z0(), S235));
}

TEST_CASE("gamma_ie") {
    CospanDiagram sep = to_separated(build_adelic(q0(), S235));
    GammaResult r = gamma_ie(sep);
    CHECK(is_iso(r.counit));
    CHECK(check_ie(r.diagram));
    // Zeroing one family component and its splice: gamma_ie restores both from j_*V.
    CospanDiagram z = sep;
    z.nub.at[0] = ChainComplex(z.nub.ring(0));
    z.splice.at[0] = ChainComplex(z.splice.ring(0));
    z.horizontal.at[0] = ChainMap::zero(lg(pi(z.nub)).at[0], z.splice.at[0]);
    z.vertical.at[0] = ChainMap::zero(jstar(z.vertex, z.S).at[0], z.splice.at[0]);
    CHECK_FALSE(check_ie(z));
    GammaResult g = gamma_ie(z);
    CHECK(check_ie(g.diagram));
    CHECK(is_valid_map(g.counit, g.diagram, z));
    CHECK(rational_betti(g.diagram.nub.at[0]).at(0) == 1);
    // Zero vertex: the torsion part of the family is untouched.
    CospanDiagram t = to_separated(build_adelic(qz(), S235));
    GammaResult h = gamma_ie(t);
    for (std::size_t i = 0; i < t.nub.places(); ++i) CHECK(homology(h.diagram.nub.at[i]) == homology(t.nub.at[i]));
}

TEST_CASE("make_e and make_f") {
    CospanDiagram e = make_e(rationalize(z0()), S235);
    CHECK(check_qc(e));
    CHECK(check_e(e));
    CHECK(labels(e).vertex == "ℚ");
    CospanDiagram f = make_f(complete(times(2), {2}));
    CHECK(f.vertex.is_zero());
    CHECK_FALSE(is_acyclic(f.nub.at[0]));
    try {
        make_f(complete(z0(), {2}));
        FAIL("expected NonTorsion");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NonTorsion);
    }
    CHECK(cofibre_sequence(build_adelic(z0(), S235)).ok());
}

TEST_CASE("conversions of Q and Q/Z") {
    CospanDiagram q = build_adelic(q0(), S235);
    auto ls = labels(to_separated(q));
    CHECK(ls.vertex == "ℚ");
    CHECK(ls.nub == "{ ℚ_p }_p");
    CHECK(ls.splice == "∏_p ℚ_p");
    auto lc = labels(to_complete(to_separated(q)));
    CHECK(lc.nub == "0");
    CHECK(lc.splice == "0");
    CospanDiagram c = to_complete(to_separated(build_adelic(qz(), S235)));
    CHECK(labels(c).nub == "{ Σ ℤ_p^∧ }_p");
    CHECK(labels(to_adelic(c)).nub == "⊕_p ℤ/p^∞");
    CHECK(to_adelic(build_adelic(demo_input("zero", {}), {2})).nub.is_zero());
}

TEST_CASE("adelic round trip through the separated model") {
    CospanDiagram d = build_adelic(z0(), S235);
    CospanDiagram back = to_adelic(to_separated(d));
    CHECK(quasi_isomorphic(reconstruct(back), z0()));
    CHECK(verify_pullback(back, z0()).overall);
}

TEST_CASE("qc pushforward") {
    CospanDiagram d = build_adelic(z0(), S235);
    CHECK(qc_pushforward(Adjunction::Identity, d) == d);
    CospanDiagram s = qc_pushforward(Adjunction::Sigma, d);
    CHECK(s.flavor == Flavor::Separated);
    CHECK(labels(s).nub == labels(to_separated(d)).nub);
    CHECK(labels(s).splice == labels(to_separated(d)).splice);
    try {
        parse_adjunction("tensor");
        FAIL("expected UndeclaredAdjunction");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::UndeclaredAdjunction);
    }
}

TEST_CASE("reconstruction") {
    CHECK(quasi_isomorphic(reconstruct(build_adelic(z0(), S235)), z0()));
    CHECK(quasi_isomorphic(reconstruct(build_adelic(times(12), {2, 3})), times(12)));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 8; ++i) {
        ChainComplex x = random_perfect_complex(rng);
        CospanDiagram d = build_adelic(x, {7});
        CHECK(quasi_isomorphic(reconstruct(d), x));
        CHECK(verify_pullback(d, x).overall);
    }
}

TEST_CASE("verification detects a missing vertex") {
    CospanDiagram d = build_adelic(z0(), S235);
    d.vertex = ChainComplex(Ring::rationals());
    for (std::size_t i = 0; i < d.splice.places(); ++i)
        d.vertical.at[i] = ChainMap::zero(jstar(d.vertex, d.S).at[i], d.splice.at[i]);
    PullbackReport r = verify_pullback(d, z0());
    CHECK_FALSE(r.overall);
    bool deg0 = false;
    for (const auto& v : r.verdicts) deg0 = deg0 || (!v.exact && v.degree == 0);
    CHECK(deg0);
}

TEST_CASE("support enlargement of diagrams") {
    CospanDiagram a = build_adelic(times(6), {2, 3}), b = build_adelic(times(6), {2, 3, 5});
    CHECK(enlarge_support(a, b.S) == b);
}

TEST_CASE("ascii components") {
    CospanDiagram c = to_complete(to_separated(build_adelic(qz(), S235)));
    for (const auto& place : ascii_components(c.nub)) CHECK(place == std::vector<std::string>{"sigma^1 ZpHat"});
}
