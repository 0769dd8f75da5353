#include "fracture/complexes/homology.hpp"
#include "fracture/complexes/operations.hpp"
#include "fracture/core/errors.hpp"
#include "fracture/local/atomic.hpp"
#include "fracture/local/placewise.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fracture;

namespace {

ChainComplex z0() { return ChainComplex(Ring::integers(), {{0, {Kind::F}}}, {}); }

ChainComplex times(long m) {
    return ChainComplex(Ring::integers(), {{0, {Kind::F}}, {1, {Kind::F}}}, {{1, QMatrix(1, 1, {Rat(m)})}});
}

AtomicModule one(Atom a) { return AtomicModule{{a, 1}}; }

} // namespace

TEST_CASE("rationalization") {
    CHECK(rational_betti(rationalize(z0())).at(0) == 1);
    CHECK(is_acyclic(rationalize(times(2))));
    CHECK(is_acyclic(rationalize(times(6))));
}

TEST_CASE("completion at a prime") {
    LocalGroup h = homology(complete_at(z0(), 2)).at(0);
    CHECK(h.free_rank == 1);
    CHECK(is_acyclic(complete_at(times(3), 2)));
    CHECK(complete_at(ChainComplex(Ring::integers()), 5).is_zero());
}

TEST_CASE("derived completion table") {
    auto c = derived_completion(one(Atom::prufer(3)), 3);
    CHECK(c.L0.is_zero());
    CHECK(c.L1 == one(Atom::zp_hat(3)));
    c = derived_completion(one(Atom::q()), 2);
    CHECK(c.L0.is_zero());
    CHECK(c.L1.is_zero());
    c = derived_completion(one(Atom::z()), 5);
    CHECK(c.L0 == one(Atom::zp_hat(5)));
    CHECK(c.L1.is_zero());
    CHECK(is_l_complete(one(Atom::torsion(2, 3)), 2));
    CHECK_FALSE(is_l_complete(one(Atom::z()), 2));
}

TEST_CASE("derived completion agrees with towers") {
    for (long p : {2L, 3L}) {
        for (Atom a : {Atom::z(), Atom::q(), Atom::torsion(2, 2), Atom::torsion(3, 1), Atom::prufer(2),
                       Atom::prufer(3), Atom::zp_hat(2), Atom::qp_hat(3)}) {
            auto t = oracle::tower_completion(a, p);
            auto c = derived_completion(one(a), p);
            CHECK(c.L0 == t.l0);
            CHECK(c.L1 == t.l1);
        }
    }
}

TEST_CASE("derived completion rejects primes outside the support") {
    try {
        derived_completion(one(Atom::prufer(7)), 2, Support{2, 3});
        FAIL("expected rejection");
    } catch (const Error&) {
    }
}

TEST_CASE("idempotent pieces") {
    Placewise n = complete(z0(), {2, 3, 5});
    for (long p : {2L, 3L, 5L}) CHECK(homology(idempotent_piece(n, p)).at(0).free_rank == 1);
    CHECK(homology(idempotent_piece(n, 7)).at(0).free_rank == 1);
    Placewise t = complete(times(2), {2, 3});
    CHECK(is_acyclic(idempotent_piece(t, 3)));
    CHECK_FALSE(is_acyclic(idempotent_piece(t, 2)));
    CHECK(idempotent_piece(Placewise::zero(Land::Nub, {2}), 2).is_zero());
}

TEST_CASE("sigma and pi") {
    Placewise n = complete(z0(), {2, 3});
    PlacewiseMap u = unit_sigma_pi(n);
    CHECK(is_kinded_iso(u));
    CHECK(pi(sigma(n)) == n);
    Placewise f = sigma(complete(times(2), {2, 3}));
    CHECK(pi(f).at[0] == f.at[0]);
}

TEST_CASE("L_g and j_*") {
    Placewise n = complete(z0(), {2, 3});
    Placewise q = lg(n);
    CHECK(q.land == Land::Splice);
    CHECK(q == jstar(rationalize(z0()), {2, 3}));
    CHECK(splice_to_nub(q).land == Land::Nub);
}

TEST_CASE("support enlargement of placewise modules") {
    Placewise a = complete(z0(), {2}), b = complete(z0(), {2, 3});
    CHECK(enlarge_support(a, {2, 3}) == b);
}
