#include "fracture/core/errors.hpp"
#include "fracture/curve/p1.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fracture;

namespace {

P1Point at(long x) { return P1Point::finite(Rat(x)); }

} // namespace

TEST_CASE("trivial and effective divisors over Q") {
    auto k = FieldDescriptor::rationals();
    CohomologyResult r = line_bundle_cohomology(k, {});
    CHECK(r.h0 == 1);
    CHECK(r.h1 == 0);
    REQUIRE(r.h0_basis.size() == 1);
    CHECK(oracle::is_section(k, {}, r.h0_basis[0]));
    DivisorP1 d{{at(0), 3}};
    r = line_bundle_cohomology(k, d);
    CHECK(r.h0 == 4);
    CHECK(r.h1 == 0);
    for (const auto& f : r.h0_basis) CHECK(oracle::is_section(k, d, f));
}

TEST_CASE("negative degree over F7") {
    auto k = FieldDescriptor::prime_field(7);
    CohomologyResult r = line_bundle_cohomology(k, {{P1Point::at_infinity(), -2}});
    CHECK(r.h0 == 0);
    CHECK(r.h1 == 1);
}

TEST_CASE("Cousin and residue routes agree") {
    auto k = FieldDescriptor::rationals();
    auto c = cousin_vs_residue(k, {});
    CHECK(c.h0_cousin == 1);
    CHECK(c.h1_cousin == 0);
    c = cousin_vs_residue(k, {{at(1), -1}});
    CHECK(c.h0_residue == 0);
    CHECK(c.h1_residue == 0);
    c = cousin_vs_residue(k, {{at(0), 2}, {P1Point::at_infinity(), 3}});
    CHECK(c.h0_cousin == 6);
    CHECK(c.h1_cousin == 0);
}

TEST_CASE("Riemann-Roch over both fields") {
    for (auto k : {FieldDescriptor::rationals(), FieldDescriptor::prime_field(7)}) {
        for (long a = -3; a <= 3; ++a) {
            for (long b = -3; b <= 3; ++b) {
                if (a == 0 || b == 0) continue;
                DivisorP1 d{{at(2), a}, {P1Point::at_infinity(), b}};
                auto r = line_bundle_cohomology(k, d);
                CHECK(r.h0 - r.h1 == a + b + 1);
                CHECK(r.h0 == oracle::p1_h0(a + b));
                CHECK(r.h1 == oracle::p1_h1(a + b));
            }
        }
    }
}

TEST_CASE("affine relabelling preserves the dimensions") {
    auto k = FieldDescriptor::prime_field(7);
    DivisorP1 d{{at(1), 2}, {at(3), -4}};
    DivisorP1 e{{at(3 * 1 + 2), 2}, {at((3 * 3 + 2) % 7), -4}};
    auto r = line_bundle_cohomology(k, d), s = line_bundle_cohomology(k, e);
    CHECK(r.h0 == s.h0);
    CHECK(r.h1 == s.h1);
}

TEST_CASE("truncation bounds") {
    auto k = FieldDescriptor::rationals();
    DivisorP1 d{{at(0), 4}};
    CHECK(line_bundle_cohomology(k, d, 6).h0 == 5);
    try {
        line_bundle_cohomology(k, d, 2);
        FAIL("expected a truncation error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Truncation);
    }
}

TEST_CASE("divisor validation") {
    auto k = FieldDescriptor::prime_field(7);
    try {
        validate(k, {{at(1), 1}, {at(8), 1}});
        FAIL("expected duplicate points to be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Input);
    }
    CHECK(parse_field("GF(7)").q == 7);
    CHECK(parse_field("Q").tag == FieldDescriptor::Tag::Rationals);
}
