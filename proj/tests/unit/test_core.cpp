#include "fracture/core/adele.hpp"
#include "fracture/core/errors.hpp"
#include "fracture/core/linalg.hpp"
#include "fracture/core/padic.hpp"
#include "fracture/core/snf.hpp"
#include "fracture/complexes/random.hpp"
#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fracture;

namespace {

IntMatrix im(std::size_t r, std::size_t c, std::vector<long> v) {
    std::vector<Int> e(v.begin(), v.end());
    return IntMatrix(r, c, e);
}

std::vector<Int> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("smith normal form of small matrices") {
    CHECK(smith_normal_form(IntMatrix::identity(2)).D == IntMatrix::identity(2));
    SmithForm s = smith_normal_form(im(2, 2, {2, 4, 6, 8}));
    CHECK(s.D == im(2, 2, {2, 0, 0, 4}));
    CHECK(s.U * im(2, 2, {2, 4, 6, 8}) * s.V == s.D);
    CHECK(smith_normal_form(IntMatrix(3, 2)).D.is_zero());
    CHECK(oracle::invariant_factors_by_minors(im(2, 2, {2, 4, 6, 8})) == ints({2, 4}));
}

TEST_CASE("smith form agrees with the minors oracle") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        IntMatrix a = random_int_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 6);
        SmithForm s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        auto d = s.diagonal();
        for (auto& x : d) x = abs(x);
        CHECK(d == oracle::invariant_factors_by_minors(a));
        CHECK(static_cast<std::size_t>(s.rank) == oracle::rank_by_minors(a));
    }
}

TEST_CASE("finitely generated groups from presentations") {
    CHECK(fg_invariants(im(1, 1, {6})) == FgAbGroup{0, ints({6})});
    CHECK(fg_invariants(im(2, 2, {2, 0, 0, 1})) == FgAbGroup{0, ints({2})});
    CHECK(fg_invariants(IntMatrix(0, 2)) == FgAbGroup{2, {}});
    CHECK(make_group(1, ints({2, 3})) == FgAbGroup{1, ints({6})});
}

TEST_CASE("integer kernel and determinant") {
    IntMatrix a = im(1, 2, {2, 4});
    IntMatrix k = integer_kernel(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK(determinant(im(2, 2, {1, 2, 3, 4})) == -2);
}

TEST_CASE("p-adic arithmetic") {
    auto a = PadicApprox::from_integer(3, 2, 5), b = PadicApprox::from_integer(5, 2, 5);
    CHECK((a + b).residue() == 8);
    CHECK(PadicApprox::from_integer(3, 5, 3).inv().residue() == 42);
    try {
        PadicApprox::from_integer(5, 5, 3).inv();
        FAIL("expected a non-unit error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonUnit);
    }
    auto h = PadicApprox::from_rational(Rat(1, 3), 2, 10);
    CHECK((h * PadicApprox::from_integer(3, 2, 10)).agrees(PadicApprox::from_integer(1, 2, 10)));
}

TEST_CASE("adele elements are closed under the ring operations") {
    Support S{2, 3};
    auto x = AdeleElement::from_rational(S, Rat(1, 6), 8);
    auto y = AdeleElement::from_rational(S, Rat(6), 8);
    CHECK((x * y).agrees(AdeleElement::from_rational(S, Rat(1), 8)));
    CHECK((x + x).agrees(AdeleElement::from_rational(S, Rat(1, 3), 8)));
}

TEST_CASE("rational and prime-field elimination") {
    QMatrix m(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)});
    CHECK(rank(m) == 1);
    CHECK(kernel(m).cols() == 1);
    PrimeField f{7};
    FMatrix<PrimeField> g(2, 2, {1, 2, 3, 6});
    CHECK(fracture::rank(f, g) == 1);
    CHECK(f.mul(f.inv(3), 3) == 1);
}

TEST_CASE("support helpers") {
    CHECK(next_prime(5) == 7);
    CHECK(normalize_support({5, 2, 2}) == Support{2, 5});
    CHECK(valuation(Rat(12), 2) == 2);
    CHECK(valuation(Rat(1, 9), 3) == -2);
    CHECK(rat_string(parse_rat("-3/6")) == "-1/2");
}
