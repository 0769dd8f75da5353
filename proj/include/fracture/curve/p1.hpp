#pragma once

#include "fracture/core/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fracture {

struct FieldDescriptor {
    enum class Tag { Rationals, PrimeField } tag = Tag::Rationals;
    long q = 0;

    static FieldDescriptor rationals() { return {}; }
    static FieldDescriptor prime_field(long q);
    std::string name() const;
};
FieldDescriptor parse_field(const std::string& s); // "Q", "F7", "GF(7)"

// A k-rational point of P^1.
struct P1Point {
    bool infinity = false;
    Rat value;
    static P1Point at_infinity() { return {true, 0}; }
    static P1Point finite(Rat x) { return {false, std::move(x)}; }
    std::string to_string() const;
};

using DivisorP1 = std::vector<std::pair<P1Point, long>>;

// Checks nonzero multiplicities and distinct points (after reduction mod q).
void validate(const FieldDescriptor& k, const DivisorP1& d);
long degree(const DivisorP1& d);
long default_tail_bound(const DivisorP1& d); // max(|deg D| + 4, max |n_x| + 2)

struct RationalFunction {
    std::vector<std::string> num, den; // coefficients, constant term first
};

struct CohomologyResult {
    long h0 = 0, h1 = 0;
    std::vector<RationalFunction> h0_basis;
    long tail_bound = 0;
};

// Kernel and cokernel of the truncated residue sequence
//   K_B x prod_x O_x(D) -> prod_x K_x  over x in supp D + {inf} + one witness point.
// Truncation if tail_bound < max |n_x|; TruncationUnstable if the answer moves at tail_bound + 2.
CohomologyResult line_bundle_cohomology(const FieldDescriptor& k, const DivisorP1& d,
                                        std::optional<long> tail_bound = std::nullopt);

struct CousinComparison {
    long h0_residue = 0, h1_residue = 0;
    long h0_cousin = 0, h1_cousin = 0;
};
// The Cousin route K_B -> (+)_x K_x / O_x(D); Mismatch if the dimensions differ.
CousinComparison cousin_vs_residue(const FieldDescriptor& k, const DivisorP1& d,
                                   std::optional<long> tail_bound = std::nullopt);

} // namespace fracture
