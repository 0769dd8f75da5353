#pragma once

#include "fracture/core/matrix.hpp"

#include <string>
#include <vector>

namespace fracture {

// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
    IntMatrix U, D, V;
    long rank = 0;
    std::vector<Int> diagonal() const; // the first `rank` entries of D
};

// Pivot: nonzero entry of minimal absolute value, ties to lowest row then column.
SmithForm smith_normal_form(const IntMatrix& A);

struct FgAbGroup {
    long free_rank = 0;
    std::vector<Int> invariant_factors; // d_1 | d_2 | ..., each >= 2

    bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string to_string() const;
    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

// Cokernel of the presentation: rows are relations, columns are generators.
FgAbGroup fg_invariants(const IntMatrix& relations);

// Normal form of Z^r + the cyclic groups Z/c_i (any order, c_i >= 1).
FgAbGroup make_group(long free_rank, const std::vector<Int>& cyclic_orders);

// Columns form a Z-basis of {x in Z^n : A x = 0} (a saturated lattice).
IntMatrix integer_kernel(const IntMatrix& A);

// Determinant of a square integer matrix (Bareiss).
Int determinant(const IntMatrix& A);

} // namespace fracture
