#pragma once

#include "fracture/complexes/operations.hpp"

#include <optional>

namespace fracture {

// A kinded basis of the submodule W ∩ (lattice^F + envelopes) of a kinded module;
// columns of `basis` are vectors in the ambient coordinates.
struct KindedBasis {
    QMatrix basis;
    std::vector<Kind> kinds;
};
KindedBasis kinded_kernel_basis(const Ring& ring, const QMatrix& W, const std::vector<Kind>& ambient);

struct PullbackHints {
    std::optional<bool> surjective; // sum map A + B -> C kinded-onto in every degree
    std::optional<bool> f_iso, g_iso;
};

// Pullback of A -f-> C <-g- B over one ring. Strict (degreewise kinded kernel)
// when the sum map is kinded-surjective, otherwise the homotopy pullback.
// f p_A - g p_B = dh + hd with h = `homotopy` (zero in the strict case).
struct PullbackResult {
    ChainComplex object;
    ChainMap to_a, to_b;
    bool strict = true;
    std::map<int, QMatrix> homotopy; // h_n : X_n -> C_{n+1}
};
PullbackResult kinded_pullback(const ChainMap& f, const ChainMap& g, PullbackHints hints = {});

bool sum_map_surjective(const ChainMap& f, const ChainMap& g);

// Homotopy pushout of B <-f- A -g-> C: P_n = B_n + C_n + A_{n-1},
// d(b, c, a) = (db + f a, dc - g a, -da). i_B f - i_C g = dh + hd.
struct PushoutResult {
    ChainComplex object;
    ChainMap from_b, from_c;
    std::map<int, QMatrix> homotopy; // h_n : A_n -> P_{n+1}
};
PushoutResult homotopy_pushout(const ChainMap& f, const ChainMap& g);

} // namespace fracture
