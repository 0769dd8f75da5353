#pragma once

#include "fracture/complexes/homology.hpp"

#include <optional>

namespace fracture {

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
// Sigma^k: (Sigma^k C)_n = C_{n-k}, differential multiplied by (-1)^k.
ChainComplex shift(const ChainComplex& c, int k);

// Cone_n = T_n + S_{n-1}, d(t, s) = (dt + f s, -ds).
ChainComplex cone(const ChainMap& f);
// Homotopy pullback of A -f-> C <-g- B: X_n = A_n + B_n + C_{n+1},
// d(a, b, c) = (da, db, f a - g b - dc).
ChainComplex homotopy_pullback(const ChainMap& f, const ChainMap& g);
// Fib_n = S_n + T_{n+1}.
ChainComplex fibre(const ChainMap& f);

// Inclusions and projections of the pieces of those constructions.
ChainMap cone_inclusion(const ChainMap& f);       // T -> Cone(f)
ChainMap pullback_projection(const ChainMap& f, const ChainMap& g, int which); // 0: A, 1: B
ChainMap fibre_projection(const ChainMap& f);     // Fib(f) -> S

ChainComplex base_change(const ChainComplex& c, const Ring& target);
ChainMap base_change(const ChainMap& f, const Ring& target);

struct QuasiIsoReport {
    bool quasi_iso = true;
    std::map<int, LocalGroup> cone_homology; // nonzero degrees of H(cone f)
};
// Over one ring: homology of the cone vanishes.
QuasiIsoReport is_quasi_iso(const ChainMap& f);

// Matrix-level tests over one ring.
bool is_kinded_iso_matrix(const Ring& ring, const std::vector<Kind>& src, const std::vector<Kind>& dst,
                          const QMatrix& m);
// Surjective onto the target module: same-kind blocks are onto, over the lattice ring for F.
bool is_kinded_surjective(const Ring& ring, const std::vector<Kind>& src, const std::vector<Kind>& dst,
                          const QMatrix& m);
bool is_kinded_iso(const ChainMap& f);
bool is_rational_iso(const ChainMap& f); // every degree invertible over Q
std::optional<ChainMap> inverse(const ChainMap& f);

// Total complex of the square X -a-> V -c-> Q <-e- N <-b- X over one ring:
// the cone of X -> holim(V -> Q <- N). Acyclic iff the square is a homotopy
// pullback. An optional homotopy h_n : X_n -> Q_{n+1} with
// c a - e b = dh + hd is folded in; without it the square must commute.
ChainComplex total_of_square(const ChainMap& a, const ChainMap& b, const ChainMap& c, const ChainMap& e,
                             const std::map<int, QMatrix>* homotopy = nullptr);

// Homotopy check: f - g = d h + h d, with h_n : S_n -> T_{n+1}.
bool is_homotopy(const ChainMap& f, const ChainMap& g, const std::map<int, QMatrix>& h);

} // namespace fracture
