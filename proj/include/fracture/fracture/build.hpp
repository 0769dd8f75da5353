#pragma once

#include "fracture/fracture/diagram.hpp"

namespace fracture {

// Primes of the elementary divisors of the F-blocks of the differentials.
Support minimal_support(const ChainComplex& x);

// X (x) (Q -> Q (x) prod Z_p^ <- prod Z_p^) with identity witnesses. S is
// enlarged by minimal_support(X); an empty result becomes {2}.
CospanDiagram build_adelic(const ChainComplex& x, const Support& S);

// e(W): W with its own adelic image as splice and splice_to_nub(j*W) as nub.
CospanDiagram make_e(const ChainComplex& w, const Support& S);
// f(N): the torsion nub alone. Throws NonTorsion unless L_g N is rationally acyclic.
CospanDiagram make_f(const Placewise& nub);

// The ring-level square for the chosen flavor, tensored with X: convenience
// for build_adelic followed by the conversions.
CospanDiagram build(const ChainComplex& x, const Support& S, Flavor flavor);

} // namespace fracture
