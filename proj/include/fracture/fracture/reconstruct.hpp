#pragma once

#include "fracture/fracture/diagram.hpp"

#include <string>

namespace fracture {

// Place label: "p=2", ..., "generic".
std::string place_label(const Support& S, std::size_t place);

// The pullback V x_Q N at one place, over Z_(p) or Z[1/S].
ChainComplex local_fibre(const CospanDiagram& d, std::size_t place, bool with_vertex = true);

// Glues placewise homology into a minimal integral complex:
// per degree Z^c, [Z -d-> Z] per torsion factor, Q^a, [Z -1-> Q]^b.
// ReassemblyFailure names the first place whose free, divisible or
// quotient counts disagree with the generic place.
ChainComplex reconstruct(const CospanDiagram& d);
// V := 0: the fibre of the horizontal witness, reassembled over Z.
ChainComplex horizontal_fibre(const CospanDiagram& d);
ChainComplex minimal_model(const std::map<int, LocalGroup>& h);

// Integral complexes are quasi-isomorphic iff their kinded homology agrees (Z is hereditary).
bool quasi_isomorphic(const ChainComplex& a, const ChainComplex& b);

struct PullbackVerdict {
    std::string place;
    int degree = 0;
    bool exact = true;
};

struct PullbackReport {
    std::vector<PullbackVerdict> verdicts;
    std::map<std::string, bool> local_acyclic;  // kinded cone of X -> holim at each place
    std::map<std::string, bool> rational;       // the same, rationally
    std::map<std::string, bool> mod_p;          // F-block mod p at primes of S
    bool overall = true;
};

// X -> V and X -> N are the canonical legs (identity, or the projection onto F
// generators for complete diagrams). A square that does not commute is reported
// inexact in the failing degrees.
PullbackReport verify_pullback(const CospanDiagram& d, const ChainComplex& x);

// The cofibre sequence f(N') -> D -> e(V) for a qce diagram, checked cornerwise:
// each cone(A -> B) -> C is a quasi-isomorphism and the composite is null.
struct CofibreReport {
    bool composite_null = true;
    bool vertex = true, nub = true, splice = true;
    bool ok() const { return composite_null && vertex && nub && splice; }
};
CofibreReport cofibre_sequence(const CospanDiagram& d);

} // namespace fracture
