#pragma once

#include "fracture/complexes/chain_complex.hpp"
#include "fracture/core/snf.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fracture {

// Homology of one degree of a kinded complex:
//   free_rank copies of the F ring, divisible[k] copies of the envelope k,
//   quotients[(b, a)] copies of envelope b modulo envelope a (a = F: modulo the lattice),
//   plus bounded torsion from the lattice ring.
struct LocalGroup {
    long free_rank = 0;
    std::vector<Int> torsion; // invariant factors, each >= 2
    std::map<Kind, long> divisible;
    std::map<std::pair<Kind, Kind>, long> quotients;

    bool is_zero() const;
    long divisible_count(Kind k) const;
    long quotient_count(Kind b, Kind a) const;
    std::string to_string() const;
    friend bool operator==(const LocalGroup&, const LocalGroup&) = default;
};

using GradedGroup = std::map<int, LocalGroup>; // nonzero degrees only

GradedGroup homology(const ChainComplex& c);
bool is_acyclic(const ChainComplex& c);

// Perfect integral complexes: H_n as finitely generated abelian groups.
std::map<int, FgAbGroup> integral_homology(const ChainComplex& c);

// Dimensions of homology of the underlying rational complex (kinds forgotten).
std::map<int, long> rational_betti(const ChainComplex& c);

// Betti numbers mod p of the F-block quotient complex; F->F entries must be p-integral.
std::map<int, long> mod_p_betti_of_lattice(const ChainComplex& c, long p);

// Euler characteristic of the rational complex.
long euler_characteristic(const ChainComplex& c);

std::string to_string(const GradedGroup& g);

} // namespace fracture
