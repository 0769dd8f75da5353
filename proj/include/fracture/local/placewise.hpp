#pragma once

#include "fracture/complexes/operations.hpp"

#include <vector>

namespace fracture {

// Which product ring a place-indexed family lives over.
//   Nub:    modules over prod Z_p^         (components over PadicZ(p) / ProfiniteNub(S))
//   Family: objects of prod (Z_p^-mod)     (components over PadicZ(p) / ProfiniteFamily(S))
//   Splice: modules over Q (x) prod Z_p^   (components over PadicQ(p) / FiniteAdeles(S))
enum class Land { Nub, Family, Splice };

const char* land_name(Land l);

// One complex per place: the primes of S in order, then the generic place
// standing for every prime outside S.
struct Placewise {
    Land land = Land::Nub;
    Support S;
    std::vector<ChainComplex> at;

    static Placewise zero(Land land, const Support& S);
    static Ring ring_at(Land land, const Support& S, std::size_t place);

    std::size_t places() const { return S.size() + 1; }
    std::size_t generic_index() const { return S.size(); }
    const ChainComplex& generic() const { return at.back(); }
    Ring ring(std::size_t place) const { return ring_at(land, S, place); }
    bool is_zero() const;
    void validate() const;
    friend bool operator==(const Placewise&, const Placewise&) = default;
};

using NubModule = Placewise;       // land == Nub
using SeparatedFamily = Placewise; // land == Family

struct PlacewiseMap {
    std::vector<ChainMap> at;
    const ChainMap& operator[](std::size_t i) const { return at[i]; }
    Placewise source() const;
    Placewise target() const;
    friend bool operator==(const PlacewiseMap&, const PlacewiseMap&) = default;
};

PlacewiseMap identity(const Placewise& x);
PlacewiseMap compose(const PlacewiseMap& g, const PlacewiseMap& f);
bool is_kinded_iso(const PlacewiseMap& f);
bool is_rational_iso(const PlacewiseMap& f);
bool is_quasi_iso(const PlacewiseMap& f);
bool is_rational_quasi_iso(const PlacewiseMap& f);

// Z -> corners.
ChainComplex rationalize(const ChainComplex& c);
ChainComplex complete_at(const ChainComplex& c, long p);
Placewise complete(const ChainComplex& x, const Support& S); // X (x) prod Z_p^ as a nub
// Local pieces for reconstruction: Z_(p) at primes, Z[1/S] at the generic place.
Placewise localize(const ChainComplex& x, const Support& S);
Ring reconstruction_ring(const Support& S, std::size_t place);

// L_g on nubs (and on families through pi), with matching maps.
Placewise lg(const Placewise& n);
PlacewiseMap lg(const PlacewiseMap& f);
// j_* of a rational complex, as a splice.
Placewise jstar(const ChainComplex& v, const Support& S);
// Splice data read back in nub land: splice F -> nub D, splice D -> nub P.
Placewise splice_to_nub(const Placewise& q);
PlacewiseMap splice_to_nub(const PlacewiseMap& f);

Placewise sigma(const Placewise& nub);
Placewise pi(const Placewise& family);
PlacewiseMap sigma(const PlacewiseMap& f);
PlacewiseMap pi(const PlacewiseMap& f);
PlacewiseMap unit_sigma_pi(const Placewise& nub);      // N -> pi sigma N
PlacewiseMap counit_sigma_pi(const Placewise& family); // sigma pi F -> F

// L_0 on families: the D summands are dropped (quotient by their span).
Placewise ell(const Placewise& family);
PlacewiseMap unit_ell(const Placewise& family); // F -> ell F, the projection

// e_p N: the stored component for p in S, the generic template otherwise.
ChainComplex idempotent_piece(const Placewise& n, long p);

// Generic component restated over another support containing S.
Placewise enlarge_support(const Placewise& x, const Support& bigger);

} // namespace fracture
