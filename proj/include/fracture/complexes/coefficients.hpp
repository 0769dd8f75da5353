#pragma once

#include "fracture/core/integer.hpp"

#include <string>

namespace fracture {

enum class RingTag {
    IntegersZ,
    RationalsQ,
    PadicZ,
    PadicQ,
    ProfiniteNub,
    FiniteAdeles,
    // Internal: the generic factor of a separated family (Z_q, Q_q for q outside S).
    ProfiniteFamily,
    // Internal: Z[1/S], the generic place of a local reconstruction.
    SIntegers,
};

// Every generator of a module carries a kind. Its meaning depends on the ring:
//   IntegersZ          F = Z          D = Q
//   PadicZ(p)          F = Z_p        D = Q_p
//   ProfiniteNub(S)    F = prod Z_q   D = Q (x) prod Z_q   P = prod Q_q
//   ProfiniteFamily(S) F = Z_q        D = Q_q
//   RationalsQ         F = Q
//   PadicQ(p)          F = Q_p
//   FiniteAdeles(S)    F = Q (x) prod Z_q   D = prod Q_q
//   SIntegers(S)       F = Z[1/S]     D = Q
// (q ranges over primes outside S.) Maps may only raise the level F < D < P.
enum class Kind { F = 0, D = 1, P = 2 };

inline int level(Kind k) { return static_cast<int>(k); }
char kind_char(Kind k);
Kind parse_kind(const std::string& s);

struct Ring {
    RingTag tag = RingTag::IntegersZ;
    long p = 0;  // PadicZ, PadicQ
    Support S;   // ProfiniteNub, FiniteAdeles, ProfiniteFamily, SIntegers

    static Ring integers() { return {RingTag::IntegersZ, 0, {}}; }
    static Ring rationals() { return {RingTag::RationalsQ, 0, {}}; }
    static Ring padic_integers(long p) { return {RingTag::PadicZ, p, {}}; }
    static Ring padic_numbers(long p) { return {RingTag::PadicQ, p, {}}; }
    static Ring profinite_nub(Support S) { return {RingTag::ProfiniteNub, 0, std::move(S)}; }
    static Ring finite_adeles(Support S) { return {RingTag::FiniteAdeles, 0, std::move(S)}; }
    static Ring profinite_family(Support S) { return {RingTag::ProfiniteFamily, 0, std::move(S)}; }
    static Ring s_integers(Support S) { return {RingTag::SIntegers, 0, std::move(S)}; }

    friend bool operator==(const Ring&, const Ring&) = default;

    void validate() const;
    // Highest kind a generator may have.
    Kind max_kind() const;
    // True when the F-lattice is a field, so F->F entries are unconstrained.
    bool lattice_is_field() const;
    // Membership of an F->F matrix entry in the lattice ring.
    bool in_lattice(const Rat& x) const;
    // Is a unit of the lattice ring (used for surjectivity over it).
    bool is_lattice_unit(const Int& d) const;
    // Torsion factor of Z/d after base change to the lattice ring (1 if none).
    Int local_torsion(const Int& d) const;
    std::string name() const;
};

std::string tag_name(RingTag t);
RingTag parse_tag(const std::string& s);

// Declared ring morphisms for base change, and the kind each source kind goes to.
bool has_morphism(const Ring& from, const Ring& to);
Kind map_kind(const Ring& from, const Ring& to, Kind k);

} // namespace fracture
