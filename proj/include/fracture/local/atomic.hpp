#pragma once

#include "fracture/core/integer.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace fracture {

enum class AtomType { Z, Q, Torsion, Prufer, ZpHat, QpHat };

struct Atom {
    AtomType type = AtomType::Z;
    long p = 0; // Torsion, Prufer, ZpHat, QpHat
    long k = 0; // Torsion exponent

    static Atom z() { return {AtomType::Z, 0, 0}; }
    static Atom q() { return {AtomType::Q, 0, 0}; }
    static Atom torsion(long p, long k) { return {AtomType::Torsion, p, k}; }
    static Atom prufer(long p) { return {AtomType::Prufer, p, 0}; }
    static Atom zp_hat(long p) { return {AtomType::ZpHat, p, 0}; }
    static Atom qp_hat(long p) { return {AtomType::QpHat, p, 0}; }

    std::string to_string() const;
    auto operator<=>(const Atom&) const = default;
};

// Finite formal direct sum of atoms, kept in canonical (sorted) order.
class AtomicModule {
  public:
    AtomicModule() = default;
    AtomicModule(std::initializer_list<std::pair<Atom, long>> terms);

    void add(const Atom& a, long multiplicity = 1);
    const std::map<Atom, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::string to_string() const;
    friend bool operator==(const AtomicModule&, const AtomicModule&) = default;

  private:
    std::map<Atom, long> terms_;
};

struct DerivedCompletion {
    AtomicModule L0, L1;
};

// Left derived functors of p-adic completion, atom by atom.
DerivedCompletion derived_completion(const AtomicModule& m, long p);
// Same, rejecting atoms whose prime lies outside the ambient support.
DerivedCompletion derived_completion(const AtomicModule& m, long p, const Support& S);

// L0 M = M and L1 M = 0.
bool is_l_complete(const AtomicModule& m, long p);

} // namespace fracture
