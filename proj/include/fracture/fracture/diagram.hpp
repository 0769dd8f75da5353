#pragma once

#include "fracture/local/placewise.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fracture {

enum class Flavor { Adelic, Separated, Complete };
const char* flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

// Cospan section  j*V --vertical--> Q <--horizontal-- h(N),
// with h = L_g on a nub (Adelic) or L_g ∘ pi on a family (Separated, Complete).
struct CospanDiagram {
    Flavor flavor = Flavor::Adelic;
    Support S;
    ChainComplex vertex{Ring::rationals()};
    Placewise nub;
    Placewise splice;
    PlacewiseMap vertical;
    PlacewiseMap horizontal;

    // pi of the family, or the nub itself.
    Placewise assembled_nub() const;
    Placewise h_nub() const { return lg(nub); }
    void validate() const;
    friend bool operator==(const CospanDiagram&, const CospanDiagram&) = default;
};

// Builds the witness maps from raw matrices, one map per place.
CospanDiagram make_diagram(Flavor flavor, const Support& S, ChainComplex vertex, Placewise nub, Placewise splice,
                           const std::vector<std::map<int, QMatrix>>& vertical,
                           const std::vector<std::map<int, QMatrix>>& horizontal);

struct DiagramFlags {
    bool qc = false, e = false, ie = false, complete = false;
    bool weak_qc = false, weak_e = false, weak_ie = false;
};

// Strict flags test the witnesses for kinded isomorphism (ie: rational
// invertibility per idempotent piece); weak flags test quasi-isomorphism.
bool check_qc(const CospanDiagram& d, bool weak = false);
bool check_e(const CospanDiagram& d, bool weak = false);
bool check_ie(const CospanDiagram& d, bool weak = false);
// Every family component has only free and bounded torsion homology.
bool check_complete(const CospanDiagram& d);
DiagramFlags flags(const CospanDiagram& d);

// A map of diagrams; the two squares commute up to the optional homotopies
//   Q-map ∘ vertical_1 - vertical_2 ∘ j*(vertex map) = dH + Hd,
//   Q-map ∘ horizontal_1 - horizontal_2 ∘ h(nub map) = dH + Hd.
struct DiagramMap {
    ChainMap vertex;
    PlacewiseMap nub;
    PlacewiseMap splice;
    std::vector<std::map<int, QMatrix>> vertical_homotopy;   // empty: strict
    std::vector<std::map<int, QMatrix>> horizontal_homotopy; // empty: strict
};

DiagramMap identity(const CospanDiagram& d);
DiagramMap compose(const DiagramMap& g, const DiagramMap& f, const CospanDiagram& middle);
bool is_valid_map(const DiagramMap& m, const CospanDiagram& source, const CospanDiagram& target);
bool is_strict(const DiagramMap& m);
// Degreewise kinded isomorphism in every component.
bool is_iso(const DiagramMap& m);
bool is_identity(const DiagramMap& m);

// Restates a diagram over a larger support (prime places split off the generic one).
CospanDiagram enlarge_support(const CospanDiagram& d, const Support& bigger);
// The generic vertex map j*f for f : V -> V'.
PlacewiseMap jstar(const ChainMap& f, const Support& S);

} // namespace fracture
