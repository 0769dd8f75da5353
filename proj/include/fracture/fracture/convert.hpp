#pragma once

#include "fracture/fracture/gamma.hpp"

#include <string>

namespace fracture {

// Declared nub adjunctions F -| r.
//   Identity:   nub -> nub
//   Sigma:      nub -> family,  sigma -| pi
//   Completion: family -> family, L_0 per prime -| inclusion
enum class Adjunction { Identity, Sigma, Completion };
Adjunction parse_adjunction(const std::string& name); // UndeclaredAdjunction otherwise
const char* adjunction_name(Adjunction a);

// F applied to nubs and to nub maps, the right adjoint r on objects and maps,
// and the unit N -> rFN / counit FrM -> M.
Placewise apply(Adjunction a, const Placewise& n);
PlacewiseMap apply(Adjunction a, const PlacewiseMap& f);
Placewise right_adjoint(Adjunction a, const Placewise& m);
PlacewiseMap right_adjoint(Adjunction a, const PlacewiseMap& f);
PlacewiseMap adjunction_unit(Adjunction a, const Placewise& n);
PlacewiseMap adjunction_counit(Adjunction a, const Placewise& m);

// F_* on qc diagrams: (V, FN, h(FN)) with vertical h(eta) beta^-1 alpha.
CospanDiagram qc_pushforward(Adjunction a, const CospanDiagram& y);
DiagramMap qc_pushforward(Adjunction a, const DiagramMap& f);
// r on diagrams keeps the splice and the witnesses.
CospanDiagram pullback_along(Adjunction a, const CospanDiagram& z);
DiagramMap pullback_along(Adjunction a, const DiagramMap& f);
DiagramMap pushforward_unit(Adjunction a, const CospanDiagram& y);   // Y -> r F_* Y
DiagramMap pushforward_counit(Adjunction a, const CospanDiagram& z); // F_* r Z -> Z

CospanDiagram to_separated(const CospanDiagram& d);
CospanDiagram to_complete(const CospanDiagram& d);
CospanDiagram to_adelic(const CospanDiagram& d);
CospanDiagram convert(const CospanDiagram& d, Flavor target);

} // namespace fracture
