#pragma once

#include "fracture/fracture/diagram.hpp"

namespace fracture {

// A right-adjoint replacement together with its counit R(D) -> D.
struct GammaResult {
    CospanDiagram diagram;
    DiagramMap counit;
};

// Splice := L_g N, vertex := V x_Q L_g N.
GammaResult gamma_qc(const CospanDiagram& d);
// Splice := j*V, nub := N x_Q j*V (computed placewise).
GammaResult gamma_e(const CospanDiagram& d);
GammaResult gamma_qce(const CospanDiagram& d);
// Separated-shaped input: family := sigma(pi M x_Q j*V), splice := the
// pushout of j*V <- L_g M' -> L_g pi sigma M'.
GammaResult gamma_ie(const CospanDiagram& d);

} // namespace fracture
