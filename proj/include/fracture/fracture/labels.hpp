#pragma once

#include "fracture/fracture/diagram.hpp"

#include <string>
#include <vector>

namespace fracture {

// Homology of a corner written in terms of the standard modules, e.g.
// "ℚ ⊗ ∏_p ℤ_p^∧", "{ Σ ℤ_p^∧ }_p", "⊕_p ℤ/p^∞ ⊕ ℤ/2". Zero is "0".
std::string vertex_label(const ChainComplex& v);
std::string nub_label(const Placewise& n);    // nub or family
std::string splice_label(const Placewise& q);

struct CornerLabels {
    std::string vertex, nub, splice;
};
CornerLabels labels(const CospanDiagram& d);

// Per-place ASCII atoms of a nub or family, e.g. {"sigma^1 ZpHat"}.
std::vector<std::vector<std::string>> ascii_components(const Placewise& n);

} // namespace fracture
