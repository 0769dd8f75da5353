#pragma once

#include "fracture/complexes/chain_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracture {

// Named abelian groups as complexes over Z; "random" draws a perfect complex
// from the seed. UnknownDemo otherwise.
ChainComplex demo_input(const std::string& name, const Support& S, std::uint64_t seed = 0);
std::vector<std::string> demo_names();
inline Support default_demo_support() { return {2, 3, 5}; }

} // namespace fracture
