#pragma once

#include "fracture/complexes/chain_complex.hpp"

#include <cstdint>
#include <random>

namespace fracture {

struct RandomComplexParams {
    int max_degree = 3;  // degrees 0..max_degree
    int max_rank = 3;
    long max_entry = 9;
};

// Perfect complex over Z with d_{n+1} = (integer kernel of d_n) * (small random matrix).
ChainComplex random_perfect_complex(std::mt19937_64& rng, const RandomComplexParams& p = {});
// k * id + dh + hd for a random integral h: a chain endomorphism of c.
ChainMap random_chain_map(std::mt19937_64& rng, const ChainComplex& c, long max_entry = 3);
IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound);

} // namespace fracture
