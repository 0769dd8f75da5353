#include "fracture/complexes/random.hpp"

#include "fracture/core/snf.hpp"

#include <algorithm>

namespace fracture {

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> u(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = u(rng);
    return m;
}

namespace {

bool bounded(const IntMatrix& m, long b) {
    for (const auto& x : m.entries())
        if (abs(x) > b) return false;
    return true;
}

} // namespace

ChainComplex random_perfect_complex(std::mt19937_64& rng, const RandomComplexParams& p) {
    std::uniform_int_distribution<int> top(0, p.max_degree), rk(0, p.max_rank);
    const int hi = top(rng);
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= hi; ++n) ranks.push_back(rk(rng));
    if (std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; })) ranks[0] = 1;
    std::map<int, IntMatrix> d;
    IntMatrix prev;
    for (int n = 1; n <= hi; ++n) {
        IntMatrix m(ranks[n - 1], ranks[n]);
        if (n == 1) {
            m = random_int_matrix(rng, ranks[0], ranks[1], p.max_entry);
        } else {
            IntMatrix k = integer_kernel(prev);
            for (int attempt = 0; attempt < 20 && k.cols() > 0; ++attempt) {
                IntMatrix c = k * random_int_matrix(rng, k.cols(), ranks[n], 2);
                if (bounded(c, p.max_entry)) {
                    m = c;
                    break;
                }
            }
        }
        prev = m;
        d[n] = m;
    }
    return ChainComplex::integral(0, ranks, d);
}

ChainMap random_chain_map(std::mt19937_64& rng, const ChainComplex& c, long max_entry) {
    std::uniform_int_distribution<long> u(-max_entry, max_entry);
    Rat k(Int(std::to_string(u(rng))));
    std::map<int, QMatrix> h; // h_n : C_n -> C_{n+1}
    for (int n : c.degrees())
        h[n] = to_rational(random_int_matrix(rng, c.rank(n + 1), c.rank(n), max_entry));
    auto H = [&](int n) { return h.count(n) ? h.at(n) : QMatrix(c.rank(n + 1), c.rank(n)); };
    std::map<int, QMatrix> f;
    for (int n : c.degrees()) f[n] = k * QMatrix::identity(c.rank(n)) + c.d(n + 1) * H(n) + H(n - 1) * c.d(n);
    return ChainMap(c, c, f);
}

} // namespace fracture
