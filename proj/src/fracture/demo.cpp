#include "fracture/fracture/demo.hpp"

#include "fracture/complexes/random.hpp"
#include "fracture/core/errors.hpp"

namespace fracture {

std::vector<std::string> demo_names() {
    return {"Z", "hasse-Z", "Q", "Q-mod-Z", "sum-Z-mod-p", "prod-Z-mod-p", "zero", "random"};
}

ChainComplex demo_input(const std::string& name, const Support& S, std::uint64_t seed) {
    const Ring Z = Ring::integers();
    if (name == "Z" || name == "hasse-Z") return ChainComplex(Z, {{0, {Kind::F}}}, {});
    if (name == "Q") return ChainComplex(Z, {{0, {Kind::D}}}, {});
    if (name == "Q-mod-Z") return ChainComplex(Z, {{0, {Kind::D}}, {1, {Kind::F}}}, {{1, QMatrix(1, 1, {Rat(1)})}});
    if (name == "sum-Z-mod-p" || name == "prod-Z-mod-p") {
        // With finite support both are Z / prod_{p in S} p.
        Int m = 1;
        for (long p : S) m *= p;
        return ChainComplex(Z, {{0, {Kind::F}}, {1, {Kind::F}}}, {{1, QMatrix(1, 1, {Rat(m)})}});
    }
    if (name == "zero") return ChainComplex(Z);
    if (name == "random") {
        std::mt19937_64 rng(seed);
        return random_perfect_complex(rng);
    }
    fail(ErrorCode::UnknownDemo, "unknown demo '" + name + "'");
}

} // namespace fracture
