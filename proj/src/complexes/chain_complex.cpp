#include "fracture/complexes/chain_complex.hpp"

#include "fracture/core/errors.hpp"

#include <set>

namespace fracture {

namespace {

const std::vector<Kind>& empty_kinds() {
    static const std::vector<Kind> e;
    return e;
}

} // namespace

ChainComplex::ChainComplex(Ring ring, std::map<int, std::vector<Kind>> gens, std::map<int, QMatrix> d)
    : ring_(std::move(ring)) {
    for (auto& [n, k] : gens)
        if (!k.empty()) gens_[n] = std::move(k);
    for (auto& [n, m] : d) {
        require(m.rows() == rank(n - 1) && m.cols() == rank(n), ErrorCode::Input,
                "differential d_" + std::to_string(n) + " has wrong shape");
        if (!m.is_zero()) d_[n] = std::move(m);
    }
    validate();
}

ChainComplex ChainComplex::integral(int lo, const std::vector<std::size_t>& ranks,
                                    const std::map<int, IntMatrix>& d) {
    std::map<int, std::vector<Kind>> gens;
    for (std::size_t i = 0; i < ranks.size(); ++i) gens[lo + static_cast<int>(i)] = std::vector<Kind>(ranks[i], Kind::F);
    std::map<int, QMatrix> dq;
    for (const auto& [n, m] : d) dq[n] = to_rational(m);
    return ChainComplex(Ring::integers(), std::move(gens), std::move(dq));
}

std::size_t ChainComplex::rank(int n) const {
    auto it = gens_.find(n);
    return it == gens_.end() ? 0 : it->second.size();
}

const std::vector<Kind>& ChainComplex::kinds(int n) const {
    auto it = gens_.find(n);
    return it == gens_.end() ? empty_kinds() : it->second;
}

QMatrix ChainComplex::d(int n) const {
    auto it = d_.find(n);
    return it == d_.end() ? QMatrix(rank(n - 1), rank(n)) : it->second;
}

std::vector<int> ChainComplex::degrees() const {
    std::vector<int> v;
    for (const auto& [n, k] : gens_) v.push_back(n);
    return v;
}

int ChainComplex::lo() const { return gens_.empty() ? 0 : gens_.begin()->first; }
int ChainComplex::hi() const { return gens_.empty() ? -1 : gens_.rbegin()->first; }

std::size_t ChainComplex::total_rank() const {
    std::size_t t = 0;
    for (const auto& [n, k] : gens_) t += k.size();
    return t;
}

std::vector<std::size_t> ChainComplex::indices(int n, Kind k) const {
    std::vector<std::size_t> v;
    const auto& ks = kinds(n);
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (ks[i] == k) v.push_back(i);
    return v;
}

bool is_kinded_matrix(const Ring& ring, const std::vector<Kind>& src, const std::vector<Kind>& dst,
                      const QMatrix& m) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            const Rat& x = m(i, j);
            if (x == 0) continue;
            if (level(src[j]) > level(dst[i])) return false;
            if (src[j] == Kind::F && dst[i] == Kind::F && !ring.in_lattice(x)) return false;
        }
    return true;
}

void ChainComplex::validate() const {
    ring_.validate();
    for (const auto& [n, ks] : gens_)
        for (Kind k : ks)
            require(level(k) <= level(ring_.max_kind()), ErrorCode::Input,
                    std::string("generator kind ") + kind_char(k) + " not available over " + ring_.name());
    for (const auto& [n, m] : d_) {
        require(is_kinded_matrix(ring_, kinds(n), kinds(n - 1), m), ErrorCode::Input,
                "differential d_" + std::to_string(n) + " is not kind-legal over " + ring_.name());
        if (d_.count(n - 1))
            require((d(n - 1) * m).is_zero(), ErrorCode::Input, "d∘d != 0 at degree " + std::to_string(n));
    }
}

ChainMap::ChainMap(ChainComplex s, ChainComplex t, std::map<int, QMatrix> maps)
    : source(std::move(s)), target(std::move(t)) {
    for (auto& [n, m] : maps) {
        require(m.rows() == target.rank(n) && m.cols() == source.rank(n), ErrorCode::Input,
                "chain map component f_" + std::to_string(n) + " has wrong shape");
        if (!m.is_zero()) f[n] = std::move(m);
    }
    require(commutes(), ErrorCode::NonCommutingSquare, "chain map does not commute with differentials");
}

QMatrix ChainMap::at(int n) const {
    auto it = f.find(n);
    return it == f.end() ? QMatrix(target.rank(n), source.rank(n)) : it->second;
}

std::vector<int> ChainMap::degrees() const {
    std::set<int> s;
    for (int n : source.degrees()) s.insert(n);
    for (int n : target.degrees()) s.insert(n);
    return {s.begin(), s.end()};
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::map<int, QMatrix> m;
    for (int n : c.degrees()) m[n] = QMatrix::identity(c.rank(n));
    return ChainMap(c, c, std::move(m));
}

ChainMap ChainMap::zero(const ChainComplex& s, const ChainComplex& t) { return ChainMap(s, t, {}); }

bool ChainMap::commutes() const {
    for (int n : degrees())
        if (target.d(n) * at(n) != at(n - 1) * source.d(n)) return false;
    return true;
}

bool is_kinded(const ChainMap& f) {
    if (!(f.source.ring() == f.target.ring())) return false;
    for (const auto& [n, m] : f.f)
        if (!is_kinded_matrix(f.source.ring(), f.source.kinds(n), f.target.kinds(n), m)) return false;
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    require(g.source.generators() == f.target.generators(), ErrorCode::Precondition, "maps are not composable");
    std::map<int, QMatrix> m;
    for (int n : f.source.degrees()) m[n] = g.at(n) * f.at(n);
    return ChainMap(f.source, g.target, std::move(m));
}

ChainMap add(const ChainMap& a, const ChainMap& b) {
    std::map<int, QMatrix> m;
    for (int n : a.degrees()) m[n] = a.at(n) + b.at(n);
    return ChainMap(a.source, a.target, std::move(m));
}

ChainMap negate(const ChainMap& a) {
    std::map<int, QMatrix> m;
    for (const auto& [n, x] : a.f) m[n] = -x;
    return ChainMap(a.source, a.target, std::move(m));
}

bool is_identity(const ChainMap& f) {
    if (f.source.generators() != f.target.generators()) return false;
    for (int n : f.source.degrees())
        if (f.at(n) != QMatrix::identity(f.source.rank(n))) return false;
    return true;
}

ChainComplex retag(const ChainComplex& c, const Ring& ring, const std::map<Kind, Kind>& kind_map) {
    std::map<int, std::vector<Kind>> gens;
    for (const auto& [n, ks] : c.generators()) {
        auto& out = gens[n];
        for (Kind k : ks) {
            auto it = kind_map.find(k);
            out.push_back(it == kind_map.end() ? k : it->second);
        }
    }
    return ChainComplex(ring, std::move(gens), c.differentials());
}

ChainComplex retag(const ChainComplex& c, const Ring& ring, Kind (*kind_map)(Kind)) {
    std::map<Kind, Kind> m;
    for (Kind k : {Kind::F, Kind::D, Kind::P}) m[k] = kind_map(k);
    return retag(c, ring, m);
}

} // namespace fracture
