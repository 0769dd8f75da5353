#pragma once

#include "fracture/complexes/coefficients.hpp"
#include "fracture/core/matrix.hpp"

#include <map>
#include <vector>

namespace fracture {

// Bounded complex of finite-rank modules; d_n : C_n -> C_{n-1} is a
// rank(n-1) x rank(n) rational matrix. Only nonzero degrees and nonzero
// differentials are stored, so structural equality is meaningful.
class ChainComplex {
  public:
    ChainComplex() = default;
    explicit ChainComplex(Ring ring) : ring_(std::move(ring)) {}
    ChainComplex(Ring ring, std::map<int, std::vector<Kind>> gens, std::map<int, QMatrix> d);

    // Integral complex with F generators.
    static ChainComplex integral(int lo, const std::vector<std::size_t>& ranks,
                                 const std::map<int, IntMatrix>& d);

    const Ring& ring() const { return ring_; }
    const std::map<int, std::vector<Kind>>& generators() const { return gens_; }
    const std::map<int, QMatrix>& differentials() const { return d_; }

    std::size_t rank(int n) const;
    const std::vector<Kind>& kinds(int n) const;
    QMatrix d(int n) const;
    std::vector<int> degrees() const; // degrees with nonzero rank, ascending
    int lo() const;
    int hi() const;
    bool is_zero() const { return gens_.empty(); }
    std::size_t total_rank() const;
    // Indices in degree n whose kind is k.
    std::vector<std::size_t> indices(int n, Kind k) const;

    // Checks d∘d = 0, kind legality of every entry, lattice entries for F->F.
    void validate() const;

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

  private:
    Ring ring_;
    std::map<int, std::vector<Kind>> gens_;
    std::map<int, QMatrix> d_;
};

struct ChainMap {
    ChainComplex source, target;
    std::map<int, QMatrix> f; // f_n : source_n -> target_n, target.rank(n) x source.rank(n)

    ChainMap() = default;
    ChainMap(ChainComplex s, ChainComplex t, std::map<int, QMatrix> maps);

    QMatrix at(int n) const;
    std::vector<int> degrees() const;

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& s, const ChainComplex& t);

    bool commutes() const;
    friend bool operator==(const ChainMap&, const ChainMap&) = default;
};

// Kind legality of a matrix between two kinded modules over one ring.
bool is_kinded_matrix(const Ring& ring, const std::vector<Kind>& src, const std::vector<Kind>& dst,
                      const QMatrix& m);
bool is_kinded(const ChainMap& f);

ChainMap compose(const ChainMap& g, const ChainMap& f); // g ∘ f
ChainMap add(const ChainMap& a, const ChainMap& b);
ChainMap negate(const ChainMap& a);
bool is_identity(const ChainMap& f);

// Same matrices, regarded over another ring with kinds remapped.
ChainComplex retag(const ChainComplex& c, const Ring& ring, Kind (*kind_map)(Kind));
ChainComplex retag(const ChainComplex& c, const Ring& ring, const std::map<Kind, Kind>& kind_map);

} // namespace fracture
