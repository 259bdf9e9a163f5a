#pragma once

// Homology of cubical pairs with explicit cycle-representative generators,
// and the homomorphism induced on homology by a chain map.

#include <map>
#include <memory>
#include <vector>

#include "corrhom/cubical.hpp"
#include "corrhom/zmodule.hpp"

namespace corrhom {

// Chain on the relative cells of a fixed degree, keyed by position in
// CubicalPair::relative_cells(degree).
using RelChain = std::map<std::size_t, Int>;

// Chain map between two pairs: columns[k][i] is the image of the i-th
// relative k-cell of the source as a chain on the target's relative k-cells.
struct ChainMap {
    std::vector<std::vector<RelChain>> columns;

    const RelChain& column(std::size_t degree, std::size_t i) const;
    RelChain apply(std::size_t degree, const RelChain& c) const;
};

class HomologyModule {
  public:
    std::size_t max_degree() const;
    const AbelianPresentation& group(std::size_t k) const;
    const std::vector<RelChain>& generators(std::size_t k) const;

    // Coordinates of a cycle's class over group(k)'s generators.
    // Throws if the chain is not a relative cycle.
    std::vector<Int> class_of(std::size_t k, const RelChain& cycle) const;

    // Relative boundary of a degree-k chain (on relative (k-1)-cells).
    RelChain boundary_of(std::size_t k, const RelChain& c) const;

    std::size_t relative_cell_count(std::size_t k) const;

    // Betti number and torsion coefficients in degree k.
    std::size_t betti(std::size_t k) const { return group(k).free_rank(); }

  private:
    friend HomologyModule homology(const CubicalPair& pair);
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

HomologyModule homology(const CubicalPair& pair);

// Per-degree matrices of a homomorphism between homology modules, expressed
// on the modules' generators (torsion-aware).
struct HomHomomorphism {
    std::vector<IntegerMatrix> matrices;  // [k]: target gens x source gens

    const IntegerMatrix& matrix(std::size_t k) const;
    std::size_t max_degree() const { return matrices.empty() ? 0 : matrices.size() - 1; }
};

// Image of each source generator expressed in target generator coordinates.
// Throws NotAChainMapError if f does not commute with the relative
// boundaries; InternalInconsistencyError if an image cycle cannot be
// expressed (impossible for a true chain map).
HomHomomorphism induced_homomorphism(const ChainMap& f, const HomologyModule& source,
                                     const HomologyModule& target);

}  // namespace corrhom
