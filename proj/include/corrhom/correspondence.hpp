#pragma once

// Combinatorial multivalued maps between grids, their geometric realization
// as a graph pair in the product grid, and sample-induced maps.

#include <map>
#include <optional>
#include <vector>

#include "corrhom/cubical.hpp"
#include "corrhom/homology.hpp"

namespace corrhom {

// The pair F: (X, A) =: (Y, B), a finite adjacency structure on top cells.
// F' is F restricted to A (values unchanged), so F(A) must land in B.
struct CombinatorialMap {
    GridGeometry source_grid, target_grid;
    std::vector<CellCoord> domain;      // X, sorted
    std::vector<CellCoord> subset_a;    // A subset of X, sorted
    std::vector<CellCoord> codomain;    // Y, sorted
    std::vector<CellCoord> subset_b;    // B subset of Y, sorted
    std::map<CellCoord, std::vector<CellCoord>> values;

    void validate() const;
    const std::vector<CellCoord>& value(const CellCoord& xi) const;
    std::size_t pair_count() const;
};

// Geometric realization: the cubical pair generated by product cells
// {xi x eta : eta in F(xi)} with the subpair over A, together with the
// domain pair (X, A) and codomain pair (Y, B).  X-coordinates precede
// Y-coordinates in the product.
struct GraphPair {
    CubicalPair graph;
    CubicalPair domain_pair;
    CubicalPair codomain_pair;
    std::size_t dim_x = 0, dim_y = 0;
};

GraphPair graph_pair(const CombinatorialMap& m);

// Chain-level projections (F, F') -> (X, A) and (F, F') -> (Y, B):
// a product cell P x Q maps to P under p when Q is a single point and to
// zero otherwise, symmetrically for q.  Both commute with the boundaries.
struct ProjectionChainMaps {
    ChainMap p, q;
};

ProjectionChainMaps projection_chain_maps(const GraphPair& g);

// Finite set of (point, image point) pairs.
struct SampleSet {
    std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;

    std::size_t size() const { return pairs.size(); }
};

enum class UnsampledCellPolicy {
    kError,  // any cell of X without a sample is an error
    kDrop,   // drop such cells from X (and A), shrinking the domain
};

// eta in F^S(xi) iff some sample (x, y) has x in |xi| and y in |eta|
// (closed cells).  Throws EmptyValueError under kError if a domain cell
// receives no sample; under kDrop the unsampled cells are removed and
// reported through `dropped` when given.  Throws OutOfRangeError for
// samples outside |X| or |Y|.
CombinatorialMap sample_induced_map(const SampleSet& samples,
                                    const GridGeometry& source_grid,
                                    const GridGeometry& target_grid,
                                    const std::vector<CellCoord>& domain,
                                    const std::vector<CellCoord>& subset_a,
                                    const std::vector<CellCoord>& codomain,
                                    const std::vector<CellCoord>& subset_b,
                                    UnsampledCellPolicy policy = UnsampledCellPolicy::kError,
                                    std::vector<CellCoord>* dropped = nullptr);

// True iff X_f in X_g, A_f in A_g, and values_f(xi) in values_g(xi) for all
// xi.  Throws GridMismatchError if the grids differ.
bool is_enlargement(const CombinatorialMap& f, const CombinatorialMap& g);

// True iff every sample (x, y) with x in |xi| for some xi in X has
// y in |values(xi)|.
bool contains_samples(const CombinatorialMap& m, const SampleSet& samples);

}  // namespace corrhom
