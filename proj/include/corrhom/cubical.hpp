#pragma once

// Elementary cubes, cubical complexes generated by top-dimensional grid
// cells, relative pairs, and boundary operators.

#include <cstdint>
#include <map>
#include <vector>

#include "corrhom/zmodule.hpp"

namespace corrhom {

// Index of a top-dimensional cell: one subdivision index per axis.
using CellCoord = std::vector<std::size_t>;

// Uniform rectangular subdivision of a box.
struct GridGeometry {
    std::vector<double> lower, upper;       // per-axis closed interval
    std::vector<std::size_t> divisions;     // per-axis subdivision count

    std::size_t dimension() const { return divisions.size(); }
    double cell_width(std::size_t axis) const;
    // Closed realization of cell c on the given axis.
    std::pair<double, double> cell_interval(std::size_t axis, std::size_t index) const;
    bool cell_in_range(const CellCoord& c) const;
    // All cells whose closed realization contains the point (closed
    // membership: a boundary coordinate selects every incident cell).
    std::vector<CellCoord> cells_containing(const std::vector<double>& point) const;
    bool contains_point(const std::vector<double>& point) const;

    void validate() const;
    bool operator==(const GridGeometry& o) const = default;
};

// Product of degenerate points and unit intervals on the integer lattice.
// base[i] is the left endpoint on axis i; extent[i] == 1 for an interval.
struct ElementaryCube {
    std::vector<std::int64_t> base;
    std::vector<std::uint8_t> extent;

    std::size_t ambient_dimension() const { return base.size(); }
    std::size_t dim() const;
    // Faces with incidence signs: for Q = I1 x ... x Id the boundary is
    // sum_i (-1)^{e_i} (front_i - back_i) with e_i the number of
    // nondegenerate factors before axis i.
    std::vector<std::pair<ElementaryCube, int>> boundary() const;

    auto operator<=>(const ElementaryCube& o) const = default;
};

class CubicalComplex {
  public:
    CubicalComplex() = default;

    // Closure of the given generating cubes (any dimensions).
    static CubicalComplex closure(std::size_t ambient_dim,
                                  const std::vector<ElementaryCube>& generators);

    std::size_t ambient_dimension() const { return ambient_dim_; }
    std::size_t top_dimension() const;
    std::size_t size(std::size_t degree) const;
    std::size_t total_size() const;
    const std::vector<ElementaryCube>& cells(std::size_t degree) const;
    // Position of the cube in its degree's cell list, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const ElementaryCube& c) const;
    bool contains(const ElementaryCube& c) const;
    bool empty() const { return total_size() == 0; }

    std::vector<ElementaryCube> top_cells() const;

  private:
    std::size_t ambient_dim_ = 0;
    std::vector<std::vector<ElementaryCube>> by_degree_;
    std::map<ElementaryCube, std::size_t> index_;
};

struct CubicalPair {
    CubicalComplex total;  // X
    CubicalComplex sub;    // A (subcomplex of X)

    void validate() const;
    // Cells of X not in A, in X's deterministic order.
    std::vector<ElementaryCube> relative_cells(std::size_t degree) const;
    std::size_t relative_size(std::size_t degree) const;
    std::size_t top_dimension() const { return total.top_dimension(); }
};

// Complex generated by full-dimensional grid cells.  Throws OutOfRangeError
// for coordinates outside the grid.
CubicalComplex complex_from_top_cells(const GridGeometry& grid,
                                      const std::vector<CellCoord>& tops);

// Matrix of the boundary operator from degree-k cells to degree-(k-1) cells
// in the complex's cell order; entries in {-1, 0, 1}.
IntegerMatrix boundary_matrix(const CubicalComplex& c, std::size_t degree);

// Boundary on cells of X not in A, with images projected by striking A-cells.
IntegerMatrix relative_boundary(const CubicalPair& pair, std::size_t degree);

}  // namespace corrhom
