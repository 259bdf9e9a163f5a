#include "corrhom/cubical.hpp"

#include <algorithm>
#include <cmath>

namespace corrhom {

double GridGeometry::cell_width(std::size_t axis) const {
    return (upper[axis] - lower[axis]) / static_cast<double>(divisions[axis]);
}

std::pair<double, double> GridGeometry::cell_interval(std::size_t axis,
                                                      std::size_t index) const {
    double w = cell_width(axis);
    return {lower[axis] + static_cast<double>(index) * w,
            lower[axis] + static_cast<double>(index + 1) * w};
}

bool GridGeometry::cell_in_range(const CellCoord& c) const {
    if (c.size() != dimension()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] >= divisions[i]) return false;
    return true;
}

std::vector<CellCoord> GridGeometry::cells_containing(
    const std::vector<double>& point) const {
    if (point.size() != dimension())
        throw OutOfRangeError("point dimension does not match the grid");
    std::vector<std::vector<std::size_t>> per_axis(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) {
        double w = cell_width(i);
        double t = (point[i] - lower[i]) / w;
        if (t < 0.0 || t > static_cast<double>(divisions[i])) return {};
        double fl = std::floor(t);
        if (t == fl) {
            // exactly on a subdivision line: both incident cells
            auto k = static_cast<std::size_t>(fl);
            if (k >= 1) per_axis[i].push_back(k - 1);
            if (k < divisions[i]) per_axis[i].push_back(k);
        } else {
            auto k = static_cast<std::size_t>(fl);
            if (k >= divisions[i]) k = divisions[i] - 1;
            per_axis[i].push_back(k);
        }
    }
    std::vector<CellCoord> out{{}};
    for (std::size_t i = 0; i < dimension(); ++i) {
        std::vector<CellCoord> next;
        for (const CellCoord& prefix : out)
            for (std::size_t k : per_axis[i]) {
                CellCoord c = prefix;
                c.push_back(k);
                next.push_back(std::move(c));
            }
        out = std::move(next);
    }
    return out;
}

bool GridGeometry::contains_point(const std::vector<double>& point) const {
    if (point.size() != dimension()) return false;
    for (std::size_t i = 0; i < dimension(); ++i)
        if (point[i] < lower[i] || point[i] > upper[i]) return false;
    return true;
}

void GridGeometry::validate() const {
    if (lower.size() != divisions.size() || upper.size() != divisions.size())
        throw Error("grid: per-axis data sizes disagree");
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (divisions[i] < 1) throw Error("grid: divisions must be at least 1");
        if (!(lower[i] < upper[i])) throw Error("grid: degenerate bounds");
    }
}

std::size_t ElementaryCube::dim() const {
    std::size_t d = 0;
    for (std::uint8_t e : extent) d += e;
    return d;
}

std::vector<std::pair<ElementaryCube, int>> ElementaryCube::boundary() const {
    std::vector<std::pair<ElementaryCube, int>> out;
    int sign = 1;
    for (std::size_t i = 0; i < extent.size(); ++i) {
        if (!extent[i]) continue;
        ElementaryCube front = *this, back = *this;
        front.extent[i] = 0;
        front.base[i] += 1;
        back.extent[i] = 0;
        out.emplace_back(std::move(front), sign);
        out.emplace_back(std::move(back), -sign);
        sign = -sign;
    }
    return out;
}

CubicalComplex CubicalComplex::closure(std::size_t ambient_dim,
                                       const std::vector<ElementaryCube>& generators) {
    CubicalComplex c;
    c.ambient_dim_ = ambient_dim;
    std::map<ElementaryCube, std::size_t> seen;  // cube -> degree
    std::vector<ElementaryCube> stack(generators.begin(), generators.end());
    while (!stack.empty()) {
        ElementaryCube cur = std::move(stack.back());
        stack.pop_back();
        if (cur.base.size() != ambient_dim)
            throw Error("cube ambient dimension mismatch");
        auto [it, inserted] = seen.emplace(cur, cur.dim());
        if (!inserted) continue;
        for (auto& [face, sign] : cur.boundary()) stack.push_back(std::move(face));
    }
    c.by_degree_.assign(ambient_dim + 1, {});
    for (const auto& [cube, deg] : seen) c.by_degree_[deg].push_back(cube);
    // std::map iteration is already sorted, so each degree list is in
    // lexicographic (base, extent) order.
    for (std::size_t d = 0; d <= ambient_dim; ++d)
        for (std::size_t i = 0; i < c.by_degree_[d].size(); ++i)
            c.index_[c.by_degree_[d][i]] = i;
    return c;
}

std::size_t CubicalComplex::top_dimension() const {
    for (std::size_t d = by_degree_.size(); d-- > 0;)
        if (!by_degree_[d].empty()) return d;
    return 0;
}

std::size_t CubicalComplex::size(std::size_t degree) const {
    return degree < by_degree_.size() ? by_degree_[degree].size() : 0;
}

std::size_t CubicalComplex::total_size() const {
    std::size_t n = 0;
    for (const auto& v : by_degree_) n += v.size();
    return n;
}

const std::vector<ElementaryCube>& CubicalComplex::cells(std::size_t degree) const {
    static const std::vector<ElementaryCube> kEmpty;
    return degree < by_degree_.size() ? by_degree_[degree] : kEmpty;
}

std::size_t CubicalComplex::index_of(const ElementaryCube& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? npos : it->second;
}

bool CubicalComplex::contains(const ElementaryCube& c) const {
    return index_.find(c) != index_.end();
}

std::vector<ElementaryCube> CubicalComplex::top_cells() const {
    std::vector<ElementaryCube> out;
    std::size_t d = top_dimension();
    out = cells(d);
    return out;
}

void CubicalPair::validate() const {
    if (sub.ambient_dimension() != total.ambient_dimension() && !sub.empty())
        throw Error("pair: ambient dimensions differ");
    for (std::size_t d = 0; d <= sub.top_dimension(); ++d)
        for (const ElementaryCube& c : sub.cells(d))
            if (!total.contains(c)) throw Error("pair: A is not a subcomplex of X");
}

std::vector<ElementaryCube> CubicalPair::relative_cells(std::size_t degree) const {
    std::vector<ElementaryCube> out;
    for (const ElementaryCube& c : total.cells(degree))
        if (!sub.contains(c)) out.push_back(c);
    return out;
}

std::size_t CubicalPair::relative_size(std::size_t degree) const {
    return relative_cells(degree).size();
}

CubicalComplex complex_from_top_cells(const GridGeometry& grid,
                                      const std::vector<CellCoord>& tops) {
    grid.validate();
    std::vector<ElementaryCube> gens;
    gens.reserve(tops.size());
    for (const CellCoord& t : tops) {
        if (!grid.cell_in_range(t))
            throw OutOfRangeError("top cell outside the grid divisions");
        ElementaryCube c;
        c.base.assign(t.begin(), t.end());
        c.extent.assign(t.size(), 1);
        gens.push_back(std::move(c));
    }
    return CubicalComplex::closure(grid.dimension(), gens);
}

IntegerMatrix boundary_matrix(const CubicalComplex& c, std::size_t degree) {
    if (degree == 0) return IntegerMatrix(0, c.size(0));
    const auto& cols = c.cells(degree);
    IntegerMatrix m(c.size(degree - 1), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [face, sign] : cols[j].boundary()) {
            std::size_t i = c.index_of(face);
            if (i == CubicalComplex::npos)
                throw InternalInconsistencyError("complex not closed under faces");
            m.at(i, j) += sign;
        }
    return m;
}

IntegerMatrix relative_boundary(const CubicalPair& pair, std::size_t degree) {
    std::vector<ElementaryCube> cols = pair.relative_cells(degree);
    std::vector<ElementaryCube> rows =
        degree == 0 ? std::vector<ElementaryCube>{} : pair.relative_cells(degree - 1);
    std::map<ElementaryCube, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [face, sign] : cols[j].boundary()) {
            auto it = row_index.find(face);
            if (it != row_index.end()) m.at(it->second, j) += sign;
        }
    return m;
}

}  // namespace corrhom
