#include "corrhom/correspondence.hpp"

#include <algorithm>
#include <set>

namespace corrhom {

namespace {

bool sorted_unique(const std::vector<CellCoord>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i])) return false;
    return true;
}

bool contains_cell(const std::vector<CellCoord>& sorted, const CellCoord& c) {
    return std::binary_search(sorted.begin(), sorted.end(), c);
}

}  // namespace

void CombinatorialMap::validate() const {
    source_grid.validate();
    target_grid.validate();
    if (!sorted_unique(domain) || !sorted_unique(subset_a) || !sorted_unique(codomain) ||
        !sorted_unique(subset_b))
        throw Error("combinatorial map: cell lists must be sorted and unique");
    for (const CellCoord& c : domain)
        if (!source_grid.cell_in_range(c))
            throw OutOfRangeError("domain cell outside the source grid");
    for (const CellCoord& c : codomain)
        if (!target_grid.cell_in_range(c))
            throw OutOfRangeError("codomain cell outside the target grid");
    for (const CellCoord& c : subset_a)
        if (!contains_cell(domain, c)) throw Error("A is not a subset of X");
    for (const CellCoord& c : subset_b)
        if (!contains_cell(codomain, c)) throw Error("B is not a subset of Y");
    if (values.size() != domain.size())
        throw Error("values must be given exactly on the domain cells");
    for (const auto& [xi, vals] : values) {
        if (!contains_cell(domain, xi)) throw Error("value assigned outside the domain");
        if (vals.empty()) throw EmptyValueError("empty value set on a domain cell");
        if (!sorted_unique(vals)) throw Error("value sets must be sorted and unique");
        for (const CellCoord& eta : vals)
            if (!contains_cell(codomain, eta))
                throw Error("value cell outside the codomain");
    }
    for (const CellCoord& a : subset_a)
        for (const CellCoord& eta : value(a))
            if (!contains_cell(subset_b, eta))
                throw Error("F(A) is not contained in B");
}

const std::vector<CellCoord>& CombinatorialMap::value(const CellCoord& xi) const {
    auto it = values.find(xi);
    if (it == values.end()) throw Error("cell has no assigned value");
    return it->second;
}

std::size_t CombinatorialMap::pair_count() const {
    std::size_t n = 0;
    for (const auto& [xi, vals] : values) n += vals.size();
    return n;
}

namespace {

ElementaryCube product_top_cell(const CellCoord& xi, const CellCoord& eta) {
    ElementaryCube c;
    c.base.reserve(xi.size() + eta.size());
    for (std::size_t v : xi) c.base.push_back(static_cast<std::int64_t>(v));
    for (std::size_t v : eta) c.base.push_back(static_cast<std::int64_t>(v));
    c.extent.assign(xi.size() + eta.size(), 1);
    return c;
}

}  // namespace

GraphPair graph_pair(const CombinatorialMap& m) {
    m.validate();
    GraphPair g;
    g.dim_x = m.source_grid.dimension();
    g.dim_y = m.target_grid.dimension();
    std::vector<ElementaryCube> total_gens, sub_gens;
    std::set<CellCoord> a_set(m.subset_a.begin(), m.subset_a.end());
    for (const auto& [xi, vals] : m.values) {
        bool in_a = a_set.count(xi) > 0;
        for (const CellCoord& eta : vals) {
            total_gens.push_back(product_top_cell(xi, eta));
            if (in_a) sub_gens.push_back(product_top_cell(xi, eta));
        }
    }
    g.graph.total = CubicalComplex::closure(g.dim_x + g.dim_y, total_gens);
    g.graph.sub = CubicalComplex::closure(g.dim_x + g.dim_y, sub_gens);
    g.domain_pair.total = complex_from_top_cells(m.source_grid, m.domain);
    g.domain_pair.sub = complex_from_top_cells(m.source_grid, m.subset_a);
    g.codomain_pair.total = complex_from_top_cells(m.target_grid, m.codomain);
    g.codomain_pair.sub = complex_from_top_cells(m.target_grid, m.subset_b);
    return g;
}

ProjectionChainMaps projection_chain_maps(const GraphPair& g) {
    ProjectionChainMaps out;
    const std::size_t top = g.graph.total.empty() ? 0 : g.graph.top_dimension();
    out.p.columns.resize(top + 1);
    out.q.columns.resize(top + 1);

    auto factor_index = [&](const ElementaryCube& cube, bool x_part,
                            const CubicalPair& pair,
                            const std::map<ElementaryCube, std::size_t>& rel_index)
        -> std::optional<std::size_t> {
        const std::size_t lo = x_part ? 0 : g.dim_x;
        const std::size_t hi = x_part ? g.dim_x : g.dim_x + g.dim_y;
        const std::size_t olo = x_part ? g.dim_x : 0;
        const std::size_t ohi = x_part ? g.dim_x + g.dim_y : g.dim_x;
        for (std::size_t i = olo; i < ohi; ++i)
            if (cube.extent[i]) return std::nullopt;  // other factor not a point
        ElementaryCube part;
        part.base.assign(cube.base.begin() + lo, cube.base.begin() + hi);
        part.extent.assign(cube.extent.begin() + lo, cube.extent.begin() + hi);
        if (pair.sub.contains(part)) return std::nullopt;  // struck by the subpair
        auto it = rel_index.find(part);
        if (it == rel_index.end())
            throw InternalInconsistencyError("projected cell missing from the pair");
        return it->second;
    };

    // Position of each relative cell of the domain/codomain pairs, per degree.
    std::vector<std::map<ElementaryCube, std::size_t>> dom_index(top + 1),
        cod_index(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        auto dom = g.domain_pair.relative_cells(k);
        for (std::size_t i = 0; i < dom.size(); ++i) dom_index[k][dom[i]] = i;
        auto cod = g.codomain_pair.relative_cells(k);
        for (std::size_t i = 0; i < cod.size(); ++i) cod_index[k][cod[i]] = i;
    }

    for (std::size_t k = 0; k <= top; ++k) {
        auto cells = g.graph.relative_cells(k);
        out.p.columns[k].resize(cells.size());
        out.q.columns[k].resize(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (auto ix = factor_index(cells[i], true, g.domain_pair, dom_index[k]))
                out.p.columns[k][i][*ix] = 1;
            if (auto iy = factor_index(cells[i], false, g.codomain_pair, cod_index[k]))
                out.q.columns[k][i][*iy] = 1;
        }
    }
    return out;
}

CombinatorialMap sample_induced_map(const SampleSet& samples,
                                    const GridGeometry& source_grid,
                                    const GridGeometry& target_grid,
                                    const std::vector<CellCoord>& domain,
                                    const std::vector<CellCoord>& subset_a,
                                    const std::vector<CellCoord>& codomain,
                                    const std::vector<CellCoord>& subset_b,
                                    UnsampledCellPolicy policy,
                                    std::vector<CellCoord>* dropped) {
    source_grid.validate();
    target_grid.validate();
    std::map<CellCoord, std::set<CellCoord>> hit;
    for (const auto& [x, y] : samples.pairs) {
        std::vector<CellCoord> xs, ys;
        for (const CellCoord& c : source_grid.cells_containing(x))
            if (contains_cell(domain, c)) xs.push_back(c);
        for (const CellCoord& c : target_grid.cells_containing(y))
            if (contains_cell(codomain, c)) ys.push_back(c);
        if (xs.empty()) throw OutOfRangeError("sample source point outside |X|");
        if (ys.empty()) throw OutOfRangeError("sample image point outside |Y|");
        for (const CellCoord& xi : xs) hit[xi].insert(ys.begin(), ys.end());
    }
    CombinatorialMap m;
    m.source_grid = source_grid;
    m.target_grid = target_grid;
    m.codomain = codomain;
    m.subset_b = subset_b;
    for (const CellCoord& xi : domain) {
        auto it = hit.find(xi);
        if (it == hit.end()) {
            if (policy == UnsampledCellPolicy::kError)
                throw EmptyValueError("domain cell received no sample");
            if (dropped) dropped->push_back(xi);
            continue;
        }
        m.domain.push_back(xi);
        m.values[xi] = std::vector<CellCoord>(it->second.begin(), it->second.end());
    }
    for (const CellCoord& a : subset_a)
        if (contains_cell(m.domain, a)) m.subset_a.push_back(a);
    m.validate();
    return m;
}

bool is_enlargement(const CombinatorialMap& f, const CombinatorialMap& g) {
    if (!(f.source_grid == g.source_grid) || !(f.target_grid == g.target_grid))
        throw GridMismatchError("enlargement comparison requires identical grids");
    for (const CellCoord& c : f.domain)
        if (!contains_cell(g.domain, c)) return false;
    for (const CellCoord& c : f.subset_a)
        if (!contains_cell(g.subset_a, c)) return false;
    for (const auto& [xi, vals] : f.values) {
        const auto& gv = g.value(xi);
        for (const CellCoord& eta : vals)
            if (!contains_cell(gv, eta)) return false;
    }
    return true;
}

bool contains_samples(const CombinatorialMap& m, const SampleSet& samples) {
    for (const auto& [x, y] : samples.pairs) {
        std::vector<CellCoord> ys = m.target_grid.cells_containing(y);
        for (const CellCoord& xi : m.source_grid.cells_containing(x)) {
            if (!contains_cell(m.domain, xi)) continue;
            const auto& vals = m.value(xi);
            bool ok = false;
            for (const CellCoord& eta : ys)
                if (contains_cell(vals, eta)) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace corrhom
