#include "corrhom/homology.hpp"

#include <algorithm>

#include "corrhom/chain_complex.hpp"

namespace corrhom {

const RelChain& ChainMap::column(std::size_t degree, std::size_t i) const {
    static const RelChain kEmpty;
    if (degree >= columns.size() || i >= columns[degree].size()) return kEmpty;
    return columns[degree][i];
}

RelChain ChainMap::apply(std::size_t degree, const RelChain& c) const {
    RelChain out;
    for (const auto& [i, v] : c)
        for (const auto& [j, w] : column(degree, i)) {
            auto [it, inserted] = out.emplace(j, v * w);
            if (!inserted) {
                it->second += v * w;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

struct HomologyModule::Impl {
    std::size_t max_degree = 0;
    std::vector<std::size_t> offsets;      // degree -> first global cell id
    std::vector<std::size_t> cell_counts;  // degree -> relative cell count
    SparseChainComplex reduced;            // after reduction (keeps event log)
    std::vector<std::vector<SparseChain>> original_columns;  // [k][i] boundary

    struct Degree {
        AbelianPresentation group;
        std::vector<RelChain> generators;
        std::vector<std::int32_t> leftover;          // surviving cell ids
        IntegerMatrix cycle_basis;                   // leftover x z
        IntegerMatrix projection;                    // group coords from cycle coords
    };
    std::vector<Degree> degrees;

    std::int32_t global_id(std::size_t k, std::size_t i) const {
        return static_cast<std::int32_t>(offsets[k] + i);
    }

    RelChain to_rel(std::size_t k, const SparseChain& c) const {
        RelChain out;
        for (const auto& [id, v] : c)
            out.emplace(static_cast<std::size_t>(id) - offsets[k], v);
        return out;
    }
    SparseChain to_global(std::size_t k, const RelChain& c) const {
        SparseChain out;
        for (const auto& [i, v] : c) {
            if (i >= cell_counts[k]) throw Error("chain refers to a cell out of range");
            out.emplace(global_id(k, i), v);
        }
        return out;
    }
};

HomologyModule homology(const CubicalPair& pair) {
    pair.validate();
    auto impl = std::make_shared<HomologyModule::Impl>();
    std::size_t top = pair.total.empty() ? 0 : pair.top_dimension();
    impl->max_degree = top;

    // Enumerate relative cells degree by degree with global ids.
    std::vector<std::vector<ElementaryCube>> rel(top + 1);
    std::map<ElementaryCube, std::int32_t> ids;
    impl->offsets.resize(top + 1);
    impl->cell_counts.resize(top + 1);
    std::size_t next = 0;
    for (std::size_t k = 0; k <= top; ++k) {
        rel[k] = pair.relative_cells(k);
        impl->offsets[k] = next;
        impl->cell_counts[k] = rel[k].size();
        for (const ElementaryCube& c : rel[k])
            ids[c] = static_cast<std::int32_t>(next++);
    }

    impl->original_columns.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        impl->original_columns[k].resize(rel[k].size());
        for (std::size_t i = 0; i < rel[k].size(); ++i) {
            SparseChain bnd;
            for (const auto& [face, sign] : rel[k][i].boundary()) {
                auto it = ids.find(face);
                if (it != ids.end()) chain_add(bnd, it->second, sign);
            }
            impl->original_columns[k][i] = bnd;
            impl->reduced.add_cell(impl->global_id(k, i), static_cast<std::int32_t>(k),
                                   bnd);
        }
    }
    impl->reduced.reduce();

    impl->degrees.resize(top + 1);
    // Dense boundary of the reduced complex, degree by degree.
    std::vector<std::vector<std::int32_t>> leftover(top + 2);
    for (std::size_t k = 0; k <= top; ++k)
        leftover[k] = impl->reduced.surviving_cells(static_cast<std::int32_t>(k));
    auto dense_boundary = [&](std::size_t k) {
        const auto& rows = leftover[k - 1];
        const auto& cols = leftover[k];
        std::map<std::int32_t, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
        IntegerMatrix m(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [f, v] : impl->reduced.column(cols[j]))
                m.at(row_index.at(f), j) = v;
        return m;
    };

    for (std::size_t k = 0; k <= top; ++k) {
        auto& deg = impl->degrees[k];
        deg.leftover = leftover[k];
        const std::size_t n = leftover[k].size();
        if (n == 0) {
            deg.group = AbelianPresentation({}, 0);
            deg.cycle_basis = IntegerMatrix(0, 0);
            deg.projection = IntegerMatrix(0, 0);
            continue;
        }
        IntegerMatrix z = (k == 0 || leftover[k - 1].empty())
                              ? IntegerMatrix::identity(n)
                              : kernel_basis(dense_boundary(k));
        IntegerMatrix boundaries_above(n, 0);
        if (k + 1 <= top && !leftover[k + 1].empty())
            boundaries_above = dense_boundary(k + 1);
        auto w = solve_exact(z, boundaries_above);
        if (!w)
            throw InternalInconsistencyError("boundaries do not lie among cycles");
        QuotientPresentation qp = present_quotient_lattice(z.cols(), *w);
        deg.group = qp.group;
        deg.cycle_basis = z;
        deg.projection = qp.projection;
        IntegerMatrix gen_coords = z * qp.section;  // leftover coords per generator
        for (std::size_t j = 0; j < qp.group.generators(); ++j) {
            SparseChain reduced_chain;
            for (std::size_t i = 0; i < n; ++i)
                chain_add(reduced_chain, leftover[k][i], gen_coords.at(i, j));
            SparseChain orig = impl->reduced.to_original(std::move(reduced_chain),
                                                         static_cast<std::int32_t>(k));
            deg.generators.push_back(impl->to_rel(k, orig));
        }
    }

    HomologyModule m;
    m.impl_ = std::move(impl);
    return m;
}

std::size_t HomologyModule::max_degree() const { return impl_->max_degree; }

const AbelianPresentation& HomologyModule::group(std::size_t k) const {
    static const AbelianPresentation kTrivial;
    if (k >= impl_->degrees.size()) return kTrivial;
    return impl_->degrees[k].group;
}

const std::vector<RelChain>& HomologyModule::generators(std::size_t k) const {
    static const std::vector<RelChain> kEmpty;
    if (k >= impl_->degrees.size()) return kEmpty;
    return impl_->degrees[k].generators;
}

std::size_t HomologyModule::relative_cell_count(std::size_t k) const {
    return k < impl_->cell_counts.size() ? impl_->cell_counts[k] : 0;
}

RelChain HomologyModule::boundary_of(std::size_t k, const RelChain& c) const {
    if (k == 0 || k >= impl_->cell_counts.size()) return {};
    RelChain out;
    for (const auto& [i, v] : c) {
        if (i >= impl_->cell_counts[k]) throw Error("chain refers to a cell out of range");
        for (const auto& [f, w] : impl_->original_columns[k][i]) {
            auto [it, inserted] = out.emplace(f - impl_->offsets[k - 1], v * w);
            if (!inserted) {
                it->second += v * w;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

std::vector<Int> HomologyModule::class_of(std::size_t k, const RelChain& cycle) const {
    if (k > impl_->max_degree) {
        if (!cycle.empty()) throw Error("nonzero chain in an empty degree");
        return {};
    }
    if (!boundary_of(k, cycle).empty()) throw Error("class_of: chain is not a cycle");
    const auto& deg = impl_->degrees[k];
    SparseChain red = impl_->reduced.to_reduced(impl_->to_global(k, cycle),
                                                static_cast<std::int32_t>(k));
    const std::size_t n = deg.leftover.size();
    std::vector<Int> coords(n);
    {
        std::map<std::int32_t, std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i) pos[deg.leftover[i]] = i;
        for (const auto& [id, v] : red) {
            auto it = pos.find(id);
            if (it == pos.end())
                throw InternalInconsistencyError("reduced cycle hits a removed cell");
            coords[it->second] = v;
        }
    }
    auto x = solve_exact(deg.cycle_basis, coords);
    if (!x) throw InternalInconsistencyError("cycle not in the cycle lattice");
    return deg.group.reduce(deg.projection.apply(*x));
}

const IntegerMatrix& HomHomomorphism::matrix(std::size_t k) const {
    static const IntegerMatrix kEmpty;
    return k < matrices.size() ? matrices[k] : kEmpty;
}

HomHomomorphism induced_homomorphism(const ChainMap& f, const HomologyModule& source,
                                     const HomologyModule& target) {
    const std::size_t top = std::max(source.max_degree(), target.max_degree());
    // The map must commute with the relative boundaries.
    for (std::size_t k = 1; k <= source.max_degree(); ++k) {
        for (std::size_t i = 0; i < source.relative_cell_count(k); ++i) {
            RelChain cell{{i, Int(1)}};
            RelChain lhs = f.apply(k - 1, source.boundary_of(k, cell));
            RelChain rhs = target.boundary_of(k, f.column(k, i));
            if (lhs != rhs)
                throw NotAChainMapError("chain map does not commute with the boundary in degree " +
                                        std::to_string(k));
        }
    }
    HomHomomorphism h;
    h.matrices.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        const auto& gens = source.generators(k);
        IntegerMatrix m(target.group(k).generators(), gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            std::vector<Int> cls = target.class_of(k, f.apply(k, gens[j]));
            m.set_col(j, cls);
        }
        // torsion well-definedness: order * image must vanish in the target
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Int d = source.group(k).order_of(j);
            if (d == 0) continue;
            std::vector<Int> scaled = m.col(j);
            for (Int& v : scaled) v *= d;
            if (!target.group(k).is_zero(scaled))
                throw InternalInconsistencyError(
                    "induced map violates a torsion generator's order");
        }
        h.matrices[k] = std::move(m);
    }
    return h;
}

}  // namespace corrhom
