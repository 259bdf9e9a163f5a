#pragma once

// Sparse integer chain complexes with homology-preserving eliminations.
//
// Each elimination removes a pair (a, b) with <db, a> = ±1 and updates the
// remaining boundary so that homology is unchanged.  The recorded event log
// lets chains be transported both ways between the original complex and the
// reduced one, which is how homology generators and chain maps computed on
// the small reduced complex are expressed on the original cells.

#include <cstdint>
#include <map>
#include <vector>

#include "corrhom/zmodule.hpp"

namespace corrhom {

using SparseChain = std::map<std::int32_t, Int>;

inline void chain_add(SparseChain& c, std::int32_t cell, const Int& v) {
    if (v == 0) return;
    auto [it, inserted] = c.emplace(cell, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) c.erase(it);
    }
}

class SparseChainComplex {
  public:
    // Cells carry explicit ids; faces must be added before their cofaces.
    void add_cell(std::int32_t id, std::int32_t degree, const SparseChain& boundary);

    std::size_t cell_count() const { return degree_.size(); }
    std::int32_t degree_of(std::int32_t id) const { return degree_[id]; }
    bool alive(std::int32_t id) const { return alive_[id]; }
    std::size_t alive_count() const { return alive_count_; }

    // Boundary of a chain in the current (possibly reduced) complex.
    SparseChain boundary_of(const SparseChain& c) const;
    const SparseChain& column(std::int32_t id) const { return cols_[id]; }

    // Eliminate pairs until no incidence of absolute value 1 remains.
    // Free pairs (single-entry row or column) are consumed first via a
    // worklist; remaining pivots are chosen by minimal Markowitz fill.
    void reduce();

    std::vector<std::int32_t> surviving_cells(std::int32_t degree) const;

    // Transport along the recorded eliminations.
    SparseChain to_reduced(SparseChain chain, std::int32_t degree) const;
    SparseChain to_original(SparseChain chain, std::int32_t degree) const;

  private:
    struct Event {
        std::int32_t a, b;
        std::int32_t degree_a;
        Int lambda;
        std::vector<std::pair<std::int32_t, Int>> row_a;  // cofaces of a, without b
        std::vector<std::pair<std::int32_t, Int>> col_b;  // faces of b, without a
    };

    void eliminate(std::int32_t a, std::int32_t b);

    std::vector<std::int32_t> degree_;
    std::vector<SparseChain> cols_, rows_;
    std::vector<bool> alive_;
    std::size_t alive_count_ = 0;
    std::vector<Event> events_;
};

}  // namespace corrhom
