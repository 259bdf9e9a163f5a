#include "corrhom/chain_complex.hpp"

#include <deque>
#include <set>

namespace corrhom {

void SparseChainComplex::add_cell(std::int32_t id, std::int32_t degree,
                                  const SparseChain& boundary) {
    if (id != static_cast<std::int32_t>(degree_.size()))
        throw Error("cells must be added with consecutive ids");
    degree_.push_back(degree);
    cols_.push_back(boundary);
    rows_.emplace_back();
    alive_.push_back(true);
    ++alive_count_;
    for (const auto& [f, v] : boundary) {
        if (f >= id || degree_[f] != degree - 1)
            throw Error("boundary refers to a cell that is not a previously added face");
        rows_[f][id] = v;
    }
}

SparseChain SparseChainComplex::boundary_of(const SparseChain& c) const {
    SparseChain out;
    for (const auto& [cell, v] : c)
        for (const auto& [f, w] : cols_[cell]) chain_add(out, f, v * w);
    return out;
}

void SparseChainComplex::eliminate(std::int32_t a, std::int32_t b) {
    Event ev;
    ev.a = a;
    ev.b = b;
    ev.degree_a = degree_[a];
    ev.lambda = cols_[b].at(a);
    for (const auto& [d, v] : rows_[a])
        if (d != b) ev.row_a.emplace_back(d, v);
    for (const auto& [f, v] : cols_[b])
        if (f != a) ev.col_b.emplace_back(f, v);

    // col_d -= (<dd,a>/lambda) * col_b for every other coface d of a
    for (const auto& [d, ca] : ev.row_a) {
        Int q = ca / ev.lambda;
        for (const auto& [f, v] : cols_[b]) {
            Int nv = -q * v;
            auto [it, inserted] = cols_[d].emplace(f, nv);
            if (!inserted) {
                it->second += nv;
                if (it->second == 0) {
                    cols_[d].erase(it);
                    rows_[f].erase(d);
                    continue;
                }
            }
            rows_[f][d] = cols_[d][f];
        }
    }
    for (std::int32_t cell : {a, b}) {
        for (const auto& [f, v] : cols_[cell]) rows_[f].erase(cell);
        for (const auto& [d, v] : rows_[cell]) cols_[d].erase(cell);
        cols_[cell].clear();
        rows_[cell].clear();
        alive_[cell] = false;
    }
    alive_count_ -= 2;
    events_.push_back(std::move(ev));
}

void SparseChainComplex::reduce() {
    std::deque<std::int32_t> work;
    std::vector<bool> queued(degree_.size(), true);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(degree_.size()); ++i)
        work.push_back(i);
    auto push_touched = [&](const std::set<std::int32_t>& touched) {
        for (std::int32_t t : touched)
            if (alive_[t] && !queued[t]) {
                queued[t] = true;
                work.push_back(t);
            }
    };
    while (true) {
        while (!work.empty()) {
            std::int32_t c = work.front();
            work.pop_front();
            queued[c] = false;
            if (!alive_[c]) continue;
            // coreduction-style pair: c has a single face
            if (cols_[c].size() == 1) {
                auto [a, v] = *cols_[c].begin();
                if (v == 1 || v == -1) {
                    std::set<std::int32_t> touched;
                    for (const auto& [d, w] : rows_[a]) touched.insert(d);
                    for (const auto& [f, w] : cols_[c]) touched.insert(f);
                    for (const auto& [d, w] : rows_[c]) touched.insert(d);
                    eliminate(a, c);
                    push_touched(touched);
                    continue;
                }
            }
            // free-face pair: c has a single coface
            if (rows_[c].size() == 1) {
                auto [b, v] = *rows_[c].begin();
                if (v == 1 || v == -1) {
                    std::set<std::int32_t> touched;
                    for (const auto& [f, w] : cols_[c]) touched.insert(f);
                    for (const auto& [f, w] : cols_[b]) touched.insert(f);
                    for (const auto& [d, w] : rows_[b]) touched.insert(d);
                    eliminate(c, b);
                    push_touched(touched);
                    continue;
                }
            }
        }
        // no free pairs left: lowest-fill unit pivot, ties by (a, b)
        bool found = false;
        std::size_t best_cost = 0;
        std::int32_t best_a = 0, best_b = 0;
        for (std::int32_t b = 0; b < static_cast<std::int32_t>(degree_.size()); ++b) {
            if (!alive_[b]) continue;
            for (const auto& [a, v] : cols_[b]) {
                if (v != 1 && v != -1) continue;
                std::size_t cost = (rows_[a].size() - 1) * (cols_[b].size() - 1);
                if (!found || cost < best_cost ||
                    (cost == best_cost && (a < best_a || (a == best_a && b < best_b)))) {
                    found = true;
                    best_cost = cost;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (!found) return;
        std::set<std::int32_t> touched;
        for (const auto& [d, w] : rows_[best_a]) touched.insert(d);
        for (const auto& [f, w] : cols_[best_b]) touched.insert(f);
        eliminate(best_a, best_b);
        push_touched(touched);
    }
}

std::vector<std::int32_t> SparseChainComplex::surviving_cells(std::int32_t degree) const {
    std::vector<std::int32_t> out;
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(degree_.size()); ++i)
        if (alive_[i] && degree_[i] == degree) out.push_back(i);
    return out;
}

SparseChain SparseChainComplex::to_reduced(SparseChain chain, std::int32_t degree) const {
    for (const Event& ev : events_) {
        if (ev.degree_a == degree) {
            auto it = chain.find(ev.a);
            if (it == chain.end()) continue;
            Int q = it->second / ev.lambda;
            chain.erase(it);
            for (const auto& [f, v] : ev.col_b) chain_add(chain, f, -q * v);
        } else if (ev.degree_a + 1 == degree) {
            chain.erase(ev.b);
        }
    }
    return chain;
}

SparseChain SparseChainComplex::to_original(SparseChain chain, std::int32_t degree) const {
    for (auto it = events_.rbegin(); it != events_.rend(); ++it) {
        const Event& ev = *it;
        if (ev.degree_a + 1 != degree) continue;
        Int s = 0;
        for (const auto& [d, v] : ev.row_a) {
            auto found = chain.find(d);
            if (found != chain.end()) s += found->second * v;
        }
        if (s != 0) chain_add(chain, ev.b, -(s / ev.lambda));
    }
    return chain;
}

}  // namespace corrhom
