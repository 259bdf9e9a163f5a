#include "corrhom/zmodule.hpp"

#include <algorithm>

namespace corrhom {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntegerMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error("from_rows: ragged rows");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& v : e_)
        if (v != 0) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<Int> IntegerMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void IntegerMatrix::set_col(std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product: shape mismatch");
    IntegerMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw Error("matrix apply: shape mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

IntegerMatrix IntegerMatrix::hcat(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
        throw Error("hcat: row counts differ");
    std::size_t rows = std::max(a.rows(), b.rows());
    IntegerMatrix m(rows, a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    return m;
}

IntegerMatrix IntegerMatrix::columns(const std::vector<std::size_t>& which) const {
    IntegerMatrix m(rows_, which.size());
    for (std::size_t j = 0; j < which.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, which[j]);
    return m;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::size_t n = std::min(s.rows(), s.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.at(i, i);
    return d;
}

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Floor division (quotient rounded toward -infinity).
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

struct SmithState {
    IntegerMatrix s, u, v, u_inv, v_inv;

    explicit SmithState(const IntegerMatrix& a)
        : s(a),
          u(IntegerMatrix::identity(a.rows())),
          v(IntegerMatrix::identity(a.cols())),
          u_inv(IntegerMatrix::identity(a.rows())),
          v_inv(IntegerMatrix::identity(a.cols())) {}

    void row_sub(std::size_t i, std::size_t t, const Int& q) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(i, j) -= q * s.at(t, j);
        for (std::size_t j = 0; j < s.rows(); ++j) {
            u.at(i, j) -= q * u.at(t, j);
            u_inv.at(j, t) += q * u_inv.at(j, i);
        }
    }
    void col_sub(std::size_t j, std::size_t t, const Int& q) {
        for (std::size_t i = 0; i < s.rows(); ++i) s.at(i, j) -= q * s.at(i, t);
        for (std::size_t i = 0; i < s.cols(); ++i) {
            v.at(i, j) -= q * v.at(i, t);
            v_inv.at(t, i) += q * v_inv.at(j, i);
        }
    }
    void row_swap(std::size_t i, std::size_t t) {
        if (i == t) return;
        for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s.at(i, j), s.at(t, j));
        for (std::size_t j = 0; j < s.rows(); ++j) {
            std::swap(u.at(i, j), u.at(t, j));
            std::swap(u_inv.at(j, i), u_inv.at(j, t));
        }
    }
    void col_swap(std::size_t j, std::size_t t) {
        if (j == t) return;
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s.at(i, j), s.at(i, t));
        for (std::size_t i = 0; i < s.cols(); ++i) {
            std::swap(v.at(i, j), v.at(i, t));
            std::swap(v_inv.at(j, i), v_inv.at(t, i));
        }
    }
    void row_negate(std::size_t t) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(t, j) = -s.at(t, j);
        for (std::size_t j = 0; j < s.rows(); ++j) {
            u.at(t, j) = -u.at(t, j);
            u_inv.at(j, t) = -u_inv.at(j, t);
        }
    }
    void row_add(std::size_t t, std::size_t i) {  // row t += row i
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(t, j) += s.at(i, j);
        for (std::size_t j = 0; j < s.rows(); ++j) {
            u.at(t, j) += u.at(i, j);
            u_inv.at(j, i) -= u_inv.at(j, t);
        }
    }
};

}  // namespace

SmithTransforms smith_with_inverses(const IntegerMatrix& a) {
    SmithState st(a);
    const std::size_t n = a.rows(), m = a.cols();
    const std::size_t lim = std::min(n, m);
    std::size_t t = 0;
    while (t < lim) {
        // Pivot: smallest nonzero absolute value in the trailing block,
        // ties broken by (row, col) lexicographic order.
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j) {
                const Int& x = st.s.at(i, j);
                if (x == 0) continue;
                Int ax = abs_int(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        st.row_swap(pi, t);
        st.col_swap(pj, t);
        if (st.s.at(t, t) < 0) st.row_negate(t);

        bool dirty = false;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (st.s.at(i, t) == 0) continue;
            Int q = st.s.at(i, t) / st.s.at(t, t);
            if (q != 0) st.row_sub(i, t, q);
            if (st.s.at(i, t) != 0) dirty = true;  // remainder: pivot will shrink
        }
        for (std::size_t j = t + 1; j < m; ++j) {
            if (st.s.at(t, j) == 0) continue;
            Int q = st.s.at(t, j) / st.s.at(t, t);
            if (q != 0) st.col_sub(j, t, q);
            if (st.s.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;

        // Divisibility: the pivot must divide the whole trailing block.
        const Int d = st.s.at(t, t);
        bool fixed = false;
        for (std::size_t i = t + 1; i < n && !fixed; ++i)
            for (std::size_t j = t + 1; j < m; ++j)
                if (st.s.at(i, j) % d != 0) {
                    st.row_add(t, i);
                    fixed = true;
                    break;
                }
        if (fixed) continue;
        ++t;
    }
    SmithTransforms out;
    out.u = std::move(st.u);
    out.v = std::move(st.v);
    out.u_inv = std::move(st.u_inv);
    out.v_inv = std::move(st.v_inv);
    out.diag.resize(lim);
    out.rank = 0;
    for (std::size_t i = 0; i < lim; ++i) {
        out.diag[i] = st.s.at(i, i);
        if (out.diag[i] != 0) ++out.rank;
    }
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    SmithTransforms tr = smith_with_inverses(a);
    SmithDecomposition d;
    d.s = IntegerMatrix(a.rows(), a.cols());
    for (std::size_t i = 0; i < tr.diag.size(); ++i) d.s.at(i, i) = tr.diag[i];
    d.u = std::move(tr.u);
    d.v = std::move(tr.v);
    d.rank = tr.rank;
    return d;
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
    if (a.rows() == 0) return IntegerMatrix::identity(a.cols());
    SmithTransforms tr = smith_with_inverses(a);
    std::vector<std::size_t> keep;
    for (std::size_t j = tr.rank; j < a.cols(); ++j) keep.push_back(j);
    return tr.v.columns(keep);
}

IntegerMatrix image_basis(const IntegerMatrix& a) {
    SmithTransforms tr = smith_with_inverses(a);
    IntegerMatrix b(a.rows(), tr.rank);
    for (std::size_t j = 0; j < tr.rank; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            b.at(i, j) = tr.u_inv.at(i, j) * tr.diag[j];
    return b;
}

IntegerMatrix hermite_column_basis(const IntegerMatrix& a) {
    IntegerMatrix h = a;
    const std::size_t n = h.rows(), m = h.cols();
    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, x), h.at(i, y));
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < n; ++i) h.at(i, dst) -= q * h.at(i, src);
    };
    std::size_t c = 0;
    for (std::size_t row = 0; row < n && c < m; ++row) {
        // Euclid within the row across columns c..m-1.
        while (true) {
            std::size_t pick = m;
            for (std::size_t j = c; j < m; ++j) {
                if (h.at(row, j) == 0) continue;
                if (pick == m || abs_int(h.at(row, j)) < abs_int(h.at(row, pick)))
                    pick = j;
            }
            if (pick == m) break;  // all zero
            col_swap(c, pick);
            bool clean = true;
            for (std::size_t j = c + 1; j < m; ++j) {
                if (h.at(row, j) == 0) continue;
                col_axpy(j, c, h.at(row, j) / h.at(row, c));
                if (h.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(row, c) == 0) continue;
        if (h.at(row, c) < 0)
            for (std::size_t i = 0; i < n; ++i) h.at(i, c) = -h.at(i, c);
        for (std::size_t j = 0; j < c; ++j)
            col_axpy(j, c, floor_div(h.at(row, j), h.at(row, c)));
        ++c;
    }
    std::vector<std::size_t> keep(c);
    for (std::size_t j = 0; j < c; ++j) keep[j] = j;
    return h.columns(keep);
}

std::optional<std::vector<Int>> solve_exact(const IntegerMatrix& a,
                                            const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw Error("solve_exact: rhs size mismatch");
    SmithTransforms tr = smith_with_inverses(a);
    std::vector<Int> c = tr.u.apply(b);
    std::vector<Int> y(a.cols());
    const std::size_t lim = tr.diag.size();
    for (std::size_t i = 0; i < lim; ++i) {
        if (tr.diag[i] != 0) {
            if (c[i] % tr.diag[i] != 0) return std::nullopt;
            y[i] = c[i] / tr.diag[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    for (std::size_t i = lim; i < a.rows(); ++i)
        if (c[i] != 0) return std::nullopt;
    return tr.v.apply(y);
}

std::optional<IntegerMatrix> solve_exact(const IntegerMatrix& a,
                                         const IntegerMatrix& b) {
    if (b.rows() != a.rows()) throw Error("solve_exact: rhs shape mismatch");
    SmithTransforms tr = smith_with_inverses(a);
    IntegerMatrix x(a.cols(), b.cols());
    const std::size_t lim = tr.diag.size();
    for (std::size_t col = 0; col < b.cols(); ++col) {
        std::vector<Int> c = tr.u.apply(b.col(col));
        std::vector<Int> y(a.cols());
        for (std::size_t i = 0; i < lim; ++i) {
            if (tr.diag[i] != 0) {
                if (c[i] % tr.diag[i] != 0) return std::nullopt;
                y[i] = c[i] / tr.diag[i];
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        for (std::size_t i = lim; i < a.rows(); ++i)
            if (c[i] != 0) return std::nullopt;
        x.set_col(col, tr.v.apply(y));
    }
    return x;
}

AbelianPresentation::AbelianPresentation(std::vector<Int> invariant_factors,
                                         std::size_t free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] <= 1) throw Error("invariant factor must exceed 1");
        if (i && factors_[i] % factors_[i - 1] != 0)
            throw Error("invariant factors must form a divisibility chain");
    }
}

IntegerMatrix AbelianPresentation::relations() const {
    IntegerMatrix r(generators(), factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r.at(i, i) = factors_[i];
    return r;
}

Int AbelianPresentation::order_of(std::size_t i) const {
    return i < factors_.size() ? factors_[i] : Int(0);
}

std::vector<Int> AbelianPresentation::reduce(std::vector<Int> x) const {
    if (x.size() != generators()) throw Error("reduce: coordinate size mismatch");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        x[i] %= factors_[i];
        if (x[i] < 0) x[i] += factors_[i];
    }
    return x;
}

bool AbelianPresentation::is_zero(const std::vector<Int>& x) const {
    std::vector<Int> r = reduce(x);
    for (const Int& v : r)
        if (v != 0) return false;
    return true;
}

QuotientPresentation present_quotient_lattice(std::size_t n,
                                              const IntegerMatrix& relators) {
    if (relators.cols() > 0 && relators.rows() != n)
        throw Error("present_quotient_lattice: relator size mismatch");
    SmithTransforms tr = smith_with_inverses(
        relators.cols() ? relators : IntegerMatrix(n, 0));
    std::vector<Int> factors;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < tr.rank; ++i)
        if (tr.diag[i] > 1) {
            factors.push_back(tr.diag[i]);
            keep.push_back(i);
        }
    for (std::size_t i = tr.rank; i < n; ++i) keep.push_back(i);
    QuotientPresentation out;
    out.group = AbelianPresentation(std::move(factors), n - tr.rank);
    out.projection = IntegerMatrix(keep.size(), n);
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t j = 0; j < n; ++j) out.projection.at(r, j) = tr.u.at(keep[r], j);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> col(keep.size());
        for (std::size_t r = 0; r < keep.size(); ++r) col[r] = out.projection.at(r, j);
        col = out.group.reduce(col);
        for (std::size_t r = 0; r < keep.size(); ++r) out.projection.at(r, j) = col[r];
    }
    out.section = tr.u_inv.columns(keep);
    return out;
}

Subgroup::Subgroup(AbelianPresentation ambient, IntegerMatrix generators_in_ambient)
    : ambient_(std::move(ambient)) {
    if (generators_in_ambient.cols() > 0 &&
        generators_in_ambient.rows() != ambient_.generators())
        throw Error("subgroup generators: coordinate size mismatch");
    std::vector<std::size_t> keep;
    IntegerMatrix g(ambient_.generators(), generators_in_ambient.cols());
    for (std::size_t j = 0; j < generators_in_ambient.cols(); ++j) {
        std::vector<Int> col = ambient_.reduce(generators_in_ambient.col(j));
        bool zero = true;
        for (const Int& v : col)
            if (v != 0) {
                zero = false;
                break;
            }
        g.set_col(j, col);
        if (!zero) keep.push_back(j);
    }
    gens_ = g.columns(keep);
}

Subgroup Subgroup::zero(const AbelianPresentation& ambient) {
    return Subgroup(ambient, IntegerMatrix(ambient.generators(), 0));
}

Subgroup Subgroup::full(const AbelianPresentation& ambient) {
    return Subgroup(ambient, IntegerMatrix::identity(ambient.generators()));
}

bool Subgroup::is_trivial() const { return gens_.cols() == 0; }

bool subgroup_contains(const Subgroup& k, const Subgroup& l) {
    if (!(k.ambient() == l.ambient()))
        throw Error("subgroup_contains: ambient groups differ");
    IntegerMatrix big = IntegerMatrix::hcat(l.generators(), l.ambient().relations());
    for (std::size_t j = 0; j < k.generators().cols(); ++j)
        if (!solve_exact(big, k.generators().col(j))) return false;
    return true;
}

std::optional<std::vector<Int>> express_in_subgroup(const Subgroup& s,
                                                    const std::vector<Int>& elem) {
    IntegerMatrix big = IntegerMatrix::hcat(s.generators(), s.ambient().relations());
    auto sol = solve_exact(big, s.ambient().reduce(elem));
    if (!sol) return std::nullopt;
    sol->resize(s.generators().cols());
    return sol;
}

QuotientOfGroup quotient_presentation(const AbelianPresentation& ambient,
                                      const Subgroup& sub) {
    if (!(sub.ambient() == ambient))
        throw Error("quotient_presentation: subgroup has different ambient");
    IntegerMatrix relators = IntegerMatrix::hcat(ambient.relations(), sub.generators());
    QuotientPresentation qp = present_quotient_lattice(ambient.generators(), relators);
    return QuotientOfGroup{std::move(qp.group), std::move(qp.projection),
                           std::move(qp.section)};
}

SubgroupPresentation subgroup_presentation(const Subgroup& s) {
    const std::size_t n = s.ambient().generators();
    IntegerMatrix lattice = hermite_column_basis(
        IntegerMatrix::hcat(s.generators(), s.ambient().relations()));
    const std::size_t r = lattice.cols();
    IntegerMatrix rel = s.ambient().relations();
    auto w = solve_exact(lattice, rel);
    if (!w) throw InternalInconsistencyError("ambient relations escape subgroup lattice");
    QuotientPresentation qp = present_quotient_lattice(r, *w);
    SubgroupPresentation out;
    out.group = std::move(qp.group);
    IntegerMatrix gens = lattice * qp.section;
    IntegerMatrix reduced(n, gens.cols());
    for (std::size_t j = 0; j < gens.cols(); ++j)
        reduced.set_col(j, s.ambient().reduce(gens.col(j)));
    out.generators = std::move(reduced);
    return out;
}

IntegerMatrix induced_on_quotients(const IntegerMatrix& f,
                                   const AbelianPresentation& src_ambient,
                                   const Subgroup& src_sub,
                                   const AbelianPresentation& tgt_ambient,
                                   const Subgroup& tgt_sub) {
    if (f.rows() != tgt_ambient.generators() || f.cols() != src_ambient.generators())
        throw Error("induced_on_quotients: matrix shape mismatch");
    IntegerMatrix reach = IntegerMatrix::hcat(tgt_sub.generators(), tgt_ambient.relations());
    for (std::size_t j = 0; j < src_sub.generators().cols(); ++j) {
        std::vector<Int> img = f.apply(src_sub.generators().col(j));
        if (!solve_exact(reach, tgt_ambient.reduce(img)))
            throw IllDefinedError(
                "induced map does not send the source subgroup into the target subgroup");
    }
    QuotientPresentation src_q = present_quotient_lattice(
        src_ambient.generators(),
        IntegerMatrix::hcat(src_ambient.relations(), src_sub.generators()));
    QuotientOfGroup tgt_q = quotient_presentation(tgt_ambient, tgt_sub);
    IntegerMatrix m = tgt_q.projection * (f * src_q.section);
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.set_col(j, tgt_q.group.reduce(m.col(j)));
    return m;
}

Subgroup hom_kernel(const IntegerMatrix& f, const AbelianPresentation& src,
                    const AbelianPresentation& tgt) {
    if (f.rows() != tgt.generators() || f.cols() != src.generators())
        throw Error("hom_kernel: matrix shape mismatch");
    if (tgt.generators() == 0) return Subgroup::full(src);
    IntegerMatrix big = IntegerMatrix::hcat(f, tgt.relations());
    IntegerMatrix k = kernel_basis(big);
    IntegerMatrix proj(src.generators(), k.cols());
    for (std::size_t i = 0; i < src.generators(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) proj.at(i, j) = k.at(i, j);
    return Subgroup(src, proj);
}

Subgroup hom_image(const IntegerMatrix& f, const AbelianPresentation& src,
                   const AbelianPresentation& tgt) {
    if (f.rows() != tgt.generators() || f.cols() != src.generators())
        throw Error("hom_image: matrix shape mismatch");
    return Subgroup(tgt, f);
}

}  // namespace corrhom
