#pragma once

// Exact linear algebra over the integers: Smith normal form, integer kernels
// and images, exact solving, and finitely generated abelian groups given by
// invariant factors, with subgroup and quotient operations.
//
// All matrices are dense with arbitrary-precision entries.  Every routine is
// deterministic: the Smith reduction picks the nonzero entry of smallest
// absolute value as pivot, ties broken by (row, col) lexicographic order.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "corrhom/errors.hpp"

namespace corrhom {

using Int = boost::multiprecision::cpp_int;

class IntegerMatrix {
  public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(
        std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix& o) const = default;

    bool is_zero() const;
    IntegerMatrix transpose() const;
    std::vector<Int> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<Int>& v);

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;

    // Columns of `a` followed by columns of `b` (row counts must agree).
    static IntegerMatrix hcat(const IntegerMatrix& a, const IntegerMatrix& b);
    IntegerMatrix columns(const std::vector<std::size_t>& which) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// u * a * v = s with u, v unimodular; s diagonal, nonnegative entries forming
// a divisibility chain d1 | d2 | ... with exactly `rank` of them nonzero.
struct SmithDecomposition {
    IntegerMatrix u, s, v;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Smith data extended with the inverses of the unimodular factors,
// accumulated during the reduction.  a = u_inv * s * v_inv.
struct SmithTransforms {
    IntegerMatrix u, v, u_inv, v_inv;
    std::vector<Int> diag;
    std::size_t rank = 0;
};

SmithTransforms smith_with_inverses(const IntegerMatrix& a);

// Basis of the saturated lattice {x : a x = 0}, one column per basis vector.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

// Basis of the integer column span of a.
IntegerMatrix image_basis(const IntegerMatrix& a);

// Canonical (column Hermite normal form) basis of the column lattice of a.
// Pivots positive, entries left of a pivot reduced to [0, pivot).
IntegerMatrix hermite_column_basis(const IntegerMatrix& a);

// One solution of a x = b over the integers, or nullopt if none exists.
std::optional<std::vector<Int>> solve_exact(const IntegerMatrix& a,
                                            const std::vector<Int>& b);
// Columnwise version; nullopt if any column has no solution.
std::optional<IntegerMatrix> solve_exact(const IntegerMatrix& a,
                                         const IntegerMatrix& b);

// Finitely generated abelian group in normal form: the first generators are
// torsion with ascending invariant factors (each > 1), the rest are free.
class AbelianPresentation {
  public:
    AbelianPresentation() = default;
    AbelianPresentation(std::vector<Int> invariant_factors, std::size_t free_rank);

    std::size_t generators() const { return factors_.size() + free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }
    bool is_trivial() const { return generators() == 0; }

    // Diagonal relator columns (one per torsion generator).
    IntegerMatrix relations() const;

    // Order of generator i; 0 means infinite.
    Int order_of(std::size_t i) const;

    // Componentwise canonical form: torsion coordinates reduced to [0, d_i).
    std::vector<Int> reduce(std::vector<Int> x) const;
    bool is_zero(const std::vector<Int>& x) const;

    bool operator==(const AbelianPresentation& o) const = default;

  private:
    std::vector<Int> factors_;
    std::size_t free_rank_ = 0;
};

// Z^n modulo the column lattice of `relators`, in normal form, together with
// the coordinate maps: projection (group coords from Z^n coords, surjective)
// and section (a representative in Z^n for each group generator).
struct QuotientPresentation {
    AbelianPresentation group;
    IntegerMatrix projection;
    IntegerMatrix section;
};

QuotientPresentation present_quotient_lattice(std::size_t n,
                                              const IntegerMatrix& relators);

// Subgroup of a finitely generated abelian group, stored as generator columns
// in ambient coordinates, torsion-reduced componentwise.
class Subgroup {
  public:
    Subgroup(AbelianPresentation ambient, IntegerMatrix generators_in_ambient);

    static Subgroup zero(const AbelianPresentation& ambient);
    static Subgroup full(const AbelianPresentation& ambient);

    const AbelianPresentation& ambient() const { return ambient_; }
    const IntegerMatrix& generators() const { return gens_; }
    bool is_trivial() const;

  private:
    AbelianPresentation ambient_;
    IntegerMatrix gens_;
};

// True iff k is contained in l (every generator of k is an integer
// combination of l's generators modulo the ambient relations).
bool subgroup_contains(const Subgroup& k, const Subgroup& l);

// Coefficients expressing `elem` over s's generators modulo the ambient
// relations, or nullopt if elem does not lie in s.
std::optional<std::vector<Int>> express_in_subgroup(const Subgroup& s,
                                                    const std::vector<Int>& elem);

// Presentation of ambient/sub with the matrix of the natural projection
// on ambient generators.
struct QuotientOfGroup {
    AbelianPresentation group;
    IntegerMatrix projection;
    IntegerMatrix section;  // a representative in ambient coords per generator
};

QuotientOfGroup quotient_presentation(const AbelianPresentation& ambient,
                                      const Subgroup& sub);

// Abstract normal-form presentation of a subgroup, with canonical ambient
// coordinates for its generators (Hermite basis of the defining lattice).
struct SubgroupPresentation {
    AbelianPresentation group;
    IntegerMatrix generators;  // ambient coords, one column per abstract generator
};

SubgroupPresentation subgroup_presentation(const Subgroup& s);

// Matrix of the map induced on quotients by f (a matrix on ambient
// generators).  Throws IllDefinedError if f does not map src_sub into tgt_sub.
IntegerMatrix induced_on_quotients(const IntegerMatrix& f,
                                   const AbelianPresentation& src_ambient,
                                   const Subgroup& src_sub,
                                   const AbelianPresentation& tgt_ambient,
                                   const Subgroup& tgt_sub);

// Kernel of the homomorphism src -> tgt with matrix f, as a subgroup of src.
// Computed by lifting to the presentation lattice: kernel of [f | tgt
// relations] projected to the source coordinates.
Subgroup hom_kernel(const IntegerMatrix& f, const AbelianPresentation& src,
                    const AbelianPresentation& tgt);

// Image of the homomorphism as a subgroup of tgt (generated by f's columns).
Subgroup hom_image(const IntegerMatrix& f, const AbelianPresentation& src,
                   const AbelianPresentation& tgt);

}  // namespace corrhom
