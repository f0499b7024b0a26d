#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace laby {

using Int = mpz_class;

// Dense integer matrix with exact arbitrary-precision entries.  No floating
// point anywhere in this module.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {}

    static IntMatrix identity(long n);
    // Convenience for literals in tests and small examples.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    // Sparse construction path: (row, col, value) triples, 0-based.
    static IntMatrix from_triples(long rows, long cols, const std::vector<std::tuple<long, long, Int>>& triples);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Int& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Int& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix transposed() const;
    bool is_zero() const;

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    void swap_rows(long i, long j);
    void swap_cols(long i, long j);

    // Dump format: first line "rows cols", then one "i j v" triple per
    // nonzero entry, 1-based, sorted by (i, j), newline-terminated.
    std::string dump_triples() const;
    static IntMatrix parse_triples(const std::string& text);

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct HnfResult {
    IntMatrix h;  // h = a * u, column echelon; nonzero columns first
    IntMatrix u;  // unimodular
    long rank = 0;
};

// Column-style Hermite form.  Pivot rows strictly increase over the nonzero
// columns, pivots are positive, entries left of a pivot in its row are
// reduced into [0, pivot).
HnfResult hnf_columns(const IntMatrix& a);

// Basis of the integer kernel lattice {v : a*v = 0}, as matrix columns.
// The basis is a full (saturated) kernel basis, not a finite-index sublattice.
IntMatrix kernel_basis(const IntMatrix& a);

// Solves a*x = v over the integers; nullopt when no integral solution exists.
std::optional<std::vector<Int>> solve_columns(const IntMatrix& a, const std::vector<Int>& v);

// True when v lies in the column lattice of `basis`.
bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v);

struct SnfResult {
    IntMatrix u, s, v;                  // u * a * v = s, u and v unimodular
    std::vector<Int> invariant_factors; // the positive diagonal entries, d1 | d2 | ...
};

// Smith normal form.  Deterministic: pivots are chosen by smallest nonzero
// magnitude, ties broken by lowest row then lowest column.
SnfResult snf(const IntMatrix& a);

// Invariant factors only, without accumulating the transforms.  Same pivot
// strategy as snf; intended for wide presentation matrices.
std::vector<Int> snf_invariant_factors(const IntMatrix& a);

// Finitely generated abelian group: free rank plus torsion coefficients in a
// divisibility chain (entries >= 2, t1 | t2 | ...).
class FgAbelianGroup {
  public:
    FgAbelianGroup() = default;

    // Canonicalizes arbitrary cyclic orders: order 0 contributes a free
    // summand, order 1 is dropped, the rest are merged into a chain.
    static FgAbelianGroup from_orders(long free_rank, const std::vector<Int>& orders);

    long free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    // Prime-power factors of the torsion part, sorted by prime then exponent.
    std::vector<Int> primary_decomposition() const;

    // "0", "Z", "Z^2 + Z/2", "Z/2 + Z/3": primary decomposition form.
    std::string display() const;
    // "Z/6" style, using the invariant-factor chain.
    std::string display_invariant() const;

    bool operator==(const FgAbelianGroup& o) const
    {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }

  private:
    long free_rank_ = 0;
    std::vector<Int> torsion_;
};

// The group Z^cols / (span of the rows of a).
FgAbelianGroup cokernel_of_rowspan(const IntMatrix& a);

FgAbelianGroup torsion_part(const FgAbelianGroup& g);

// Fast cokernel read-off for matrices already in pivotal shape.  The caller
// proposes row and column orders (0-based permutations); writing M for the
// permuted matrix, the conditions are M[k][j] = 0 for j < k and M[k][k]
// dividing every entry of row k.  Returns nullopt ("not pivotal") otherwise;
// that is a normal outcome, not a failure.
std::optional<FgAbelianGroup> pivot_reduce(const IntMatrix& a, const std::vector<long>& row_order,
                                           const std::vector<long>& col_order);

}  // namespace laby
