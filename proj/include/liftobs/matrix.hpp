#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace liftobs {

using Int = mpz_class;
using Rat = mpq_class;

/**
 * Dense integer matrix with arbitrary-precision entries.
 * Empty dimensions (0 x n, n x 0) are first-class.
 */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
    /** Diagonal matrix from the given entries (square). */
    static IntMatrix diagonal(const std::vector<Int>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c);
    const Int& at(int r, int c) const;

    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix transpose() const;

    std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x
    IntMatrix column(int c) const;
    std::vector<Int> column_vec(int c) const;

    /** Horizontal concatenation [this | o]; row counts must agree. */
    IntMatrix hcat(const IntMatrix& o) const;
    /** Submatrix made of the listed columns, in order. */
    IntMatrix select_columns(const std::vector<int>& idx) const;
    /** Submatrix made of the listed rows, in order. */
    IntMatrix select_rows(const std::vector<int>& idx) const;

    bool is_zero() const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void add_row_multiple(int dst, int src, const Int& q);  // row dst += q * row src
    void add_col_multiple(int dst, int src, const Int& q);
    void negate_row(int r);
    void negate_col(int c);

private:
    int rows_, cols_;
    std::vector<Int> a_;  // row-major
};

/** U * input * V = S with U, V unimodular and S the diagonal divisibility chain. */
struct SnfResult {
    IntMatrix u, s, v;
    int rank = 0;
    std::vector<Int> diag() const;  // nonzero diagonal entries, length = rank
};

/**
 * Smith normal form. Deterministic: pivot is the smallest-absolute-value nonzero
 * entry of the working submatrix, ties broken by lowest (row, col).
 */
SnfResult smith_normal_form(const IntMatrix& m);

/** Exact determinant (fraction-free elimination); square input. */
Int det(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/** Inverse of a unimodular matrix (exact). */
IntMatrix inverse_unimodular(const IntMatrix& m);

/** Basis of the integer kernel {x : m x = 0}, as matrix columns (may have 0 cols). */
IntMatrix kernel_basis(const IntMatrix& m);

/** One integer solution of m x = b, if any. */
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

/**
 * One solution of m x = b with each coordinate of the image taken modulo the
 * corresponding entry of `mod` (0 entry = exact equality on that coordinate).
 * Solved as the exact system [m | diag-lattice] via SNF.
 */
std::optional<std::vector<Int>> solve_modular(const IntMatrix& m, const std::vector<Int>& b,
                                              const std::vector<Int>& mod);

/** Column span basis of m as matrix columns (saturated-free basis of the lattice im m). */
IntMatrix column_span_basis(const IntMatrix& m);

/**
 * Reusable solver for m x = b with per-row moduli (0 entry = exact row):
 * the augmented system is factored once, each solve is two products.
 */
class ModularSolver {
public:
    ModularSolver(const IntMatrix& m, const std::vector<Int>& mod);
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

private:
    int rows_, cols_;
    SnfResult f_;
};

// Text format: first line "rows cols", then one line per row.
IntMatrix parse_matrix_text(const std::string& text);
std::string format_matrix_text(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Least non-negative residue; mod > 0.
Int nonneg_mod(const Int& a, const Int& m);

} // namespace liftobs
