#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "symker/scalar.hpp"

namespace symker {

using Vector = std::vector<Scalar>;

/// Sorted (column, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
bool is_zero(std::span<const Scalar> v);
SparseVector to_sparse(std::span<const Scalar> v);
Vector to_dense(const SparseVector& v, const FieldSpec& field, std::size_t n);

/// Dense row-major matrix over a single field.
class ExactMatrix {
public:
    ExactMatrix(FieldSpec field, std::size_t ncols) : field_(field), ncols_(ncols) {}
    /// Validates that every row has ncols entries over `field`.
    ExactMatrix(FieldSpec field, std::size_t ncols, std::vector<Vector> rows);

    /// Integer entries; every row must have the same length.
    static ExactMatrix from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows,
                                 std::size_t ncols = 0);
    static ExactMatrix identity(FieldSpec field, std::size_t n);
    static ExactMatrix zero(FieldSpec field, std::size_t nrows, std::size_t ncols);

    const FieldSpec& field() const { return field_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t nrows() const { return rows_.size(); }
    const std::vector<Vector>& rows() const { return rows_; }
    const Vector& row(std::size_t i) const { return rows_[i]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    void append_row(Vector row);
    void append_row(const SparseVector& row);

    ExactMatrix transpose() const;
    /// this * v for a column vector v of length ncols.
    Vector apply(std::span<const Scalar> v) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    FieldSpec field_;
    std::size_t ncols_;
    std::vector<Vector> rows_;
};

struct RrefResult {
    ExactMatrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form. Pivot = first nonzero entry scanning left to right.
RrefResult rref(const ExactMatrix& m);

/// v reduced against a matrix already in reduced row-echelon form.
/// Zero iff v lies in the row space.
Vector residue(std::span<const Scalar> v, const ExactMatrix& basis);

/// Basis of {x : m x = 0}; ncols - rank vectors.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Incrementally built row space kept in echelon form with sparse rows.
/// reduce() returns the canonical representative of v modulo the span:
/// the unique vector congruent to v that vanishes on every pivot column.
class RowSpace {
public:
    RowSpace(FieldSpec field, std::size_t ncols) : field_(field), ncols_(ncols) {}

    const FieldSpec& field() const { return field_; }
    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    std::vector<std::size_t> pivots() const;
    bool is_pivot(std::size_t col) const { return rows_.contains(col); }

    /// Adds v to the span; returns true when the rank grew.
    bool insert(std::span<const Scalar> v);
    bool insert(const SparseVector& v);

    Vector reduce(std::span<const Scalar> v) const;
    Vector reduce(const SparseVector& v) const;
    bool contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }
    bool contains(const SparseVector& v) const { return is_zero(reduce(v)); }

    /// Fully reduced basis, rows ordered by pivot column.
    ExactMatrix to_rref() const;

private:
    FieldSpec field_;
    std::size_t ncols_;
    std::map<std::size_t, SparseVector> rows_;  // pivot column -> row with leading 1

    void reduce_in_place(Vector& work) const;
    bool insert_reduced(Vector work);
};

/// Row spaces of a and b coincide (mutual residues vanish).
bool same_row_space(const RowSpace& a, const RowSpace& b);
bool same_row_space(const std::vector<Vector>& a, const std::vector<Vector>& b,
                    const FieldSpec& field, std::size_t ncols);

}  // namespace symker
