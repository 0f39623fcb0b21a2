#ifndef ORECODES_LINALG_HPP
#define ORECODES_LINALG_HPP

#include <optional>
#include <vector>

#include "orecodes/field.hpp"

namespace orecodes {

// Dense matrix with entries in one field. Small sizes only; everything is
// exact Gaussian elimination.
class Matrix {
   public:
    Matrix() = default;
    Matrix(FieldPtr f, size_t rows, size_t cols);
    static Matrix identity(const FieldPtr& f, size_t n);
    static Matrix from_columns(const FieldPtr& f, size_t rows, const std::vector<std::vector<Elem>>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    const Elem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Elem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scale(const Elem& c) const;
    Matrix transpose() const;
    Elem trace() const;
    Matrix pow(uint64_t e) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    std::vector<Elem> column(size_t j) const;
    std::vector<Elem> apply(const std::vector<Elem>& v) const;  // matrix * vector

    size_t rank() const;
    // Reduced row echelon form.
    Matrix rref() const;
    std::optional<Matrix> inverse() const;
    // Columns form a basis of the null space, in reduced column echelon form.
    Matrix kernel() const;
    // One solution of A x = rhs, or nullopt if inconsistent.
    std::optional<std::vector<Elem>> solve(const std::vector<Elem>& rhs) const;
    bool in_column_span(const std::vector<Elem>& v) const;

   private:
    FieldPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;  // row-major
};

// Canonical reduced column echelon form; drops zero columns, so equal
// subspaces have identical bases.
Matrix column_echelon(const Matrix& m);

// F-linear subspace of K, held as a canonical echelonized basis matrix
// (s x dim). Entries live in the ambient field; callers keep them inside
// the intended subfield.
class Subspace {
   public:
    Subspace() = default;
    // Canonicalizes the spanning set.
    static Subspace span(const Matrix& columns);
    static Subspace zero(const FieldPtr& f, size_t ambient_dim);
    static Subspace full(const FieldPtr& f, size_t ambient_dim);

    size_t dim() const { return basis_.cols(); }
    size_t ambient_dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Elem>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Columns of the identity completing the basis to all of F^s.
    Matrix complement_columns() const;

   private:
    Matrix basis_;
};

}  // namespace orecodes

#endif
