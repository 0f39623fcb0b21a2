#include "orecodes/linalg.hpp"

#include <algorithm>

namespace orecodes {

Matrix::Matrix(FieldPtr f, size_t rows, size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, f_->zero()) {}

Matrix Matrix::identity(const FieldPtr& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Matrix Matrix::from_columns(const FieldPtr& f, size_t rows, const std::vector<std::vector<Elem>>& cols) {
    Matrix m(f, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail_invalid("column has wrong length");
        for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail_invalid("matrix shape mismatch");
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail_invalid("matrix shape mismatch");
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail_invalid("matrix shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scale(const Elem& c) const {
    Matrix r(f_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Elem Matrix::trace() const {
    if (rows_ != cols_) fail_invalid("trace of a non-square matrix");
    Elem t = f_->zero();
    for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

Matrix Matrix::pow(uint64_t e) const {
    if (rows_ != cols_) fail_invalid("power of a non-square matrix");
    Matrix r = identity(f_, rows_);
    Matrix b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Elem& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Elem> Matrix::column(size_t j) const {
    std::vector<Elem> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Elem> Matrix::apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) fail_invalid("vector length mismatch");
    std::vector<Elem> r(rows_, f_->zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    size_t lead = 0;
    for (size_t r = 0; r < m.rows_ && lead < m.cols_; ++lead) {
        size_t i = r;
        while (i < m.rows_ && m.at(i, lead).is_zero()) ++i;
        if (i == m.rows_) continue;
        for (size_t j = 0; j < m.cols_; ++j) std::swap(m.at(i, j), m.at(r, j));
        Elem piv_inv = m.at(r, lead).inv();
        for (size_t j = 0; j < m.cols_; ++j) m.at(r, j) = m.at(r, j) * piv_inv;
        for (size_t k = 0; k < m.rows_; ++k) {
            if (k == r || m.at(k, lead).is_zero()) continue;
            Elem c = m.at(k, lead);
            for (size_t j = 0; j < m.cols_; ++j) m.at(k, j) = m.at(k, j) - c * m.at(r, j);
        }
        ++r;
    }
    return m;
}

size_t Matrix::rank() const {
    Matrix m = rref();
    size_t r = 0;
    for (size_t i = 0; i < m.rows_; ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < m.cols_; ++j)
            if (!m.at(i, j).is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) ++r;
    }
    return r;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) fail_invalid("inverse of a non-square matrix");
    Matrix aug(f_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = f_->one();
    }
    Matrix red = aug.rref();
    for (size_t i = 0; i < rows_; ++i)
        if (red.at(i, i) != f_->one()) return std::nullopt;
    Matrix inv(f_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = red.at(i, cols_ + j);
    return inv;
}

Matrix Matrix::kernel() const {
    Matrix m = rref();
    // locate pivot columns
    std::vector<int> pivot_of_col(cols_, -1);
    size_t r = 0;
    for (size_t j = 0; j < cols_ && r < rows_; ++j) {
        if (!m.at(r, j).is_zero()) pivot_of_col[j] = static_cast<int>(r++);
    }
    std::vector<std::vector<Elem>> basis;
    for (size_t j = 0; j < cols_; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        std::vector<Elem> v(cols_, f_->zero());
        v[j] = f_->one();
        for (size_t jj = 0; jj < j; ++jj)
            if (pivot_of_col[jj] >= 0) v[jj] = -m.at(static_cast<size_t>(pivot_of_col[jj]), j);
        basis.push_back(std::move(v));
    }
    return column_echelon(Matrix::from_columns(f_, cols_, basis));
}

std::optional<std::vector<Elem>> Matrix::solve(const std::vector<Elem>& rhs) const {
    if (rhs.size() != rows_) fail_invalid("rhs length mismatch");
    Matrix aug(f_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    Matrix red = aug.rref();
    std::vector<Elem> x(cols_, f_->zero());
    size_t r = 0;
    for (size_t j = 0; j < cols_ && r < rows_; ++j) {
        if (!red.at(r, j).is_zero()) {
            x[j] = red.at(r, cols_);
            ++r;
        }
    }
    // rows below the pivots must be consistent
    for (size_t i = r; i < rows_; ++i)
        if (!red.at(i, cols_).is_zero()) return std::nullopt;
    return x;
}

bool Matrix::in_column_span(const std::vector<Elem>& v) const { return solve(v).has_value(); }

Matrix column_echelon(const Matrix& m) {
    Matrix red = m.transpose().rref().transpose();
    // drop zero columns (they sit at the right after reduction)
    size_t keep = 0;
    for (size_t j = 0; j < red.cols(); ++j) {
        bool nz = false;
        for (size_t i = 0; i < red.rows(); ++i)
            if (!red.at(i, j).is_zero()) nz = true;
        if (nz) keep = j + 1;
    }
    Matrix out(m.field(), red.rows(), keep);
    for (size_t i = 0; i < red.rows(); ++i)
        for (size_t j = 0; j < keep; ++j) out.at(i, j) = red.at(i, j);
    return out;
}

Subspace Subspace::span(const Matrix& columns) {
    Subspace s;
    s.basis_ = column_echelon(columns);
    return s;
}

Subspace Subspace::zero(const FieldPtr& f, size_t ambient_dim) {
    Subspace s;
    s.basis_ = Matrix(f, ambient_dim, 0);
    return s;
}

Subspace Subspace::full(const FieldPtr& f, size_t ambient_dim) {
    Subspace s;
    s.basis_ = Matrix::identity(f, ambient_dim);
    return s;
}

bool Subspace::contains(const std::vector<Elem>& v) const { return basis_.in_column_span(v); }

bool Subspace::contains(const Subspace& other) const {
    for (size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.column(j))) return false;
    return true;
}

Matrix Subspace::complement_columns() const {
    // standard basis vectors at the non-pivot rows
    const FieldPtr& f = basis_.field();
    std::vector<bool> pivot_row(ambient_dim(), false);
    for (size_t j = 0; j < dim(); ++j) {
        size_t i = 0;
        while (i < ambient_dim() && basis_.at(i, j).is_zero()) ++i;
        if (i < ambient_dim()) pivot_row[i] = true;
    }
    std::vector<std::vector<Elem>> cols;
    for (size_t i = 0; i < ambient_dim(); ++i) {
        if (pivot_row[i]) continue;
        std::vector<Elem> v(ambient_dim(), f->zero());
        v[i] = f->one();
        cols.push_back(std::move(v));
    }
    return Matrix::from_columns(f, ambient_dim(), cols);
}

}  // namespace orecodes
