#include "nilcone/matrix.hpp"

#include <ostream>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

void require_field(const Field& a, const Field& b) {
    if (!(a == b)) throw FieldMismatch(a.name() + " vs " + b.name());
}

}  // namespace

Vector::Vector(const Field& f, std::size_t dim) : field_(f), entries_(dim, Scalar::zero(f)) {}

Vector::Vector(const Field& f, std::vector<Scalar> entries) : field_(f), entries_(std::move(entries)) {
    for (const auto& s : entries_) require_field(f, s.field());
}

Vector Vector::from_ints(const Field& f, std::initializer_list<long> values) {
    return from_ints(f, std::vector<long>(values));
}

Vector Vector::from_ints(const Field& f, const std::vector<long>& values) {
    Vector v(f, values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v[i] = Scalar(f, values[i]);
    return v;
}

Vector Vector::unit(const Field& f, std::size_t dim, std::size_t i) {
    Vector v(f, dim);
    v[i] = Scalar::one(f);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& s : entries_)
        if (!s.is_zero()) return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o) {
    if (dim() != o.dim()) throw DimensionMismatch("vector sum");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (dim() != o.dim()) throw DimensionMismatch("vector difference");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Vector operator*(const Scalar& s, Vector v) {
    for (auto& e : v.entries_) e *= s;
    return v;
}

bool operator==(const Vector& a, const Vector& b) {
    if (!(a.field_ == b.field_) || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.entries_[i] != b.entries_[i]) return false;
    return true;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> r;
    for (const auto& row : rows) r.emplace_back(row);
    return from_ints(f, r);
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows.front().size() : 0;
    Matrix m(f, nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw DimensionMismatch("ragged matrix literal");
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = Scalar(f, rows[i][j]);
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag) {
    const Field f = diag.empty() ? Field::rationals() : diag.front().field();
    Matrix m(f, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
    require_field(a.field_, b.field_);
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != rows) throw DimensionMismatch("column length");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vector Matrix::row(std::size_t i) const {
    Vector v(field_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix Matrix::pow(unsigned e) const {
    if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    require_field(a.field_, b.field_);
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.dim()) throw DimensionMismatch("matrix-vector product");
    require_field(a.field_, v.field());
    Vector r(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
}

Matrix operator*(const Scalar& s, Matrix m) {
    for (auto& e : m.data_) e *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
}

}  // namespace nilcone
