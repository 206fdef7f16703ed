#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "nilcone/field.hpp"

namespace nilcone {

/// Dense column vector over a single field.
class Vector {
public:
    Vector() : field_(Field::rationals()) {}
    Vector(const Field& f, std::size_t dim);
    Vector(const Field& f, std::vector<Scalar> entries);
    static Vector from_ints(const Field& f, std::initializer_list<long> values);
    static Vector from_ints(const Field& f, const std::vector<long>& values);
    static Vector unit(const Field& f, std::size_t dim, std::size_t i);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    Scalar& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    bool is_zero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, Vector v);

    friend bool operator==(const Vector& a, const Vector& b);

private:
    Field field_;
    std::vector<Scalar> entries_;
};

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_ints(const Field& f, const std::vector<std::vector<long>>& rows);
    static Matrix diagonal(const std::vector<Scalar>& diag);
    /// Block diagonal matrix diag(a, b).
    static Matrix block_diagonal(const Matrix& a, const Matrix& b);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;
    Matrix transpose() const;
    /// Sub-block of rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix pow(unsigned e) const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend Matrix operator*(const Scalar& s, Matrix m);

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Vector& v);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace nilcone
