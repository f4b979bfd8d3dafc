#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coalg/field.hpp"

namespace coalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
Vec vec_from_ints(Field f, std::initializer_list<long> values);
bool is_zero(std::span<const Scalar> v);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Scalar& s, std::span<const Scalar> v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, std::span<const Scalar> b);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
std::string to_string(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols, std::initializer_list<long> values);
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vec column(std::size_t c) const;
    std::vector<Vec> row_vectors() const;

    Matrix transpose() const;
    Vec apply(std::span<const Scalar> v) const;
    bool is_zero() const;

    /// Rows [begin, end) / columns [begin, end) as a new matrix.
    Matrix row_block(std::size_t begin, std::size_t end) const;
    Matrix column_block(std::size_t begin, std::size_t end) const;
    /// Stacks this above other.
    Matrix vstack(const Matrix& other) const;
    Matrix hstack(const Matrix& other) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct EchelonForm {
    Matrix reduced;                  // nonzero rows only, leading ones, reduced
    std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row echelon form, zero rows dropped.
EchelonForm rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Inverse of a square matrix; throws InvalidArgument when singular.
Matrix inverse(const Matrix& m);
/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, std::span<const Scalar> b);

}  // namespace coalg
