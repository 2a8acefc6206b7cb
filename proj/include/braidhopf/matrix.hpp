#ifndef BRAIDHOPF_MATRIX_HPP
#define BRAIDHOPF_MATRIX_HPP

#include "braidhopf/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace braidhopf {

/// Exact rational matrix. Storage is column-compressed: each column keeps its
/// nonzero entries sorted by row. Zero entries are never stored, so two equal
/// matrices have identical storage.
///
/// Matrices represent linear maps acting on column vectors; column j is the
/// image of the j-th basis vector of the domain.
class Matrix {
public:
    struct Entry {
        std::size_t row;
        Scalar value;
    };

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Row-major dense input; entries.size() must equal rows * cols.
    static Matrix from_dense(std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries);
    static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
    /// Builds a matrix whose columns are the given vectors (all of length rows).
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept;
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t row, std::size_t col) const;
    std::span<const Entry> column(std::size_t col) const { return cols_data_[col]; }

    /// Adds value to entry (row, col); zero results are removed.
    void add(std::size_t row, std::size_t col, const Scalar& value);
    void set(std::size_t row, std::size_t col, const Scalar& value);
    /// Replaces a column. Entries must be sorted by row and nonzero.
    void assign_column(std::size_t col, std::vector<Entry> entries);

    std::vector<Scalar> column_dense(std::size_t col) const;
    /// Row-major dense copy.
    std::vector<std::vector<Scalar>> to_dense() const;

    Matrix transpose() const;
    bool is_zero() const noexcept { return nonzeros() == 0; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& factor);

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> cols_data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Scalar& factor, Matrix a);
/// Matrix product; throws Error(shape_mismatch) when a.cols() != b.rows().
Matrix operator*(const Matrix& a, const Matrix& b);

/// Kronecker product with block ordering (i*b.rows()+k, j*b.cols()+l).
Matrix kron(const Matrix& a, const Matrix& b);

template <class... Rest>
Matrix kron(const Matrix& a, const Matrix& b, const Matrix& c, const Rest&... rest) {
    return kron(kron(a, b), c, rest...);
}

/// Submatrix made of the given columns in the given order.
Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns);
/// Horizontal concatenation [a | b].
Matrix hstack(const Matrix& a, const Matrix& b);

/// First differing entry in row-major order, with the values on both sides.
struct EntryDifference {
    std::size_t row;
    std::size_t col;
    Scalar lhs;
    Scalar rhs;
};

std::optional<EntryDifference> first_difference(const Matrix& lhs, const Matrix& rhs);
std::vector<EntryDifference> all_differences(const Matrix& lhs, const Matrix& rhs);

}  // namespace braidhopf

#endif
