#ifndef BRAIDHOPF_LINALG_HPP
#define BRAIDHOPF_LINALG_HPP

#include "braidhopf/matrix.hpp"

#include <optional>
#include <vector>

namespace braidhopf {

using Vector = std::vector<Scalar>;

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right and, within a column, rows top down.
struct RowEchelon {
    std::vector<std::vector<Scalar>> rows;  // only the nonzero rows, normalized
    std::vector<std::size_t> pivot_columns;  // ascending
    std::size_t cols = 0;

    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

RowEchelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Standard free-variable basis of the right null space, in ascending
/// free-column order. Each vector has a 1 in its free coordinate, 0 in the
/// other free coordinates.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Kernel basis as the columns of a matrix (m.cols() x k).
Matrix kernel_matrix(const Matrix& m);

struct AffineSolution {
    Vector particular;  // zero in every free coordinate
    std::vector<Vector> homogeneous_basis;
};

/// Full solution set of a * x = b, or nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

/// Solves a * X = b column by column; nullopt if some column is inconsistent.
/// Free coordinates are zero.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the column space in reduced form: the nonzero rows of the RREF of
/// the transpose, returned as columns.
Matrix column_space(const Matrix& m);

/// True when every column of b lies in the column span of a.
bool columns_in_span(const Matrix& a, const Matrix& b);

struct IdempotentSplit {
    Matrix i;  // n x r, full column rank
    Matrix p;  // r x n
};

/// Splits an idempotent e = i * p with p * i = Id. Throws
/// Error(not_idempotent) when e * e != e.
IdempotentSplit split_idempotent(const Matrix& e);

/// Embedding of the equalizer of f and g: kernel basis of (f - g) as columns.
/// Throws Error(shape_mismatch) when shapes differ.
Matrix equalizer(const Matrix& f, const Matrix& g);

Vector matrix_times(const Matrix& m, const Vector& v);

}  // namespace braidhopf

#endif
