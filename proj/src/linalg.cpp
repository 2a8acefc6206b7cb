#include "braidhopf/linalg.hpp"

#include "braidhopf/error.hpp"

namespace braidhopf {

namespace {

// In-place Gauss-Jordan on dense rows; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows.size(); ++c) {
        std::size_t piv = next_row;
        while (piv < rows.size() && is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[next_row], rows[piv]);
        auto& prow = rows[next_row];
        const Scalar inv = 1 / prow[c];
        for (std::size_t k = c; k < cols; ++k)
            if (!is_zero(prow[k])) prow[k] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || is_zero(rows[r][c])) continue;
            const Scalar factor = rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!is_zero(prow[k])) rows[r][k] -= factor * prow[k];
        }
        pivots.push_back(c);
        ++next_row;
    }
    rows.resize(next_row);
    return pivots;
}

}  // namespace

RowEchelon row_echelon(const Matrix& m) {
    RowEchelon out;
    out.rows = m.to_dense();
    out.cols = m.cols();
    out.pivot_columns = reduce(out.rows, m.cols());
    return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
    const RowEchelon re = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : re.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < re.rank(); ++r) v[re.pivot_columns[r]] = -re.rows[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix kernel_matrix(const Matrix& m) { return Matrix::from_columns(m.cols(), kernel_basis(m)); }

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw Error(ErrorKind::shape_mismatch, "right-hand side length mismatch");
    // Augmented system [a | b]; inconsistent iff the last column is a pivot.
    auto rows = a.to_dense();
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b[r]);
    const auto pivots = reduce(rows, a.cols() + 1);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(a.cols(), Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = rows[r][a.cols()];
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        sol.homogeneous_basis.push_back(std::move(v));
    }
    return sol;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::shape_mismatch, "solve_matrix row mismatch");
    auto rows = a.to_dense();
    const std::size_t n = a.cols();
    const std::size_t k = b.cols();
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].resize(n + k);
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& e : b.column(j)) rows[e.row][n + j] = e.value;
    // Reduce only over the coefficient columns, then check the remaining rows.
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < n && next_row < rows.size(); ++c) {
        std::size_t piv = next_row;
        while (piv < rows.size() && is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[next_row], rows[piv]);
        auto& prow = rows[next_row];
        const Scalar inv = 1 / prow[c];
        for (std::size_t q = c; q < n + k; ++q)
            if (!is_zero(prow[q])) prow[q] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row || is_zero(rows[r][c])) continue;
            const Scalar factor = rows[r][c];
            for (std::size_t q = c; q < n + k; ++q)
                if (!is_zero(prow[q])) rows[r][q] -= factor * prow[q];
        }
        pivots.push_back(c);
        ++next_row;
    }
    for (std::size_t r = next_row; r < rows.size(); ++r)
        for (std::size_t q = n; q < n + k; ++q)
            if (!is_zero(rows[r][q])) return std::nullopt;
    Matrix x(n, k);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < k; ++j) x.set(pivots[r], j, rows[r][n + j]);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve_matrix(m, Matrix::identity(m.rows()));
}

Matrix column_space(const Matrix& m) {
    const RowEchelon re = row_echelon(m.transpose());
    Matrix out(m.rows(), re.rank());
    for (std::size_t r = 0; r < re.rank(); ++r)
        for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, r, re.rows[r][i]);
    return out;
}

bool columns_in_span(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::shape_mismatch, "span test row mismatch");
    return rank(hstack(a, b)) == rank(a);
}

IdempotentSplit split_idempotent(const Matrix& e) {
    if (!e.is_square()) throw Error(ErrorKind::shape_mismatch, "idempotent must be square");
    if (!(e * e == e)) throw Error(ErrorKind::not_idempotent, "e*e != e");
    IdempotentSplit out;
    out.i = column_space(e);
    auto p = solve_matrix(out.i, e);
    if (!p) throw Error(ErrorKind::split_failure, "i*p = e has no solution");
    out.p = std::move(*p);
    return out;
}

Matrix equalizer(const Matrix& f, const Matrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw Error(ErrorKind::shape_mismatch, "equalizer of differently shaped maps");
    return kernel_matrix(f - g);
}

Vector matrix_times(const Matrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw Error(ErrorKind::shape_mismatch, "matrix-vector length mismatch");
    Vector out(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_zero(v[j])) continue;
        for (const auto& e : m.column(j)) out[e.row] += e.value * v[j];
    }
    return out;
}

}  // namespace braidhopf
