#include "braidhopf/matrix.hpp"

#include "braidhopf/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace braidhopf {

Scalar parse_scalar(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty coefficient");
    auto valid_int = [](std::string_view part, bool allow_sign) {
        std::size_t pos = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) pos = 1;
        if (pos == part.size()) return false;
        for (; pos < part.size(); ++pos)
            if (part[pos] < '0' || part[pos] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string num_s(num);
    if (!num_s.empty() && num_s[0] == '+') num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::shape_mismatch: return "ShapeMismatch";
        case ErrorKind::not_idempotent: return "NotIdempotent";
        case ErrorKind::backend_mismatch: return "BackendMismatch";
        case ErrorKind::missing_grading: return "MissingGrading";
        case ErrorKind::missing_action: return "MissingAction";
        case ErrorKind::group_law: return "GroupLawViolation";
        case ErrorKind::split_failure: return "SplitFailure";
        case ErrorKind::not_invertible: return "NotInvertible";
        case ErrorKind::precondition_failed: return "PreconditionFailed";
        case ErrorKind::transcription_mismatch: return "TranscriptionMismatch";
        case ErrorKind::backend_unsupported: return "BackendUnsupported";
        case ErrorKind::parse: return "ParseError";
    }
    return "Error";
}

namespace {

using Column = std::vector<Matrix::Entry>;

// Sorts by row, merges duplicates and drops zeros.
void normalize(Column& col) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < col.size();) {
        std::size_t row = col[k].row;
        Scalar sum = col[k].value;
        std::size_t next = k + 1;
        for (; next < col.size() && col[next].row == row; ++next) sum += col[next].value;
        if (!is_zero(sum)) {
            col[out].row = row;
            col[out].value = sum;
            ++out;
        }
        k = next;
    }
    col.resize(out);
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::shape_mismatch,
                    std::string(op) + " of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.cols_data_[j].push_back({j, Scalar(1)});
    return m;
}

Matrix Matrix::from_dense(std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries) {
    if (entries.size() != rows * cols)
        throw Error(ErrorKind::shape_mismatch, "dense entry count does not match shape");
    Matrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            if (!braidhopf::is_zero(entries[i * cols + j])) {
                m.cols_data_[j].push_back({i, entries[i * cols + j]});
                m.cols_data_[j].back().value.canonicalize();
            }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Scalar> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(ErrorKind::shape_mismatch, "ragged row list");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return from_dense(r, c, entries);
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw Error(ErrorKind::shape_mismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            if (!braidhopf::is_zero(columns[j][i])) {
                m.cols_data_[j].push_back({i, columns[j][i]});
                m.cols_data_[j].back().value.canonicalize();
            }
    }
    return m;
}

std::size_t Matrix::nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& c : cols_data_) n += c.size();
    return n;
}

Scalar Matrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
    const auto& c = cols_data_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row) return it->value;
    return Scalar(0);
}

void Matrix::add(std::size_t row, std::size_t col, const Scalar& value) {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
    if (braidhopf::is_zero(value)) return;
    auto& c = cols_data_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == row) {
        it->value += value;
        if (braidhopf::is_zero(it->value)) c.erase(it);
    } else {
        Scalar v = value;
        v.canonicalize();
        c.insert(it, Entry{row, std::move(v)});
    }
}

void Matrix::set(std::size_t row, std::size_t col, const Scalar& value) {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("matrix index out of range");
    auto& c = cols_data_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.row < r; });
    const bool present = it != c.end() && it->row == row;
    if (braidhopf::is_zero(value)) {
        if (present) c.erase(it);
        return;
    }
    Scalar v = value;
    v.canonicalize();
    if (present)
        it->value = std::move(v);
    else
        c.insert(it, Entry{row, std::move(v)});
}

void Matrix::assign_column(std::size_t col, std::vector<Entry> entries) {
    if (col >= cols_) throw std::out_of_range("matrix column out of range");
    cols_data_[col] = std::move(entries);
}

std::vector<Scalar> Matrix::column_dense(std::size_t col) const {
    std::vector<Scalar> v(rows_);
    for (const auto& e : cols_data_[col]) v[e.row] = e.value;
    return v;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& e : cols_data_[j]) d[e.row][j] = e.value;
    return d;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& e : cols_data_[j]) t.cols_data_[e.row].push_back({j, e.value});
    return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other, "sum");
    for (std::size_t j = 0; j < cols_; ++j) {
        if (other.cols_data_[j].empty()) continue;
        auto& c = cols_data_[j];
        c.insert(c.end(), other.cols_data_[j].begin(), other.cols_data_[j].end());
        normalize(c);
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other, "difference");
    for (std::size_t j = 0; j < cols_; ++j) {
        if (other.cols_data_[j].empty()) continue;
        auto& c = cols_data_[j];
        for (const auto& e : other.cols_data_[j]) c.push_back({e.row, -e.value});
        normalize(c);
    }
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& factor) {
    if (braidhopf::is_zero(factor)) {
        for (auto& c : cols_data_) c.clear();
        return *this;
    }
    for (auto& c : cols_data_)
        for (auto& e : c) e.value *= factor;
    return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t j = 0; j < a.cols_; ++j) {
        const auto& x = a.cols_data_[j];
        const auto& y = b.cols_data_[j];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].row != y[k].row || x[k].value != y[k].value) return false;
    }
    return true;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Scalar(-1); }
Matrix operator*(const Scalar& factor, Matrix a) { return a *= factor; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::shape_mismatch, "product of " + std::to_string(a.rows()) + "x" +
                                                   std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                                   "x" + std::to_string(b.cols()));
    Matrix out(a.rows(), b.cols());
    Column acc;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        acc.clear();
        for (const auto& eb : b.column(j))
            for (const auto& ea : a.column(eb.row)) acc.push_back({ea.row, ea.value * eb.value});
        if (acc.empty()) continue;
        normalize(acc);
        out.assign_column(j, acc);
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
            if (a.column(ja).empty() || b.column(jb).empty()) continue;
            std::vector<Matrix::Entry> col;
            col.reserve(a.column(ja).size() * b.column(jb).size());
            for (const auto& ea : a.column(ja))
                for (const auto& eb : b.column(jb)) col.push_back({ea.row * b.rows() + eb.row, ea.value * eb.value});
            out.assign_column(ja * b.cols() + jb, std::move(col));
        }
    return out;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns) {
    Matrix out(m.rows(), columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k)
        for (const auto& e : m.column(columns[k])) out.add(e.row, k, e.value);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::shape_mismatch, "hstack row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& e : a.column(j)) out.add(e.row, j, e.value);
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (const auto& e : b.column(j)) out.add(e.row, a.cols() + j, e.value);
    return out;
}

std::vector<EntryDifference> all_differences(const Matrix& lhs, const Matrix& rhs) {
    require_same_shape(lhs, rhs, "comparison");
    std::vector<EntryDifference> diffs;
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
        auto x = lhs.column(j);
        auto y = rhs.column(j);
        std::size_t p = 0, q = 0;
        while (p < x.size() || q < y.size()) {
            if (q == y.size() || (p < x.size() && x[p].row < y[q].row)) {
                diffs.push_back({x[p].row, j, x[p].value, Scalar(0)});
                ++p;
            } else if (p == x.size() || y[q].row < x[p].row) {
                diffs.push_back({y[q].row, j, Scalar(0), y[q].value});
                ++q;
            } else {
                if (x[p].value != y[q].value) diffs.push_back({x[p].row, j, x[p].value, y[q].value});
                ++p;
                ++q;
            }
        }
    }
    std::sort(diffs.begin(), diffs.end(),
              [](const auto& a, const auto& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    return diffs;
}

std::optional<EntryDifference> first_difference(const Matrix& lhs, const Matrix& rhs) {
    auto diffs = all_differences(lhs, rhs);
    if (diffs.empty()) return std::nullopt;
    return diffs.front();
}

}  // namespace braidhopf
