#include "coalg/matrix.hpp"

#include <sstream>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

void require_len(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatch(std::string(what) + ": lengths " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar(f)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

Vec vec_from_ints(Field f, std::initializer_list<long> values) {
    Vec v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(f, x);
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
    require_len(a.size(), b.size(), "vector add");
    Vec r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
    require_len(a.size(), b.size(), "vector sub");
    Vec r(a.begin(), a.end());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& s, std::span<const Scalar> v) {
    Vec r(v.begin(), v.end());
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vec& a, const Scalar& s, std::span<const Scalar> b) {
    require_len(a.size(), b.size(), "axpy");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += s * b[i];
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    require_len(a.size(), b.size(), "dot");
    if (a.empty()) return Scalar();
    Scalar r(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
    return r;
}

std::string to_string(std::span<const Scalar> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + "]";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
    require_len(values.size(), rows * cols, "Matrix::from_ints");
    Matrix m(f, rows, cols);
    std::size_t i = 0;
    for (long x : values) m.data_[i++] = Scalar(f, x);
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_len(rows[r].size(), cols, "Matrix::from_rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        require_len(cols[c].size(), rows, "Matrix::from_columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

std::vector<Vec> Matrix::row_vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
    require_len(v.size(), cols_, "Matrix::apply");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

bool Matrix::is_zero() const { return coalg::is_zero(data_); }

Matrix Matrix::row_block(std::size_t begin, std::size_t end) const {
    Matrix m(field_, end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
    return m;
}

Matrix Matrix::column_block(std::size_t begin, std::size_t end) const {
    Matrix m(field_, rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
    return m;
}

Matrix Matrix::vstack(const Matrix& other) const {
    require_len(cols_, other.cols_, "Matrix::vstack");
    Matrix m(field_, rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix Matrix::hstack(const Matrix& other) const {
    require_len(rows_, other.rows_, "Matrix::hstack");
    Matrix m(field_, rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_len(a.cols_, b.rows_, "matrix product");
    if (a.field_ != b.field_) throw FieldMismatch("matrix product over different fields");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x *= s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << coalg::to_string(row(r));
    }
    os << "]";
    return os.str();
}

EchelonForm rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != lead)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
        const Scalar inv = m(lead, c).inverse();
        for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            const Scalar f = m(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!m(lead, k).is_zero()) m(r, k) -= f * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {m.row_block(0, lead), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto e = rref(m.hstack(Matrix::identity(m.field(), n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) throw InvalidArgument("matrix is singular");
    return e.reduced.column_block(n, 2 * n);
}

std::optional<Vec> solve(const Matrix& a, std::span<const Scalar> b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length");
    const std::size_t n = a.cols();
    Matrix aug = a.hstack(Matrix::from_columns(a.field(), a.rows(), {Vec(b.begin(), b.end())}));
    auto e = rref(std::move(aug));
    Vec x = zero_vec(a.field(), n);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == n) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, n);
    }
    return x;
}

}  // namespace coalg
