// Copyright 2026 The grc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grc/gf/matrix.hpp"

#include "grc/error.hpp"
#include "grc/gf/elimination.hpp"

namespace grc::gf {
namespace {

struct BaseOps {
    using value_type = Symbol;
    const Field* f;
    Symbol zero() const { return 0; }
    Symbol one() const { return 1; }
    bool is_zero(Symbol a) const { return a == 0; }
    Symbol add(Symbol a, Symbol b) const { return f->add(a, b); }
    Symbol sub(Symbol a, Symbol b) const { return f->sub(a, b); }
    Symbol mul(Symbol a, Symbol b) const { return f->mul(a, b); }
    Symbol inv(Symbol a) const { return f->inv(a); }
};

detail::Dense<BaseOps> to_dense(const Matrix& m) {
    return {m.rows(), m.cols(), m.data()};
}

Matrix from_dense(const FieldPtr& f, detail::Dense<BaseOps> d) {
    return Matrix(f, d.rows, d.cols, std::move(d.data));
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw ParameterError("matrix requires a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Symbol> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (!field_) throw ParameterError("matrix requires a field");
    if (data_.size() != rows_ * cols_) throw ParameterError("matrix data does not match dimensions");
    for (auto s : data_)
        if (!field_->contains(s)) throw ParameterError("matrix entry outside field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Symbol> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw ParameterError("ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::column(FieldPtr field, const Vec& v) { return Matrix(std::move(field), v.size(), 1, v); }
Matrix Matrix::row(FieldPtr field, const Vec& v) { return Matrix(std::move(field), 1, v.size(), v); }

Vec Matrix::row_vec(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col_vec(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

bool Matrix::is_zero() const {
    for (auto s : data_)
        if (s != 0) return false;
    return true;
}

void Matrix::require_same(const Matrix& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_)) throw FieldMismatch();
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same(o);
    if (cols_ != o.rows_) throw ParameterError("matrix product dimension mismatch");
    Matrix out(field_, rows_, o.cols_);
    const Field& f = *field_;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Symbol a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out.at(r, c) = f.add(out.at(r, c), f.mul(a, o.at(k, c)));
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ParameterError("matrix sum dimension mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ParameterError("matrix difference dimension mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], o.data_[i]);
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
           (field_ == o.field_ || *field_ == *o.field_);
}

Vec Matrix::apply(std::span<const Symbol> x) const {
    if (x.size() != cols_) throw ParameterError("matrix-vector dimension mismatch");
    Vec y(rows_, 0);
    const Field& f = *field_;
    for (std::size_t r = 0; r < rows_; ++r) {
        Symbol acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(at(r, c), x[c]));
        y[r] = acc;
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Matrix Matrix::row_block(std::size_t begin, std::size_t count) const {
    if (begin + count > rows_) throw ParameterError("row block out of range");
    return Matrix(field_, count, cols_,
                  std::vector<Symbol>(data_.begin() + static_cast<std::ptrdiff_t>(begin * cols_),
                                      data_.begin() + static_cast<std::ptrdiff_t>((begin + count) * cols_)));
}

Matrix Matrix::col_block(std::size_t begin, std::size_t count) const {
    if (begin + count > cols_) throw ParameterError("column block out of range");
    Matrix out(field_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) out.at(r, c) = at(r, begin + c);
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix out(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw ParameterError("row index out of range");
        for (std::size_t c = 0; c < cols_; ++c) out.at(i, c) = at(idx[i], c);
    }
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw ParameterError("vstack of nothing");
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols_ != parts.front().cols_) throw ParameterError("vstack column mismatch");
        rows += p.rows_;
    }
    std::vector<Symbol> data;
    data.reserve(rows * parts.front().cols_);
    for (const auto& p : parts) data.insert(data.end(), p.data_.begin(), p.data_.end());
    return Matrix(parts.front().field_, rows, parts.front().cols_, std::move(data));
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw ParameterError("hstack of nothing");
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows_ != parts.front().rows_) throw ParameterError("hstack row mismatch");
        cols += p.cols_;
    }
    Matrix out(parts.front().field_, parts.front().rows_, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t r = 0; r < p.rows_; ++r)
            for (std::size_t c = 0; c < p.cols_; ++c) out.at(r, off + c) = p.at(r, c);
        off += p.cols_;
    }
    return out;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& parts) {
    if (parts.empty()) throw ParameterError("block_diag of nothing");
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& p : parts) {
        rows += p.rows_;
        cols += p.cols_;
    }
    Matrix out(parts.front().field_, rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        for (std::size_t r = 0; r < p.rows_; ++r)
            for (std::size_t c = 0; c < p.cols_; ++c) out.at(r0 + r, c0 + c) = p.at(r, c);
        r0 += p.rows_;
        c0 += p.cols_;
    }
    return out;
}

std::size_t mat_rank(const Matrix& a) {
    return detail::rank(BaseOps{a.field().get()}, to_dense(a));
}

Matrix mat_solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ParameterError("solve: row count mismatch");
    if (!(*a.field() == *b.field())) throw FieldMismatch();
    auto x = detail::solve(BaseOps{a.field().get()}, to_dense(a), to_dense(b));
    if (!x) throw InconsistentSystem("linear system has no solution");
    return from_dense(a.field(), std::move(*x));
}

Matrix mat_invert(const Matrix& a) {
    if (a.rows() != a.cols()) throw SingularMatrix("cannot invert a non-square matrix");
    if (mat_rank(a) != a.rows()) throw SingularMatrix("matrix is singular");
    return mat_solve(a, Matrix::identity(a.field(), a.rows()));
}

Matrix mat_nullspace(const Matrix& a) {
    return from_dense(a.field(), detail::nullspace(BaseOps{a.field().get()}, to_dense(a)));
}

Matrix vandermonde(FieldPtr field, std::span<const Symbol> points, std::size_t cols) {
    Matrix v(field, points.size(), cols);
    for (std::size_t i = 0; i < points.size(); ++i) {
        Symbol p = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            v.at(i, j) = p;
            p = field->mul(p, points[i]);
        }
    }
    return v;
}

}  // namespace grc::gf
