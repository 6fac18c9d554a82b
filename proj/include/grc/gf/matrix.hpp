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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "grc/gf/field.hpp"

namespace grc::gf {

using Vec = std::vector<Symbol>;

/// Dense row-major matrix over a base field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Symbol> data);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows);
    static Matrix column(FieldPtr field, const Vec& v);
    static Matrix row(FieldPtr field, const Vec& v);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Symbol>& data() const { return data_; }

    Symbol& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Vec row_vec(std::size_t r) const;
    Vec col_vec(std::size_t c) const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    /// y = A x for a column vector x.
    Vec apply(std::span<const Symbol> x) const;
    Matrix transpose() const;
    /// Rows [begin, begin + count).
    Matrix row_block(std::size_t begin, std::size_t count) const;
    Matrix col_block(std::size_t begin, std::size_t count) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;

    static Matrix vstack(const std::vector<Matrix>& parts);
    static Matrix hstack(const std::vector<Matrix>& parts);
    static Matrix block_diag(const std::vector<Matrix>& parts);

private:
    void require_same(const Matrix& o) const;

    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Symbol> data_;
};

std::size_t mat_rank(const Matrix& a);
/// Any solution X of A X = B. Throws InconsistentSystem.
Matrix mat_solve(const Matrix& a, const Matrix& b);
/// Throws SingularMatrix unless A is square with full rank.
Matrix mat_invert(const Matrix& a);
/// Columns form a basis of {x : A x = 0}.
Matrix mat_nullspace(const Matrix& a);

/// Square Vandermonde matrix V[i][j] = points[i]^j with `cols` columns.
Matrix vandermonde(FieldPtr field, std::span<const Symbol> points, std::size_t cols);

}  // namespace grc::gf
