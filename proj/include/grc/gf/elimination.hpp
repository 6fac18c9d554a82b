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

// Gaussian elimination over an arbitrary field, parameterised by an Ops
// policy so the same code serves base fields and extension fields.
//
// An Ops type provides:
//   using value_type = ...;
//   value_type zero() const, one() const;
//   bool is_zero(const value_type&) const;
//   value_type add(a, b), sub(a, b), mul(a, b), inv(a) const;

#include <cstddef>
#include <optional>
#include <vector>

namespace grc::gf::detail {

template <class Ops>
struct Dense {
    using T = typename Ops::value_type;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Reduced row echelon form in place. Returns pivot columns (one per rank).
// Only the first `limit_cols` columns are eligible as pivots.
template <class Ops>
std::vector<std::size_t> rref(const Ops& ops, Dense<Ops>& m, std::size_t limit_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit_cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && ops.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        }
        const auto scale = ops.inv(m.at(row, col));
        for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = ops.mul(m.at(row, c), scale);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || ops.is_zero(m.at(r, col))) continue;
            const auto factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = ops.sub(m.at(r, c), ops.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Ops>
std::size_t rank(const Ops& ops, Dense<Ops> m) {
    return rref(ops, m, m.cols).size();
}

// Solves A X = B. Returns nullopt when the system is inconsistent. Free
// variables are set to zero.
template <class Ops>
std::optional<Dense<Ops>> solve(const Ops& ops, const Dense<Ops>& a, const Dense<Ops>& b) {
    Dense<Ops> aug;
    aug.rows = a.rows;
    aug.cols = a.cols + b.cols;
    aug.data.reserve(aug.rows * aug.cols);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) aug.data.push_back(a.at(r, c));
        for (std::size_t c = 0; c < b.cols; ++c) aug.data.push_back(b.at(r, c));
    }
    const auto pivots = rref(ops, aug, a.cols);
    for (std::size_t r = pivots.size(); r < aug.rows; ++r) {
        for (std::size_t c = a.cols; c < aug.cols; ++c)
            if (!ops.is_zero(aug.at(r, c))) return std::nullopt;
    }
    Dense<Ops> x;
    x.rows = a.cols;
    x.cols = b.cols;
    x.data.assign(x.rows * x.cols, ops.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t c = 0; c < b.cols; ++c) x.at(pivots[i], c) = aug.at(i, a.cols + c);
    }
    return x;
}

// Basis of the right nullspace {x : A x = 0}, returned as columns of a
// (cols x nullity) matrix.
template <class Ops>
Dense<Ops> nullspace(const Ops& ops, Dense<Ops> a) {
    const auto pivots = rref(ops, a, a.cols);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Dense<Ops> basis;
    basis.rows = a.cols;
    basis.cols = a.cols - pivots.size();
    basis.data.assign(basis.rows * basis.cols, ops.zero());
    std::size_t k = 0;
    for (std::size_t free = 0; free < a.cols; ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, k) = ops.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis.at(pivots[i], k) = ops.sub(ops.zero(), a.at(i, free));
        ++k;
    }
    return basis;
}

}  // namespace grc::gf::detail
