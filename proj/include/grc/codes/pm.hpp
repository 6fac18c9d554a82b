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

#include <optional>
#include <span>
#include <vector>

#include "grc/codes/linear_code.hpp"

namespace grc::codes {

/// Product-matrix MSR code [n, k, d = 2(k-1), l = k-1, beta = 1, M = k(k-1)].
///
/// The file fills two symmetric (k-1)x(k-1) matrices S1, S2 (upper triangle,
/// row-major, S1 first). Node i stores phi_i S1 + lambda_i phi_i S2 with
/// phi_i = (1, a_i, ..., a_i^{k-2}) and lambda_i = a_i^{k-1}.
class PmCode {
public:
    PmCode(FieldPtr field, int n, int k, std::vector<Symbol> points);
    /// Points a_i = g^i for the field's primitive element g.
    static PmCode with_default_points(int n, int k, FieldPtr field = nullptr);
    /// Smallest GF(2^w) with at least n nonzero points whose (k-1)-th powers
    /// are pairwise distinct.
    static FieldPtr default_field(int n, int k);

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int d() const { return 2 * (k_ - 1); }
    int l() const { return k_ - 1; }
    int M() const { return k_ * (k_ - 1); }
    const std::vector<Symbol>& points() const { return points_; }

    NodeContents encode(const Vec& file) const;
    /// Recovers the file from exactly k nodes by the product-matrix decoder.
    Vec reconstruct(std::span<const int> nodes, const NodeContents& contents) const;
    /// g^{(h)}(a_f) = content_h . phi_f
    Symbol helper_symbol(const Vec& helper_content, int h, int f) const;
    /// Node f's content from the d helpers' symbols.
    Vec af_repair(std::span<const int> helpers, std::span<const Symbol> symbols, int f) const;
    /// xi(f, A) plus the optional partial sum; Lagrange basis taken over D.
    Vec ip_combine(const std::optional<Vec>& partial, std::span<const int> subset,
                   std::span<const Symbol> symbols, int f, std::span<const int> helpers) const;

    /// The same code as a generic linear code (generator + projections).
    const LinearCode& linear() const { return linear_; }

private:
    Vec phi(Symbol a) const;
    void check_node(int i) const;

    FieldPtr field_;
    int n_;
    int k_;
    std::vector<Symbol> points_;
    LinearCode linear_;
};

}  // namespace grc::codes
