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

#include <span>
#include <vector>

#include "grc/codes/linear_code.hpp"
#include "grc/codes/sympower.hpp"

namespace grc::codes {

/// Generalized product-matrix MSR code with parameters
/// d = (k-1)t/(t-1), l = C(k-1, t-1), beta = C(k-2, t-2), M = t C(k, t).
///
/// The file is a functional phi on X (x) S^t Y with X = F^t and
/// Y = F^{k-t+1}, given by its values on the basis e_a (x) Y_mu (a outer,
/// mu in the symmetric-power order). Node i stores phi on
/// x_i (x) y_i Y_nu for the monomials nu of degree t-1.
class GpmCode {
public:
    GpmCode(FieldPtr field, int n, int k, int t, std::vector<Vec> x, std::vector<Vec> y);

    /// x_i = (a_i^{e}) for e in x_exponents, likewise y_i. The evaluation
    /// of 0^0 is 1.
    static GpmCode from_points(FieldPtr field, int n, int k, int t, std::vector<Symbol> points,
                               const std::vector<int>& x_exponents, const std::vector<int>& y_exponents);
    /// Default exponents and the first point set (in a fixed search order)
    /// satisfying the three spanning conditions.
    static GpmCode with_default_points(int n, int k, int t, FieldPtr field = nullptr);
    static std::vector<int> default_x_exponents(int k, int t);
    static std::vector<int> default_y_exponents(int k, int t);

    /// Checks: every t-subset of x spans F^t, every (k-t+1)-subset of y spans
    /// F^{k-t+1}, and every d-subset of the spaces x_i (x) y_i S^{t-2}Y spans
    /// X (x) S^{t-1}Y.
    static bool conditions_hold(const FieldPtr& field, int n, int k, int t, const std::vector<Vec>& x,
                                const std::vector<Vec>& y);

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    int d() const { return d_; }
    int l() const { return static_cast<int>(basis_t1_.size()); }
    int beta() const { return static_cast<int>(basis_t2_.size()); }
    int M() const { return t_ * static_cast<int>(basis_t_.size()); }
    const std::vector<Vec>& x() const { return x_; }
    const std::vector<Vec>& y() const { return y_; }
    const std::vector<Symbol>& points() const { return points_; }

    NodeContents encode(const Vec& file) const;
    Vec reconstruct(std::span<const int> nodes, const NodeContents& contents) const;
    /// phi on x_h (x) y_h Y_j y_f for the degree-(t-2) monomials j.
    Vec helper_symbols(const Vec& helper_content, int h, int f) const;
    /// Coefficient matrices U_h (l x beta) expressing x_f (x) y_f Y_nu in the
    /// helpers' transmitted tensors, one per helper in D order.
    std::vector<Matrix> repair_coefficients(int f, std::span<const int> helpers) const;
    /// sum over the subset of U_h times the helper's symbols.
    Vec ip_combine(std::span<const int> subset, const std::vector<Vec>& symbols, int f,
                   std::span<const int> helpers) const;

    const LinearCode& linear() const { return linear_; }

private:
    Matrix projection(int f) const;
    // Coordinates of x (x) (y . Y_m) in X (x) S^{deg(m)+1} Y.
    Vec tensor(const Vec& x, const Vec& y, const std::vector<int>& m, const SymPowerBasis& target) const;
    void check_node(int i) const;

    FieldPtr field_;
    int n_;
    int k_;
    int t_;
    int d_;
    std::vector<Vec> x_;
    std::vector<Vec> y_;
    std::vector<Symbol> points_;
    SymPowerBasis basis_t_;
    SymPowerBasis basis_t1_;
    SymPowerBasis basis_t2_;
    LinearCode linear_;
};

}  // namespace grc::codes
