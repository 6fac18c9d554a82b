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

#include "grc/codes/gpm.hpp"

#include <functional>
#include <optional>
#include <set>

#include "grc/error.hpp"

namespace grc::codes {
namespace {

Vec tensor_coords(const gf::Field& f, const Vec& x, const Vec& y, const std::vector<int>& m,
                  const SymPowerBasis& target) {
    const std::size_t block = target.size();
    Vec out(x.size() * block, 0);
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a] == 0) continue;
        for (std::size_t r = 0; r < y.size(); ++r) {
            if (y[r] == 0) continue;
            const std::size_t idx = target.index_of(sym_product(m, {static_cast<int>(r)}));
            out[a * block + idx] = f.add(out[a * block + idx], f.mul(x[a], y[r]));
        }
    }
    return out;
}

Matrix projection_for(const FieldPtr& field, const Vec& yf, const SymPowerBasis& b1, const SymPowerBasis& b2) {
    Matrix p(field, b2.size(), b1.size());
    for (std::size_t j = 0; j < b2.size(); ++j) {
        for (std::size_t r = 0; r < yf.size(); ++r) {
            const std::size_t nu = b1.index_of(sym_product(b2.monomial(j), {static_cast<int>(r)}));
            p.at(j, nu) = field->add(p.at(j, nu), yf[r]);
        }
    }
    return p;
}

// Calls fn on every size-r subset of {0..n-1}; stops early when fn returns false.
bool for_each_subset(int n, int r, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return false;
        int pos = r - 1;
        while (pos >= 0 && idx[pos] == n - r + pos) --pos;
        if (pos < 0) return true;
        ++idx[pos];
        for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
}

int repair_degree(int k, int t) {
    if (t < 2 || t > k) throw ParameterError("GPM codes need 2 <= t <= k");
    if (((k - 1) * t) % (t - 1) != 0) throw ParameterError("GPM repair degree (k-1)t/(t-1) must be an integer");
    return (k - 1) * t / (t - 1);
}

int checked_degree(int n, int k, int t) {
    const int d = repair_degree(k, t);
    if (k > n - 1 || d > n - 1) throw ParameterError("GPM codes need k <= d <= n-1");
    return d;
}

Vec power_vector(const gf::Field& f, Symbol a, const std::vector<int>& exps) {
    Vec v;
    for (int e : exps) v.push_back(e == 0 ? Symbol{1} : f.pow(a, static_cast<std::uint64_t>(e)));
    return v;
}

}  // namespace

std::vector<int> GpmCode::default_x_exponents(int k, int t) {
    const int r = k - t + 1;
    if (t == 3 && r == 3) return {0, 2, 6};
    std::vector<int> e;
    for (int a = 0; a < t; ++a) e.push_back(a * r);
    return e;
}

std::vector<int> GpmCode::default_y_exponents(int k, int t) {
    const int r = k - t + 1;
    if (t == 3 && r == 3) return {0, 1, 3};
    std::vector<int> e;
    for (int j = 0; j < r; ++j) e.push_back(j);
    return e;
}

bool GpmCode::conditions_hold(const FieldPtr& field, int n, int k, int t, const std::vector<Vec>& x,
                              const std::vector<Vec>& y) {
    const int d = checked_degree(n, k, t);
    const int r = k - t + 1;
    if (x.size() != static_cast<std::size_t>(n) || y.size() != static_cast<std::size_t>(n)) return false;
    auto spans = [&](const std::vector<Vec>& vs, int size, int dim) {
        return for_each_subset(n, size, [&](const std::vector<int>& s) {
            std::vector<Vec> rows;
            for (int i : s) rows.push_back(vs[i]);
            return gf::mat_rank(Matrix::from_rows(field, rows)) == static_cast<std::size_t>(dim);
        });
    };
    if (!spans(x, t, t)) return false;
    if (!spans(y, r, r)) return false;
    const SymPowerBasis b1(r, t - 1);
    const SymPowerBasis b2(r, t - 2);
    const std::size_t full = static_cast<std::size_t>(t) * b1.size();
    return for_each_subset(n, d, [&](const std::vector<int>& s) {
        std::vector<Vec> rows;
        for (int h : s)
            for (std::size_t j = 0; j < b2.size(); ++j) rows.push_back(tensor_coords(*field, x[h], y[h], b2.monomial(j), b1));
        return gf::mat_rank(Matrix::from_rows(field, rows)) == full;
    });
}

GpmCode GpmCode::from_points(FieldPtr field, int n, int k, int t, std::vector<Symbol> points,
                             const std::vector<int>& x_exponents, const std::vector<int>& y_exponents) {
    if (points.size() != static_cast<std::size_t>(n)) throw ParameterError("need one point per node");
    std::vector<Vec> x;
    std::vector<Vec> y;
    for (auto a : points) {
        x.push_back(power_vector(*field, a, x_exponents));
        y.push_back(power_vector(*field, a, y_exponents));
    }
    GpmCode code(std::move(field), n, k, t, std::move(x), std::move(y));
    code.points_ = std::move(points);
    return code;
}

GpmCode GpmCode::with_default_points(int n, int k, int t, FieldPtr field) {
    checked_degree(n, k, t);
    if (!field) {
        unsigned w = 4;
        while ((1U << w) < static_cast<std::uint32_t>(n)) ++w;
        field = gf::Field::binary(w);
    }
    if (field->order() < static_cast<std::uint32_t>(n)) throw ParameterError("field has fewer elements than nodes");
    const auto xe = default_x_exponents(k, t);
    const auto ye = default_y_exponents(k, t);
    auto build = [&](const std::vector<Symbol>& pts) {
        std::vector<Vec> x;
        std::vector<Vec> y;
        for (auto a : pts) {
            x.push_back(power_vector(*field, a, xe));
            y.push_back(power_vector(*field, a, ye));
        }
        return std::make_pair(x, y);
    };
    std::vector<std::vector<Symbol>> candidates;
    {
        std::vector<Symbol> pts;
        Symbol a = 1;
        for (int i = 0; i < n; ++i) {
            pts.push_back(a);
            a = field->mul(a, field->primitive_element());
        }
        candidates.push_back(pts);
        pts.pop_back();
        pts.insert(pts.begin(), 0);
        candidates.push_back(pts);
    }
    for (const auto& pts : candidates) {
        auto [x, y] = build(pts);
        if (conditions_hold(field, n, k, t, x, y)) return from_points(field, n, k, t, pts, xe, ye);
    }
    constexpr int kSearchBudget = 20000;
    int tried = 0;
    std::optional<std::vector<Symbol>> found;
    for_each_subset(static_cast<int>(field->order()), n, [&](const std::vector<int>& s) {
        std::vector<Symbol> pts(s.begin(), s.end());
        auto [x, y] = build(pts);
        if (conditions_hold(field, n, k, t, x, y)) {
            found = pts;
            return false;
        }
        return ++tried < kSearchBudget;
    });
    if (!found) throw ParameterError("no GPM point set satisfying the spanning conditions was found");
    return from_points(field, n, k, t, *found, xe, ye);
}

GpmCode::GpmCode(FieldPtr field, int n, int k, int t, std::vector<Vec> x, std::vector<Vec> y)
    : field_(std::move(field)),
      n_(n),
      k_(k),
      t_(t),
      d_(checked_degree(n, k, t)),
      x_(std::move(x)),
      y_(std::move(y)),
      basis_t_(k - t + 1, t),
      basis_t1_(k - t + 1, t - 1),
      basis_t2_(k - t + 1, t - 2),
      linear_("gpm", field_, 2, 1, 1, 1, Matrix(field_, 2, 1), {}) {
    for (const auto& v : x_)
        if (v.size() != static_cast<std::size_t>(t_)) throw ParameterError("x_i must have t coordinates");
    for (const auto& v : y_)
        if (v.size() != static_cast<std::size_t>(k_ - t_ + 1)) throw ParameterError("y_i must have k-t+1 coordinates");
    if (!conditions_hold(field_, n_, k_, t_, x_, y_))
        throw ParameterError("GPM vectors violate the spanning conditions");
    const Matrix g = generator_from_encoder(field_, n_, l(), M(), [this](const Vec& f) { return encode(f); });
    auto proj = [fld = field_, ys = y_, b1 = basis_t1_, b2 = basis_t2_](int, int failed, int) {
        return projection_for(fld, ys[failed], b1, b2);
    };
    linear_ = LinearCode("gpm", field_, n_, k_, d_, l(), g, proj);
}

void GpmCode::check_node(int i) const {
    if (i < 0 || i >= n_) throw ParameterError("node index out of range");
}

Vec GpmCode::tensor(const Vec& x, const Vec& y, const std::vector<int>& m, const SymPowerBasis& target) const {
    return tensor_coords(*field_, x, y, m, target);
}

Matrix GpmCode::projection(int f) const { return projection_for(field_, y_[f], basis_t1_, basis_t2_); }

NodeContents GpmCode::encode(const Vec& file) const {
    if (file.size() != static_cast<std::size_t>(M())) throw ParameterError("GPM file length must be t C(k,t)");
    NodeContents out;
    for (int i = 0; i < n_; ++i) {
        Vec node;
        for (std::size_t nu = 0; nu < basis_t1_.size(); ++nu) {
            const Vec coords = tensor(x_[i], y_[i], basis_t1_.monomial(nu), basis_t_);
            Symbol acc = 0;
            for (std::size_t c = 0; c < coords.size(); ++c) acc = field_->add(acc, field_->mul(coords[c], file[c]));
            node.push_back(acc);
        }
        out.push_back(std::move(node));
    }
    return out;
}

Vec GpmCode::reconstruct(std::span<const int> nodes, const NodeContents& contents) const {
    return linear_.reconstruct(nodes, contents);
}

Vec GpmCode::helper_symbols(const Vec& helper_content, int h, int f) const {
    check_node(h);
    check_node(f);
    if (h == f) throw ParameterError("helper must differ from the failed node");
    if (helper_content.size() != static_cast<std::size_t>(l())) throw ParameterError("node content must have l symbols");
    return projection(f).apply(helper_content);
}

std::vector<Matrix> GpmCode::repair_coefficients(int f, std::span<const int> helpers) const {
    check_node(f);
    if (helpers.size() != static_cast<std::size_t>(d_)) throw ParameterError("GPM repair needs exactly d helpers");
    std::set<int> uniq(helpers.begin(), helpers.end());
    if (uniq.size() != helpers.size() || uniq.count(f) != 0) throw ParameterError("helpers must be distinct and exclude f");
    // Columns: x_h (x) y_h Y_j in X (x) S^{t-1} Y.
    std::vector<Vec> cols;
    for (int h : helpers) {
        check_node(h);
        for (std::size_t j = 0; j < basis_t2_.size(); ++j) cols.push_back(tensor(x_[h], y_[h], basis_t2_.monomial(j), basis_t1_));
    }
    const Matrix a = Matrix::from_rows(field_, cols).transpose();
    // Targets: x_f (x) Y_nu.
    const std::size_t dim = static_cast<std::size_t>(t_) * basis_t1_.size();
    Matrix targets(field_, dim, basis_t1_.size());
    for (std::size_t nu = 0; nu < basis_t1_.size(); ++nu)
        for (int e = 0; e < t_; ++e) targets.at(static_cast<std::size_t>(e) * basis_t1_.size() + nu, nu) = x_[f][e];
    Matrix coeffs;
    try {
        coeffs = gf::mat_solve(a, targets);
    } catch (const InconsistentSystem&) {
        throw ParameterError("helper tensors do not span the repair space");
    }
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < helpers.size(); ++i)
        out.push_back(coeffs.row_block(i * basis_t2_.size(), basis_t2_.size()).transpose());
    return out;
}

Vec GpmCode::ip_combine(std::span<const int> subset, const std::vector<Vec>& symbols, int f,
                        std::span<const int> helpers) const {
    if (subset.size() != symbols.size()) throw ParameterError("one symbol vector per helper required");
    const auto u = repair_coefficients(f, helpers);
    Vec acc(static_cast<std::size_t>(l()), 0);
    for (std::size_t s = 0; s < subset.size(); ++s) {
        std::size_t pos = helpers.size();
        for (std::size_t i = 0; i < helpers.size(); ++i)
            if (helpers[i] == subset[s]) pos = i;
        if (pos == helpers.size()) throw ParameterError("helper outside the helper set");
        const Vec part = u[pos].apply(symbols[s]);
        for (std::size_t r = 0; r < acc.size(); ++r) acc[r] = field_->add(acc[r], part[r]);
    }
    return acc;
}

}  // namespace grc::codes
