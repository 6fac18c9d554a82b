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

#include "grc/codes/pm.hpp"

#include <numeric>
#include <set>

#include "grc/error.hpp"

namespace grc::codes {
namespace {

using gf::Field;

// Position of (r, c), r <= c, in the row-major upper triangle of a
// dim x dim matrix.
std::size_t tri_index(int dim, int r, int c) {
    if (r > c) std::swap(r, c);
    return static_cast<std::size_t>(r * dim - r * (r - 1) / 2 + (c - r));
}

Matrix symmetric_from(const FieldPtr& f, int dim, std::span<const Symbol> packed) {
    Matrix s(f, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) s.at(r, c) = packed[tri_index(dim, r, c)];
    return s;
}

void check_points(const Field& f, int k, const std::vector<Symbol>& pts) {
    std::set<Symbol> seen;
    std::set<Symbol> lambdas;
    for (auto a : pts) {
        if (a == 0 || !f.contains(a)) throw ParameterError("PM evaluation points must be nonzero field elements");
        if (!seen.insert(a).second) throw ParameterError("PM evaluation points must be distinct");
        if (!lambdas.insert(f.pow(a, static_cast<std::uint64_t>(k - 1))).second)
            throw ParameterError("PM points need distinct (k-1)-th powers; use a larger field");
    }
}

}  // namespace

FieldPtr PmCode::default_field(int n, int k) {
    for (unsigned w = 2; w <= Field::kMaxBinaryDegree; ++w) {
        const std::uint32_t group = (1U << w) - 1;
        if (group < static_cast<std::uint32_t>(n)) continue;
        if (std::gcd(group, static_cast<std::uint32_t>(k - 1)) != 1) continue;
        return Field::binary(w);
    }
    throw ParameterError("no supported binary field realizes this PM code");
}

PmCode PmCode::with_default_points(int n, int k, FieldPtr field) {
    if (!field) field = default_field(n, k);
    std::vector<Symbol> pts;
    Symbol a = 1;
    for (int i = 0; i < n; ++i) {
        pts.push_back(a);
        a = field->mul(a, field->primitive_element());
    }
    return PmCode(field, n, k, std::move(pts));
}

PmCode::PmCode(FieldPtr field, int n, int k, std::vector<Symbol> points)
    : field_(std::move(field)),
      n_(n),
      k_(k),
      points_(std::move(points)),
      linear_("pm", field_, 2, 1, 1, 1, Matrix(field_, 2, 1), {}) {
    if (k_ < 2) throw ParameterError("PM codes need k >= 2");
    if (2 * (k_ - 1) > n_ - 1) throw ParameterError("PM codes need d = 2(k-1) <= n-1");
    if (points_.size() != static_cast<std::size_t>(n_)) throw ParameterError("need one evaluation point per node");
    check_points(*field_, k_, points_);
    const Matrix g = generator_from_encoder(field_, n_, l(), M(), [this](const Vec& f) { return encode(f); });
    auto proj = [fld = field_, pts = points_, dim = l()](int, int failed, int) {
        Matrix row(fld, 1, static_cast<std::size_t>(dim));
        Symbol p = 1;
        for (int j = 0; j < dim; ++j) {
            row.at(0, j) = p;
            p = fld->mul(p, pts[failed]);
        }
        return row;
    };
    linear_ = LinearCode("pm", field_, n_, k_, d(), l(), g, proj);
}

void PmCode::check_node(int i) const {
    if (i < 0 || i >= n_) throw ParameterError("node index out of range");
}

Vec PmCode::phi(Symbol a) const {
    Vec v(static_cast<std::size_t>(l()));
    Symbol p = 1;
    for (auto& s : v) {
        s = p;
        p = field_->mul(p, a);
    }
    return v;
}

NodeContents PmCode::encode(const Vec& file) const {
    if (file.size() != static_cast<std::size_t>(M())) throw ParameterError("PM file length must be k(k-1)");
    const int dim = l();
    const std::size_t half = file.size() / 2;
    const Matrix s1 = symmetric_from(field_, dim, std::span<const Symbol>(file).first(half));
    const Matrix s2 = symmetric_from(field_, dim, std::span<const Symbol>(file).subspan(half));
    NodeContents out;
    for (int i = 0; i < n_; ++i) {
        const Matrix ph = Matrix::row(field_, phi(points_[i]));
        const Symbol lambda = field_->pow(points_[i], static_cast<std::uint64_t>(k_ - 1));
        const Vec a = (ph * s1).row_vec(0);
        const Vec b = (ph * s2).row_vec(0);
        Vec node(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) node[j] = field_->add(a[j], field_->mul(lambda, b[j]));
        out.push_back(std::move(node));
    }
    return out;
}

Vec PmCode::reconstruct(std::span<const int> nodes, const NodeContents& contents) const {
    if (nodes.size() != static_cast<std::size_t>(k_)) throw ParameterError("PM reconstruction needs exactly k nodes");
    if (contents.size() != nodes.size()) throw ParameterError("one content vector per node required");
    std::set<int> uniq(nodes.begin(), nodes.end());
    if (uniq.size() != nodes.size()) throw ParameterError("duplicate node index");
    const Field& f = *field_;
    const int dim = l();
    std::vector<Vec> phis;
    std::vector<Symbol> lambdas;
    for (int i : nodes) {
        check_node(i);
        phis.push_back(phi(points_[i]));
        lambdas.push_back(f.pow(points_[i], static_cast<std::uint64_t>(k_ - 1)));
    }
    for (const auto& c : contents)
        if (c.size() != static_cast<std::size_t>(dim)) throw ParameterError("node content must have l symbols");

    // A = C Phi^T = P + Lambda Q with P = Phi S1 Phi^T, Q = Phi S2 Phi^T symmetric.
    const Matrix c = Matrix::from_rows(field_, contents);
    const Matrix ph = Matrix::from_rows(field_, phis);
    const Matrix a = c * ph.transpose();
    const std::size_t kk = nodes.size();
    Matrix p(field_, kk, kk);
    Matrix q(field_, kk, kk);
    for (std::size_t i = 0; i < kk; ++i) {
        for (std::size_t j = 0; j < kk; ++j) {
            if (i == j) continue;
            const Symbol qij = f.div(f.sub(a.at(i, j), a.at(j, i)), f.sub(lambdas[i], lambdas[j]));
            q.at(i, j) = qij;
            p.at(i, j) = f.sub(a.at(i, j), f.mul(lambdas[i], qij));
        }
    }
    // Row i of P (off-diagonal) equals (phi_i S1) Phi_{-i}^T; solve for phi_i S1.
    auto recover = [&](const Matrix& pq) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) {
            std::vector<std::size_t> others;
            Vec rhs;
            for (std::size_t j = 0; j < kk; ++j) {
                if (j == i) continue;
                others.push_back(j);
                rhs.push_back(pq.at(i, j));
            }
            const Matrix sub = ph.select_rows(others);
            rows.push_back(gf::mat_solve(sub, Matrix::column(field_, rhs)).col_vec(0));
        }
        // rows[i] = phi_i S for the first dim nodes; S = Phi_dim^{-1} rows.
        std::vector<std::size_t> first(static_cast<std::size_t>(dim));
        std::iota(first.begin(), first.end(), 0);
        return gf::mat_solve(ph.select_rows(first), Matrix::from_rows(field_, rows));
    };
    const Matrix s1 = recover(p);
    const Matrix s2 = recover(q);
    Vec file;
    for (const Matrix* s : {&s1, &s2})
        for (int r = 0; r < dim; ++r)
            for (int col = r; col < dim; ++col) file.push_back(s->at(r, col));
    return file;
}

Symbol PmCode::helper_symbol(const Vec& helper_content, int h, int f) const {
    check_node(h);
    check_node(f);
    if (h == f) throw ParameterError("helper must differ from the failed node");
    if (helper_content.size() != static_cast<std::size_t>(l())) throw ParameterError("node content must have l symbols");
    const Vec pf = phi(points_[f]);
    Symbol acc = 0;
    for (std::size_t j = 0; j < pf.size(); ++j) acc = field_->add(acc, field_->mul(helper_content[j], pf[j]));
    return acc;
}

Vec PmCode::af_repair(std::span<const int> helpers, std::span<const Symbol> symbols, int f) const {
    check_node(f);
    if (helpers.size() != static_cast<std::size_t>(d())) throw ParameterError("PM repair needs exactly d helpers");
    if (symbols.size() != helpers.size()) throw ParameterError("one symbol per helper required");
    std::set<int> uniq(helpers.begin(), helpers.end());
    if (uniq.size() != helpers.size() || uniq.count(f) != 0) throw ParameterError("helpers must be distinct and exclude f");
    // Psi_h = (phi_h, lambda_h phi_h) is the Vandermonde row (1, a_h, ..., a_h^{d-1}).
    std::vector<Symbol> pts;
    for (int h : helpers) {
        check_node(h);
        pts.push_back(points_[h]);
    }
    const Matrix psi = gf::vandermonde(field_, pts, static_cast<std::size_t>(d()));
    const Vec z = gf::mat_solve(psi, Matrix::column(field_, Vec(symbols.begin(), symbols.end()))).col_vec(0);
    const Symbol lambda = field_->pow(points_[f], static_cast<std::uint64_t>(k_ - 1));
    Vec out(static_cast<std::size_t>(l()));
    for (int j = 0; j < l(); ++j) out[j] = field_->add(z[j], field_->mul(lambda, z[l() + j]));
    return out;
}

Vec PmCode::ip_combine(const std::optional<Vec>& partial, std::span<const int> subset, std::span<const Symbol> symbols,
                       int f, std::span<const int> helpers) const {
    check_node(f);
    if (symbols.size() != subset.size()) throw ParameterError("one symbol per helper required");
    const Field& fld = *field_;
    Vec out = partial.value_or(Vec(static_cast<std::size_t>(l()), 0));
    if (out.size() != static_cast<std::size_t>(l())) throw ParameterError("partial must have l symbols");
    const Symbol lambda = fld.pow(points_[f], static_cast<std::uint64_t>(k_ - 1));
    for (std::size_t s = 0; s < subset.size(); ++s) {
        const int h = subset[s];
        bool in_d = false;
        for (int x : helpers) in_d = in_d || x == h;
        if (!in_d) throw ParameterError("helper outside the helper set");
        // Coefficients of the Lagrange polynomial l^{(h)}(z) over the points of D.
        Vec poly{1};
        Symbol denom = 1;
        for (int i : helpers) {
            if (i == h) continue;
            Vec next(poly.size() + 1, 0);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] = fld.add(next[j + 1], poly[j]);
                next[j] = fld.sub(next[j], fld.mul(points_[i], poly[j]));
            }
            poly = std::move(next);
            denom = fld.mul(denom, fld.sub(points_[h], points_[i]));
        }
        const Symbol scale = fld.div(symbols[s], denom);
        poly.resize(static_cast<std::size_t>(2 * l()), 0);
        for (int j = 0; j < l(); ++j) {
            const Symbol coef = fld.add(poly[j], fld.mul(lambda, poly[l() + j]));
            out[j] = fld.add(out[j], fld.mul(scale, coef));
        }
    }
    return out;
}

}  // namespace grc::codes
