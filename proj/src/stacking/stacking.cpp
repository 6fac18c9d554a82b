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

#include "grc/stacking/stacking.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "grc/bounds.hpp"
#include "grc/error.hpp"

namespace grc::stacking {

nlohmann::json StackSpec::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    std::vector<std::int64_t> boundaries;
    for (const auto& c : components) {
        comps.push_back({{"j", c.j},
                         {"degree", c.degree},
                         {"gap", c.gap},
                         {"l", c.l},
                         {"M", c.M},
                         {"kind", codes::to_string(c.kind)},
                         {"node_offset", c.node_offset},
                         {"file_offset", c.file_offset}});
        boundaries.push_back(c.node_offset);
    }
    boundaries.push_back(l);
    return {{"n", n}, {"k", k},   {"d", d},         {"B", B},
            {"mu", mu}, {"S", S}, {"l", l},         {"M", M},
            {"components", comps}, {"boundaries", boundaries}};
}

StackSpec build_stack(int n, int k, int d, std::vector<std::int64_t> B) {
    if (k < 1 || k > d || d > n - 1) throw ParameterError("stacking needs 1 <= k <= d <= n-1");
    if (B.size() != static_cast<std::size_t>(d)) throw ParameterError("B must have d entries");
    if (std::any_of(B.begin(), B.end(), [](std::int64_t b) { return b < 0; }))
        throw ParameterError("downloads must be nonnegative");
    std::sort(B.begin(), B.end());
    StackSpec s;
    s.n = n;
    s.k = k;
    s.d = d;
    s.B = B;
    std::int64_t prev = 0;
    for (int j = 1; j <= d - k + 1; ++j) {
        const std::int64_t bj = B[j - 1];
        s.mu.push_back(bj > prev ? 1 : 0);
        if (bj > prev) {
            s.S.push_back(j);
            Component c;
            c.j = j;
            c.degree = d - j + 1;
            c.gap = bj - prev;
            c.l = static_cast<std::int64_t>(d - j - k + 2) * c.gap;
            c.M = k * c.l;
            if (!codes::unit_realizable(k, c.degree))
                throw ParameterError("component " + std::to_string(j) + " needs a unit MSR code with k=" +
                                     std::to_string(k) + " and repair degree " + std::to_string(c.degree) +
                                     "; none is available");
            c.kind = codes::unit_kind(k, c.degree);
            c.node_offset = s.l;
            c.file_offset = s.M;
            s.l += c.l;
            s.M += c.M;
            s.components.push_back(c);
        }
        prev = bj;
    }
    if (s.l == 0) throw ParameterError("stacked code would store nothing");
    if (s.l != delta_r(s.B, d - k + 1)) throw Error("stacked node size differs from Delta_{d-k+1}(B)");
    return s;
}

std::vector<int> default_tau(int d) {
    std::vector<int> tau(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) tau[i] = d - i;
    return tau;
}

StackedCode::StackedCode(StackSpec spec, FieldPtr field) : spec_(std::move(spec)), field_(std::move(field)) {
    std::vector<int> degrees;
    for (const auto& c : spec_.components) degrees.push_back(c.degree);
    if (!field_) field_ = codes::unit_field(spec_.n, spec_.k, degrees);
    for (const auto& c : spec_.components) units_.push_back(codes::make_unit_msr(field_, spec_.n, spec_.k, c.degree));
}

NodeContents StackedCode::encode(const Vec& file) const {
    if (file.size() != static_cast<std::size_t>(spec_.M)) throw ParameterError("file length must equal M");
    NodeContents out(static_cast<std::size_t>(spec_.n));
    for (std::size_t c = 0; c < units_.size(); ++c) {
        const auto& unit = units_[c];
        const std::size_t um = static_cast<std::size_t>(unit.M());
        for (std::int64_t g = 0; g < spec_.components[c].gap; ++g) {
            const auto begin = file.begin() + spec_.components[c].file_offset + g * static_cast<std::int64_t>(um);
            const NodeContents part = unit.encode(Vec(begin, begin + static_cast<std::ptrdiff_t>(um)));
            for (int i = 0; i < spec_.n; ++i) out[i].insert(out[i].end(), part[i].begin(), part[i].end());
        }
    }
    return out;
}

std::vector<Vec> StackedCode::component_slices(std::size_t component, const Vec& content) const {
    if (content.size() != static_cast<std::size_t>(spec_.l)) throw ParameterError("node content must have l symbols");
    const auto& c = spec_.components.at(component);
    const std::int64_t ul = units_[component].l();
    std::vector<Vec> out;
    for (std::int64_t g = 0; g < c.gap; ++g) {
        const auto begin = content.begin() + c.node_offset + g * ul;
        out.emplace_back(begin, begin + ul);
    }
    return out;
}

Vec StackedCode::reconstruct(std::span<const int> nodes, const NodeContents& contents) const {
    if (nodes.size() != contents.size()) throw ParameterError("one content per node required");
    Vec file;
    for (std::size_t c = 0; c < units_.size(); ++c) {
        std::vector<std::vector<Vec>> slices;
        for (const auto& content : contents) slices.push_back(component_slices(c, content));
        for (std::int64_t g = 0; g < spec_.components[c].gap; ++g) {
            NodeContents part;
            for (const auto& s : slices) part.push_back(s[g]);
            const Vec piece = units_[c].reconstruct(nodes, part);
            file.insert(file.end(), piece.begin(), piece.end());
        }
    }
    return file;
}

Matrix StackedCode::slot_projection(int f, int slot) const {
    if (slot < 1 || slot > spec_.d) throw ParameterError("slot must lie in 1..d");
    const std::size_t l = static_cast<std::size_t>(spec_.l);
    std::vector<Vec> rows;
    for (std::size_t c = 0; c < units_.size(); ++c) {
        const auto& comp = spec_.components[c];
        if (comp.j > slot) continue;
        // Unit projections depend on f only; the helper argument is unused.
        const Matrix g = units_[c].repair_projection(f == 0 ? 1 : 0, f, 1);
        const std::size_t ul = static_cast<std::size_t>(units_[c].l());
        for (std::int64_t copy = 0; copy < comp.gap; ++copy) {
            const std::size_t base = static_cast<std::size_t>(comp.node_offset) + static_cast<std::size_t>(copy) * ul;
            for (std::size_t r = 0; r < g.rows(); ++r) {
                Vec row(l, 0);
                for (std::size_t x = 0; x < ul; ++x) row[base + x] = g.at(r, x);
                rows.push_back(std::move(row));
            }
        }
    }
    Matrix p(field_, rows.size(), l);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t x = 0; x < l; ++x) p.at(r, x) = rows[r][x];
    return p;
}

codes::LinearCode StackedCode::linear() const {
    const Matrix g = codes::generator_from_encoder(field_, spec_.n, l(), M(), [this](const Vec& f) { return encode(f); });
    auto proj = [self = *this](int, int failed, int slot) { return self.slot_projection(failed, slot); };
    return codes::LinearCode("stacked", field_, spec_.n, spec_.k, spec_.d, l(), g, proj);
}

std::vector<int> StackedCode::checked_tau(std::span<const int> D, std::vector<int> tau) const {
    if (D.size() != static_cast<std::size_t>(spec_.d)) throw ParameterError("repair needs exactly d helpers");
    if (tau.empty()) tau = default_tau(spec_.d);
    if (tau.size() != D.size()) throw ParameterError("tau must assign one slot per helper");
    std::vector<int> sorted = tau;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < spec_.d; ++i)
        if (sorted[i] != i + 1) throw ParameterError("tau must be a bijection onto 1..d");
    return tau;
}

codes::IpMatrixSet StackedCode::repair_plan(int f, std::span<const int> D, std::vector<int> tau) const {
    tau = checked_tau(D, std::move(tau));
    if (f < 0 || f >= spec_.n) throw ParameterError("failed node out of range");
    std::set<int> uniq(D.begin(), D.end());
    if (uniq.size() != D.size() || uniq.count(f) != 0) throw ParameterError("helpers must be distinct and exclude f");
    for (int h : D)
        if (h < 0 || h >= spec_.n) throw ParameterError("helper out of range");

    const std::size_t l = static_cast<std::size_t>(spec_.l);
    std::vector<std::vector<Vec>> proj_rows(D.size());
    std::vector<std::vector<Vec>> comb_cols(D.size());
    for (std::size_t c = 0; c < units_.size(); ++c) {
        const auto& comp = spec_.components[c];
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < D.size(); ++i)
            if (tau[i] >= comp.j) members.push_back(i);
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return tau[a] < tau[b]; });
        std::vector<int> helpers;
        for (auto i : members) helpers.push_back(D[i]);
        const auto unit_ip = codes::derive_ip_matrices(units_[c], f, helpers);
        const std::size_t ul = static_cast<std::size_t>(units_[c].l());
        for (std::size_t m = 0; m < members.size(); ++m) {
            const Matrix& g = unit_ip.projections[m];
            const Matrix& u = unit_ip.combiners[m];
            for (std::int64_t copy = 0; copy < comp.gap; ++copy) {
                const std::size_t base = static_cast<std::size_t>(comp.node_offset) + static_cast<std::size_t>(copy) * ul;
                for (std::size_t r = 0; r < g.rows(); ++r) {
                    Vec row(l, 0);
                    Vec col(l, 0);
                    for (std::size_t x = 0; x < ul; ++x) {
                        row[base + x] = g.at(r, x);
                        col[base + x] = u.at(x, r);
                    }
                    proj_rows[members[m]].push_back(std::move(row));
                    comb_cols[members[m]].push_back(std::move(col));
                }
            }
        }
    }
    codes::IpMatrixSet plan;
    plan.failed = f;
    plan.helpers.assign(D.begin(), D.end());
    plan.slots = tau;
    for (std::size_t i = 0; i < D.size(); ++i) {
        const std::size_t b = proj_rows[i].size();
        Matrix p(field_, b, l);
        Matrix u(field_, l, b);
        for (std::size_t r = 0; r < b; ++r)
            for (std::size_t x = 0; x < l; ++x) {
                p.at(r, x) = proj_rows[i][r][x];
                u.at(x, r) = comb_cols[i][r][x];
            }
        plan.projections.push_back(std::move(p));
        plan.combiners.push_back(std::move(u));
    }
    return plan;
}

RepairResult StackedCode::repair(const NodeContents& contents, int f, std::span<const int> D,
                                 std::vector<int> tau) const {
    const auto plan = repair_plan(f, D, std::move(tau));
    std::vector<Vec> symbols;
    RepairResult out;
    for (int h : D) {
        symbols.push_back(plan.helper_symbols(h, contents.at(h)));
        out.downloads.push_back(static_cast<std::int64_t>(symbols.back().size()));
    }
    out.content = plan.combine(D, symbols);
    return out;
}

IpRepairResult StackedCode::ip_repair(const NodeContents& contents, int f, std::span<const int> D,
                                      std::span<const int> A, std::vector<int> tau) const {
    const auto plan = repair_plan(f, D, std::move(tau));
    std::set<int> in_a(A.begin(), A.end());
    if (in_a.size() != A.size()) throw ParameterError("subset has repeated helpers");
    for (int h : A)
        if (std::find(D.begin(), D.end(), h) == D.end()) throw ParameterError("subset must lie inside D");
    std::vector<Vec> symbols;
    std::int64_t raw_a = 0;
    std::int64_t raw_rest = 0;
    for (int h : D) {
        symbols.push_back(plan.helper_symbols(h, contents.at(h)));
        (in_a.count(h) ? raw_a : raw_rest) += static_cast<std::int64_t>(symbols.back().size());
    }
    IpRepairResult out;
    out.compressed = static_cast<int>(A.size()) >= spec_.d - spec_.k + 1;
    out.subset_transmission = out.compressed ? std::min<std::int64_t>(spec_.l, raw_a) : raw_a;
    out.total = out.subset_transmission + raw_rest;
    out.content = plan.combine(D, symbols);
    return out;
}

}  // namespace grc::stacking
