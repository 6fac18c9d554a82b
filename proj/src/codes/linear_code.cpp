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

#include "grc/codes/linear_code.hpp"

#include <algorithm>
#include <set>

#include "grc/error.hpp"

namespace grc::codes {

LinearCode::LinearCode(std::string name, FieldPtr field, int n, int k, int d, int l, Matrix generator,
                       ProjectionFn projection)
    : name_(std::move(name)),
      field_(std::move(field)),
      n_(n),
      k_(k),
      d_(d),
      l_(l),
      generator_(std::move(generator)),
      projection_(std::move(projection)) {
    if (n_ < 2 || k_ < 1 || d_ < k_ || d_ > n_ - 1 || l_ < 1)
        throw ParameterError("invalid linear code parameters");
    if (generator_.rows() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(l_))
        throw ParameterError("generator row count must equal n*l");
}

void LinearCode::check_node(int i) const {
    if (i < 0 || i >= n_) throw ParameterError("node index out of range");
}

Matrix LinearCode::node_generator(int i) const {
    check_node(i);
    return generator_.row_block(static_cast<std::size_t>(i) * l_, static_cast<std::size_t>(l_));
}

NodeContents LinearCode::encode(const Vec& file) const {
    if (file.size() != static_cast<std::size_t>(M())) throw ParameterError("file length must equal M");
    const Vec all = generator_.apply(file);
    NodeContents out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        out[i].assign(all.begin() + static_cast<std::ptrdiff_t>(i) * l_, all.begin() + static_cast<std::ptrdiff_t>(i + 1) * l_);
    return out;
}

std::vector<Matrix> LinearCode::encode_block(const Matrix& files) const {
    if (files.rows() != static_cast<std::size_t>(M())) throw ParameterError("file block must have M rows");
    const Matrix all = generator_ * files;
    std::vector<Matrix> out;
    for (int i = 0; i < n_; ++i) out.push_back(all.row_block(static_cast<std::size_t>(i) * l_, static_cast<std::size_t>(l_)));
    return out;
}

Vec LinearCode::reconstruct(std::span<const int> nodes, const NodeContents& contents) const {
    if (nodes.size() < static_cast<std::size_t>(k_)) throw ParameterError("need at least k nodes");
    if (contents.size() != nodes.size()) throw ParameterError("one content vector per node required");
    std::set<int> seen;
    std::vector<Matrix> rows;
    Vec rhs;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        check_node(nodes[i]);
        if (!seen.insert(nodes[i]).second) throw ParameterError("duplicate node index");
        if (contents[i].size() != static_cast<std::size_t>(l_)) throw ParameterError("node content must have l symbols");
        rows.push_back(node_generator(nodes[i]));
        rhs.insert(rhs.end(), contents[i].begin(), contents[i].end());
    }
    const Matrix a = Matrix::vstack(rows);
    if (gf::mat_rank(a) != static_cast<std::size_t>(M())) throw SingularMatrix("nodes do not determine the file");
    return gf::mat_solve(a, Matrix::column(field_, rhs)).col_vec(0);
}

Matrix LinearCode::repair_projection(int helper, int failed, int slot) const {
    check_node(helper);
    check_node(failed);
    if (helper == failed) throw ParameterError("helper must differ from the failed node");
    Matrix p = projection_(helper, failed, slot);
    if (p.cols() != static_cast<std::size_t>(l_)) throw ParameterError("projection must have l columns");
    return p;
}

LinearCode LinearCode::systematic(std::vector<int> nodes) const {
    if (nodes.size() * static_cast<std::size_t>(l_) != static_cast<std::size_t>(M()))
        throw ParameterError("systematic node set must carry exactly M symbols");
    std::vector<Matrix> rows;
    for (int i : nodes) rows.push_back(node_generator(i));
    const Matrix gs = Matrix::vstack(rows);
    LinearCode out(name_ + "-systematic", field_, n_, k_, d_, l_, generator_ * gf::mat_invert(gs), projection_);
    out.systematic_ = std::move(nodes);
    return out;
}

Matrix generator_from_encoder(const FieldPtr& field, int n, int l, int M,
                              const std::function<NodeContents(const Vec&)>& encode) {
    Matrix g(field, static_cast<std::size_t>(n) * l, static_cast<std::size_t>(M));
    for (int c = 0; c < M; ++c) {
        Vec unit(static_cast<std::size_t>(M), 0);
        unit[c] = 1;
        const NodeContents nodes = encode(unit);
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < l; ++r) g.at(static_cast<std::size_t>(i) * l + r, c) = nodes[i][r];
    }
    return g;
}

std::vector<int> IpMatrixSet::downloads() const {
    std::vector<int> out;
    for (const auto& p : projections) out.push_back(static_cast<int>(p.rows()));
    return out;
}

std::size_t IpMatrixSet::position(int helper) const {
    auto it = std::find(helpers.begin(), helpers.end(), helper);
    if (it == helpers.end()) throw ParameterError("node is not in the helper set");
    return static_cast<std::size_t>(it - helpers.begin());
}

Vec IpMatrixSet::helper_symbols(int helper, const Vec& content) const {
    return projections[position(helper)].apply(content);
}

Vec IpMatrixSet::combine(std::span<const int> subset, const std::vector<Vec>& symbols) const {
    if (subset.size() != symbols.size()) throw ParameterError("one symbol vector per helper required");
    if (combiners.empty()) throw ParameterError("empty IP matrix set");
    const auto& field = combiners.front().field();
    Vec acc(combiners.front().rows(), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const Vec part = combiners[position(subset[i])].apply(symbols[i]);
        for (std::size_t r = 0; r < acc.size(); ++r) acc[r] = field->add(acc[r], part[r]);
    }
    return acc;
}

std::vector<Matrix> solve_ip_matrices(const Matrix& target, const std::vector<Matrix>& helper_maps) {
    const Matrix h = Matrix::vstack(helper_maps);
    // U H = T  <=>  H^T U^T = T^T
    const Matrix ut = gf::mat_solve(h.transpose(), target.transpose());
    const Matrix u = ut.transpose();
    std::vector<Matrix> out;
    std::size_t off = 0;
    for (const auto& m : helper_maps) {
        out.push_back(u.col_block(off, m.rows()));
        off += m.rows();
    }
    return out;
}

IpMatrixSet derive_ip_matrices(const LinearCode& code, int failed, std::vector<int> helpers, std::vector<int> slots) {
    if (slots.empty()) {
        for (std::size_t i = 0; i < helpers.size(); ++i) slots.push_back(static_cast<int>(i) + 1);
    }
    if (slots.size() != helpers.size()) throw ParameterError("one slot per helper required");
    std::set<int> uniq(helpers.begin(), helpers.end());
    if (uniq.size() != helpers.size()) throw ParameterError("duplicate helper");
    if (uniq.count(failed) != 0) throw ParameterError("failed node cannot be a helper");
    std::vector<int> sorted_slots = slots;
    std::sort(sorted_slots.begin(), sorted_slots.end());
    for (std::size_t i = 0; i < sorted_slots.size(); ++i)
        if (sorted_slots[i] != static_cast<int>(i) + 1) throw ParameterError("slots must be a permutation of 1..|D|");

    IpMatrixSet set;
    set.failed = failed;
    set.helpers = std::move(helpers);
    set.slots = std::move(slots);
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < set.helpers.size(); ++i) {
        Matrix p = code.repair_projection(set.helpers[i], failed, set.slots[i]);
        maps.push_back(p * code.node_generator(set.helpers[i]));
        set.projections.push_back(std::move(p));
    }
    try {
        set.combiners = solve_ip_matrices(code.node_generator(failed), maps);
    } catch (const InconsistentSystem&) {
        throw InconsistentSystem("helper set cannot repair the failed node");
    }
    return set;
}

}  // namespace grc::codes
