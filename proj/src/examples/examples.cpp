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

#include "grc/examples/examples.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

#include "grc/error.hpp"
#include "grc/gf/extension.hpp"

namespace grc::examples {
namespace {

graph::StorageGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    graph::StorageGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<int> others(int n, int f) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (v != f) out.push_back(v);
    return out;
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> list{"fig3", "fig4", "fig5", "petersen"};
    return list;
}

const char* to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::pm: return "pm";
        case CodeKind::gpm: return "gpm";
        case CodeKind::stacked: return "stacked";
    }
    return "?";
}

Example get(const std::string& name) {
    Example ex;
    ex.name = name;
    if (name == "fig3") {
        ex.graph = from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 6}});
        ex.k = 4;
        ex.d = 6;
        ex.code = CodeKind::pm;
        ex.beta_list.assign(6, 1);
        ex.expected_af = Rational(9);
        ex.expected_ip = Rational(8);
    } else if (name == "fig4") {
        ex.graph = from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
        ex.k = 5;
        ex.d = 6;
        ex.code = CodeKind::gpm;
        ex.t = 3;
        ex.beta_list.assign(6, 3);
        ex.expected_af = Rational(30);
        ex.expected_ip = Rational(24);
    } else if (name == "fig5") {
        ex.graph = from_edges(10, {{0, 1}, {0, 8}, {0, 9}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
        ex.k = 5;
        ex.d = 9;
        ex.code = CodeKind::stacked;
        ex.t = 1;
        ex.beta_list.assign(9, 5);
        ex.expected_af = Rational(95);
        ex.expected_ip = Rational(85);
    } else if (name == "petersen") {
        ex.graph = graph::StorageGraph::petersen();
        ex.k = 3;
        ex.d = 9;
        ex.code = CodeKind::stacked;
        ex.beta_list.assign(9, 1);
    } else {
        throw ParameterError("unknown example '" + name + "'");
    }
    ex.helpers = others(ex.graph.n(), ex.f);
    return ex;
}

adversarial::ConcatCode make_concat(const stacking::StackSpec& spec, int t) {
    if (t < 0) throw ParameterError("adversary budget must be nonnegative");
    const stacking::StackedCode stack(spec);
    std::vector<int> sys;
    for (int i = 0; i < spec.k; ++i) sys.push_back(i);
    auto inner = stack.linear().systematic(sys);
    const std::int64_t beta_max = *std::max_element(spec.B.begin(), spec.B.end());
    const std::int64_t K = stack.l() - 2 * t * beta_max;
    if (K < 1) throw ParameterError("node size too small for the adversary budget");
    auto ext = gf::ExtensionField::create(stack.field(), static_cast<unsigned>(stack.l()));
    adversarial::GabidulinCode outer(std::move(ext), stack.l(), static_cast<int>(K));
    return adversarial::ConcatCode(std::move(outer), std::move(inner));
}

}  // namespace grc::examples
