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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grc/adversarial/adversarial.hpp"
#include "grc/graph/graph.hpp"
#include "grc/rational.hpp"
#include "grc/stacking/stacking.hpp"

namespace grc::examples {

enum class CodeKind { pm, gpm, stacked };

// A worked instance: graph, failed node, helper list and code parameters.
struct Example {
    std::string name;
    graph::StorageGraph graph{1};
    int f = 0;
    std::vector<int> helpers;
    int k = 0;
    int d = 0;
    CodeKind code = CodeKind::pm;
    int t = 0;  ///< GPM tensor order, or adversary budget for fig5
    std::vector<std::int64_t> beta_list;
    std::optional<Rational> expected_af;
    std::optional<Rational> expected_ip;
};

const std::vector<std::string>& names();
/// Throws ParameterError for unknown names.
Example get(const std::string& name);

const char* to_string(CodeKind kind);

/// Gabidulin-over-stacked code tolerating t corrupted helpers: the inner
/// code is the stack for `spec` made systematic on nodes 0..k-1, the outer
/// code is [l, l - 2 t beta_max] over F_{q^l}.
adversarial::ConcatCode make_concat(const stacking::StackSpec& spec, int t);

}  // namespace grc::examples
