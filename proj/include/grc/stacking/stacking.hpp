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
#include <span>
#include <vector>

#include <json.hpp>

#include "grc/codes/linear_code.hpp"
#include "grc/codes/unit_msr.hpp"

namespace grc::stacking {

using codes::FieldPtr;
using codes::Matrix;
using codes::NodeContents;
using codes::Vec;

/// One stacked component C_j: `gap` parallel copies of a unit MSR code with
/// repair degree d-j+1.
struct Component {
    int j = 0;
    int degree = 0;
    std::int64_t gap = 0;  ///< beta_j - beta_{j-1}
    std::int64_t l = 0;    ///< (d-j-k+2) * gap
    std::int64_t M = 0;    ///< k * l
    codes::UnitKind kind = codes::UnitKind::mds;
    std::int64_t node_offset = 0;  ///< first node symbol of this component
    std::int64_t file_offset = 0;  ///< first file symbol of this component
};

struct StackSpec {
    int n = 0;
    int k = 0;
    int d = 0;
    std::vector<std::int64_t> B;  ///< sorted nondecreasing
    std::vector<int> mu;          ///< mu_j for j = 1..d-k+1
    std::vector<int> S;           ///< {j : mu_j = 1}
    std::vector<Component> components;
    std::int64_t l = 0;
    std::int64_t M = 0;

    nlohmann::json to_json() const;
};

/// Sorts B, forms the selector and the components, and checks
/// l = Delta_{d-k+1}(B). Throws ParameterError when a component degree has
/// no unit code (strictly between k and 2k-2).
StackSpec build_stack(int n, int k, int d, std::vector<std::int64_t> B);

/// Slot assignment giving D[0] slot d, D[1] slot d-1 and so on: with D
/// listed nearest first, the nearest helper gets the largest download.
std::vector<int> default_tau(int d);

struct RepairResult {
    Vec content;
    std::vector<std::int64_t> downloads;  ///< per helper, in D order
};

struct IpRepairResult {
    Vec content;
    std::int64_t subset_transmission = 0;  ///< symbols sent jointly by A
    std::int64_t total = 0;                ///< subset transmission plus the others' raw symbols
    bool compressed = false;               ///< false when |A| < d-k+1
};

class StackedCode {
public:
    explicit StackedCode(StackSpec spec, FieldPtr field = nullptr);

    const StackSpec& spec() const { return spec_; }
    const FieldPtr& field() const { return field_; }
    int l() const { return static_cast<int>(spec_.l); }
    int M() const { return static_cast<int>(spec_.M); }

    NodeContents encode(const Vec& file) const;
    Vec reconstruct(std::span<const int> nodes, const NodeContents& contents) const;

    /// Projections and combiners for repairing f from D with helper D[i]
    /// in slot tau[i] (1-based). Empty tau means default_tau.
    codes::IpMatrixSet repair_plan(int f, std::span<const int> D, std::vector<int> tau = {}) const;
    /// G_{h,f} for the helper in the given slot; it depends only on f and
    /// the slot.
    Matrix slot_projection(int f, int slot) const;
    /// The same code as a generic linear code whose projections follow
    /// slot_projection.
    codes::LinearCode linear() const;
    /// Slices a node's content into the given component's codeword copies.
    std::vector<Vec> component_slices(std::size_t component, const Vec& content) const;

    RepairResult repair(const NodeContents& contents, int f, std::span<const int> D, std::vector<int> tau = {}) const;
    /// Helpers in A combine their symbols into an l-vector before sending.
    IpRepairResult ip_repair(const NodeContents& contents, int f, std::span<const int> D, std::span<const int> A,
                             std::vector<int> tau = {}) const;

private:
    std::vector<int> checked_tau(std::span<const int> D, std::vector<int> tau) const;

    StackSpec spec_;
    FieldPtr field_;
    std::vector<codes::LinearCode> units_;  ///< one per component
};

}  // namespace grc::stacking
