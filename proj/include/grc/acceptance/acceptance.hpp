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
#include <string>
#include <vector>

#include <json.hpp>

namespace grc::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;  ///< 0 when the criterion has no time limit
    std::string detail;

    nlohmann::json to_json() const;
};

int criterion_count();
const std::string& criterion_name(int id);

/// Runs one criterion (1-based id). Exceptions are reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed);
/// Runs the listed criteria, or all of them when `ids` is empty.
std::vector<CriterionResult> run_all(std::uint64_t seed, const std::vector<int>& ids = {});

}  // namespace grc::acceptance
