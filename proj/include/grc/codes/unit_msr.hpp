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

#include "grc/codes/linear_code.hpp"

namespace grc::codes {

/// How a unit-download MSR code [n, k, degree, l = degree-k+1, beta = 1] is
/// realized: an MDS code when degree = k, a product-matrix code when
/// degree = 2(k-1), and a shortened product-matrix code above that.
enum class UnitKind { mds, pm, shortened_pm };

const char* to_string(UnitKind kind);
bool unit_realizable(int k, int degree);
/// Throws ParameterError for degrees strictly between k and 2(k-1).
UnitKind unit_kind(int k, int degree);

/// Smallest GF(2^w) over which every listed unit degree is realizable for
/// n nodes.
FieldPtr unit_field(int n, int k, std::span<const int> degrees);

LinearCode make_unit_msr(const FieldPtr& field, int n, int k, int degree);

}  // namespace grc::codes
