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

namespace grc {

/// Parameters (n, k, d, l, B, M) of a generalized regenerating code. B holds
/// one download amount per helper slot and need not be sorted.
struct CodeParams {
    int n = 0;
    int k = 0;
    int d = 0;
    std::int64_t l = 0;
    std::vector<std::int64_t> B;
    std::int64_t M = 0;

    /// Throws ParameterError unless 1 <= k <= d <= n-1, |B| = d, B >= 0, l >= 1.
    void validate() const;
    /// True when l = Delta_{d-k+1}(B) and M = k l.
    bool is_msr() const;

    /// MSR parameters for the given downloads.
    static CodeParams msr(int n, int k, int d, std::vector<std::int64_t> B);
    /// MSR parameters with uniform download beta.
    static CodeParams msr_uniform(int n, int k, int d, std::int64_t beta);
};

/// Sum of the r smallest entries of B.
std::int64_t delta_r(std::span<const std::int64_t> B, int r);
/// Sum of the r largest entries of B.
std::int64_t omega_r(std::span<const std::int64_t> B, int r);

struct CutsetResult {
    std::int64_t bound = 0;  ///< sum_{i=0}^{k-1} min{l, Delta_{d-i}(B)}
    bool satisfied = false;  ///< p.M <= bound
};

CutsetResult cutset_bound(const CodeParams& p);

struct StoragePoints {
    std::int64_t l_msr = 0;
    std::int64_t l_mbr = 0;
};

StoragePoints msr_mbr_points(int n, int k, int d, std::span<const std::int64_t> B);

/// M - sum_{i=0}^{k-2} min{l, Delta_{d-i}(B)}: the least amount any helper
/// set of size >= d-k+1 must jointly send. With at_msr the result is checked
/// to equal l (throws ParameterError otherwise).
std::int64_t ip_lower_bound(const CodeParams& p, bool at_msr = false);

/// The same bound with M replaced by the cutset value (functional repair).
std::int64_t ip_lower_bound_functional(const CodeParams& p);

/// ip_lower_bound(p) + 2 Omega_t(B): least cut capacity around any set of
/// at least d-k+1+2t helpers containing the t adversarial nodes.
std::int64_t adversarial_cut_bound(const CodeParams& p, int t);

}  // namespace grc
