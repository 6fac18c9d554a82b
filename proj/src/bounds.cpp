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

#include "grc/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "grc/error.hpp"
#include "grc/rational.hpp"

namespace grc {
namespace {

std::int64_t sorted_prefix(std::span<const std::int64_t> B, int r, bool largest) {
    if (r < 0 || static_cast<std::size_t>(r) > B.size()) throw ParameterError("r out of range for download set");
    std::vector<std::int64_t> s(B.begin(), B.end());
    if (largest)
        std::sort(s.begin(), s.end(), std::greater<>());
    else
        std::sort(s.begin(), s.end());
    return std::accumulate(s.begin(), s.begin() + r, std::int64_t{0});
}

// sum_{i=0}^{count-1} min{l, Delta_{d-i}(B)}
std::int64_t min_sum(const CodeParams& p, int count) {
    std::int64_t total = 0;
    for (int i = 0; i < count; ++i) total += std::min(p.l, delta_r(p.B, p.d - i));
    return total;
}

}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

void CodeParams::validate() const {
    if (k < 1) throw ParameterError("k must be at least 1");
    if (d < k) throw ParameterError("d must be at least k");
    if (d > n - 1) throw ParameterError("d must be at most n-1");
    if (B.size() != static_cast<std::size_t>(d)) throw ParameterError("B must have exactly d entries");
    for (auto b : B)
        if (b < 0) throw ParameterError("downloads must be nonnegative");
    if (l < 1) throw ParameterError("l must be at least 1");
    if (M < 0) throw ParameterError("M must be nonnegative");
}

bool CodeParams::is_msr() const { return l == delta_r(B, d - k + 1) && M == k * l; }

CodeParams CodeParams::msr(int n, int k, int d, std::vector<std::int64_t> B) {
    CodeParams p;
    p.n = n;
    p.k = k;
    p.d = d;
    p.B = std::move(B);
    if (k < 1 || d < k || p.B.size() != static_cast<std::size_t>(d))
        throw ParameterError("invalid MSR parameters");
    p.l = delta_r(p.B, d - k + 1);
    p.M = static_cast<std::int64_t>(k) * p.l;
    p.validate();
    return p;
}

CodeParams CodeParams::msr_uniform(int n, int k, int d, std::int64_t beta) {
    if (d < 0) throw ParameterError("d must be nonnegative");
    return msr(n, k, d, std::vector<std::int64_t>(static_cast<std::size_t>(d), beta));
}

std::int64_t delta_r(std::span<const std::int64_t> B, int r) { return sorted_prefix(B, r, false); }
std::int64_t omega_r(std::span<const std::int64_t> B, int r) { return sorted_prefix(B, r, true); }

CutsetResult cutset_bound(const CodeParams& p) {
    p.validate();
    CutsetResult r;
    r.bound = min_sum(p, p.k);
    r.satisfied = p.M <= r.bound;
    return r;
}

StoragePoints msr_mbr_points(int n, int k, int d, std::span<const std::int64_t> B) {
    if (k < 1 || d < k || d > n - 1) throw ParameterError("need 1 <= k <= d <= n-1");
    if (B.size() != static_cast<std::size_t>(d)) throw ParameterError("B must have exactly d entries");
    return {delta_r(B, d - k + 1), delta_r(B, d)};
}

std::int64_t ip_lower_bound(const CodeParams& p, bool at_msr) {
    p.validate();
    const std::int64_t v = p.M - min_sum(p, p.k - 1);
    if (at_msr && v != p.l) throw ParameterError("parameters are not at the MSR point");
    return v;
}

std::int64_t ip_lower_bound_functional(const CodeParams& p) {
    CodeParams q = p;
    q.M = cutset_bound(p).bound;
    return ip_lower_bound(q);
}

std::int64_t adversarial_cut_bound(const CodeParams& p, int t) {
    if (t < 0) throw ParameterError("adversary count must be nonnegative");
    return ip_lower_bound(p) + 2 * omega_r(p.B, t);
}

}  // namespace grc
