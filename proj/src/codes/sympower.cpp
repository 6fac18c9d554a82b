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

#include "grc/codes/sympower.hpp"

#include <algorithm>

#include "grc/error.hpp"

namespace grc::codes {

SymPowerBasis::SymPowerBasis(int dim, int power) : dim_(dim), power_(power) {
    if (dim < 1 || power < 0) throw ParameterError("symmetric power needs dim >= 1 and power >= 0");
    std::vector<int> cur(static_cast<std::size_t>(power), 0);
    while (true) {
        index_.emplace(cur, monomials_.size());
        monomials_.push_back(cur);
        // Next nondecreasing tuple in lexicographic order.
        int pos = power - 1;
        while (pos >= 0 && cur[pos] == dim - 1) --pos;
        if (pos < 0) break;
        const int v = cur[pos] + 1;
        for (int i = pos; i < power; ++i) cur[i] = v;
    }
}

std::size_t SymPowerBasis::index_of(std::vector<int> tuple) const {
    std::sort(tuple.begin(), tuple.end());
    auto it = index_.find(tuple);
    if (it == index_.end()) throw ParameterError("tuple is not a monomial of this symmetric power");
    return it->second;
}

std::vector<int> sym_product(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

}  // namespace grc::codes
