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

#include <map>
#include <vector>

namespace grc::codes {

/// Monomial basis of the p-th symmetric power of an r-dimensional space:
/// nondecreasing index tuples (i_1 <= ... <= i_p) in lexicographic order.
class SymPowerBasis {
public:
    SymPowerBasis(int dim, int power);

    int dim() const { return dim_; }
    int power() const { return power_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<int>& monomial(std::size_t i) const { return monomials_[i]; }
    /// Index of a monomial given as any index tuple (sorted internally).
    std::size_t index_of(std::vector<int> tuple) const;

private:
    int dim_;
    int power_;
    std::vector<std::vector<int>> monomials_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// Sorted concatenation of two monomials (the symmetric product).
std::vector<int> sym_product(const std::vector<int>& a, const std::vector<int>& b);

/// Binomial coefficient C(n, r); zero when r < 0 or r > n.
long long binomial(int n, int r);

}  // namespace grc::codes
