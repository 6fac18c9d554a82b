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

#include "grc/codes/unit_msr.hpp"

#include <numeric>

#include "grc/codes/pm.hpp"
#include "grc/error.hpp"

namespace grc::codes {
namespace {

// Nodes appended to a product-matrix code and fixed to zero so that its
// repair degree drops to `degree`.
int extra_nodes(int k, int degree) { return degree - 2 * (k - 1); }

bool field_supports(std::uint32_t group, int n, int k, int degree) {
    switch (unit_kind(k, degree)) {
        case UnitKind::mds:
            return group >= static_cast<std::uint32_t>(n);
        case UnitKind::pm:
        case UnitKind::shortened_pm: {
            const int i = extra_nodes(k, degree);
            const int kk = k + i;
            return group >= static_cast<std::uint32_t>(n + i) &&
                   std::gcd(group, static_cast<std::uint32_t>(kk - 1)) == 1;
        }
    }
    return false;
}

}  // namespace

const char* to_string(UnitKind kind) {
    switch (kind) {
        case UnitKind::mds:
            return "mds";
        case UnitKind::pm:
            return "pm";
        case UnitKind::shortened_pm:
            return "shortened-pm";
    }
    return "?";
}

bool unit_realizable(int k, int degree) {
    if (k < 1 || degree < k) return false;
    return degree == k || degree >= 2 * (k - 1);
}

UnitKind unit_kind(int k, int degree) {
    if (!unit_realizable(k, degree))
        throw ParameterError("no unit MSR code with k=" + std::to_string(k) + " and repair degree " +
                             std::to_string(degree));
    if (k >= 2 && degree == 2 * (k - 1)) return UnitKind::pm;
    if (degree == k) return UnitKind::mds;
    return UnitKind::shortened_pm;
}

FieldPtr unit_field(int n, int k, std::span<const int> degrees) {
    for (unsigned w = 2; w <= gf::Field::kMaxBinaryDegree; ++w) {
        const std::uint32_t group = (1U << w) - 1;
        bool ok = true;
        for (int deg : degrees) ok = ok && field_supports(group, n, k, deg);
        if (ok) return gf::Field::binary(w);
    }
    throw ParameterError("no supported binary field realizes the requested unit codes");
}

LinearCode make_unit_msr(const FieldPtr& field, int n, int k, int degree) {
    if (degree > n - 1) throw ParameterError("repair degree exceeds n-1");
    const UnitKind kind = unit_kind(k, degree);
    if (kind == UnitKind::mds) {
        const Symbol g = field->primitive_element();
        if (field->order() - 1 < static_cast<std::uint32_t>(n)) throw ParameterError("field too small for MDS code");
        Matrix gen(field, static_cast<std::size_t>(n), static_cast<std::size_t>(k));
        Symbol a = 1;
        for (int i = 0; i < n; ++i) {
            Symbol p = 1;
            for (int j = 0; j < k; ++j) {
                gen.at(i, j) = p;
                p = field->mul(p, a);
            }
            a = field->mul(a, g);
        }
        auto proj = [field](int, int, int) { return Matrix::identity(field, 1); };
        return LinearCode("mds", field, n, k, degree, 1, gen, proj);
    }
    const int extra = extra_nodes(k, degree);
    const PmCode pm = PmCode::with_default_points(n + extra, k + extra, field);
    if (extra == 0) return pm.linear();
    const int l = pm.l();
    const Matrix& full = pm.linear().generator();
    const Matrix virt = full.row_block(static_cast<std::size_t>(n) * l, static_cast<std::size_t>(extra) * l);
    const Matrix kernel = gf::mat_nullspace(virt);
    if (kernel.cols() != static_cast<std::size_t>(k) * l) throw ParameterError("shortening produced unexpected dimension");
    const Matrix gen = full.row_block(0, static_cast<std::size_t>(n) * l) * kernel;
    auto proj = [pm_linear = pm.linear()](int h, int f, int slot) { return pm_linear.repair_projection(h, f, slot); };
    return LinearCode("shortened-pm", field, n, k, degree, l, gen, proj);
}

}  // namespace grc::codes
