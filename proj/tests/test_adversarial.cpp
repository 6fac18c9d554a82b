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

#include <doctest.h>

#include <random>

#include "grc/adversarial/adversarial.hpp"
#include "grc/error.hpp"
#include "grc/examples/examples.hpp"
#include "grc/gf/field.hpp"
#include "test_util.hpp"

using namespace grc;
using namespace grc::adversarial;

namespace {

ExtVec random_message(const gf::ExtensionField& f, int K, std::mt19937_64& rng) {
    ExtVec out;
    for (int i = 0; i < K; ++i) out.push_back(test::random_ext(f, rng));
    return out;
}

// Error vector x^T M for a random rank-r matrix, built from r random
// independent rows.
ExtVec random_rank_error(const gf::ExtensionField& f, int N, std::size_t r, std::mt19937_64& rng) {
    while (true) {
        ExtVec a;
        for (std::size_t i = 0; i < r; ++i) a.push_back(test::random_ext(f, rng));
        if (gf::rank_over_base(f, a) != r) continue;
        ExtVec e;
        for (int j = 0; j < N; ++j) {
            ExtSymbol s = f.zero();
            for (const auto& ai : a) s = f.add(s, f.scale(test::random_symbol(*f.base(), rng), ai));
            e.push_back(s);
        }
        if (rank_weight(f, e) == r) return e;
    }
}

ExtVec add(const gf::ExtensionField& f, const ExtVec& a, const ExtVec& b) {
    ExtVec out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f.add(a[i], b[i]));
    return out;
}

}  // namespace

TEST_CASE("Gabidulin encoding is linear and has rank distance N-K+1") {
    auto ext = gf::ExtensionField::create(gf::Field::binary(3), 3);
    const GabidulinCode code(ext, 3, 1);
    CHECK(code.min_distance() == 3);
    CHECK(code.radius() == 1);
    std::size_t min_rank = 99;
    for (unsigned x = 1; x < 8; ++x) {
        ExtSymbol s(3);
        for (int c = 0; c < 3; ++c) s[c] = (x >> c) & 1;
        min_rank = std::min(min_rank, rank_weight(*ext, code.encode({s})));
    }
    CHECK(min_rank == 3);

    std::mt19937_64 rng(5);
    auto big = gf::ExtensionField::create(gf::Field::binary(2), 8);
    const GabidulinCode g8(big, 8, 3);
    const auto a = random_message(*big, 3, rng);
    const auto b = random_message(*big, 3, rng);
    CHECK(g8.encode(add(*big, a, b)) == add(*big, g8.encode(a), g8.encode(b)));
    CHECK(g8.encode(ExtVec(3, big->zero())) == ExtVec(8, big->zero()));
}

TEST_CASE("Gabidulin validation") {
    auto ext = gf::ExtensionField::create(gf::Field::binary(3), 3);
    CHECK_THROWS_AS(GabidulinCode(ext, 4, 1), ParameterError);
    CHECK_THROWS_AS(GabidulinCode(ext, 3, 0), ParameterError);
    CHECK_THROWS_AS(GabidulinCode(ext, 2, 1, {ext->one(), ext->one()}), ParameterError);
    const GabidulinCode code(ext, 3, 1);
    CHECK_THROWS_AS(code.encode({}), ParameterError);
}

TEST_CASE("tiny Gabidulin code matches brute force on every rank-1 error") {
    auto ext = gf::ExtensionField::create(gf::Field::binary(3), 3);
    const GabidulinCode code(ext, 3, 1);
    int checked = 0;
    for (unsigned mi = 0; mi < 8; ++mi) {
        ExtSymbol m(3);
        for (int c = 0; c < 3; ++c) m[c] = (mi >> c) & 1;
        const auto cw = code.encode({m});
        // Rank-1 errors are u^T v with nonzero u, v in F_2^3.
        for (unsigned u = 1; u < 8; ++u)
            for (unsigned v = 1; v < 8; ++v) {
                ExtVec e;
                for (int j = 0; j < 3; ++j) {
                    ExtSymbol s(3);
                    for (int c = 0; c < 3; ++c) s[c] = ((v >> j) & 1) & ((u >> c) & 1);
                    e.push_back(s);
                }
                const auto r = add(*ext, cw, e);
                std::size_t dist = 0;
                CHECK(brute_force_nearest(code, r, &dist) == cw);
                CHECK(dist == 1);
                CHECK(code.decode(r) == ExtVec{m});
                ++checked;
            }
    }
    CHECK(checked == 8 * 49);
}

TEST_CASE("Gabidulin decoding up to the radius") {
    std::mt19937_64 rng(17);
    auto ext = gf::ExtensionField::create(gf::Field::binary(4), 12);
    const GabidulinCode code(ext, 12, 6);
    for (int trial = 0; trial < 30; ++trial) {
        const auto msg = random_message(*ext, 6, rng);
        const auto cw = code.encode(msg);
        CHECK(code.decode(cw) == msg);
        const auto r = static_cast<std::size_t>(trial % 4);
        CHECK(code.decode(add(*ext, cw, random_rank_error(*ext, 12, r, rng))) == msg);
    }
    int failures = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto msg = random_message(*ext, 6, rng);
        const auto r = add(*ext, code.encode(msg), random_rank_error(*ext, 12, 6, rng));
        try {
            if (code.decode(r) != msg) ++failures;
        } catch (const DecodingFailure&) {
            ++failures;
        }
    }
    CHECK(failures == 10);
}

TEST_CASE("concatenated code on the fig5 instance") {
    const auto ex = examples::get("fig5");
    const auto spec = stacking::build_stack(10, 5, 9, ex.beta_list);
    const auto code = examples::make_concat(spec, 1);
    CHECK(code.outer().N() == 25);
    CHECK(code.outer().K() == 15);
    CHECK(code.m() == 25);
    CHECK(code.rate() == doctest::Approx(0.3));
    CHECK(code.outer().K() * code.inner().k() < code.outer().N() * code.inner().k());
    CHECK(code.retrieval_symbols(true) == 5 * 15 * 25);
    CHECK(code.retrieval_symbols(false) == 5 * 25 * 25);

    std::mt19937_64 rng(3);
    const auto& base = *code.inner().field();
    const auto file = test::random_vec(base, code.file_size(), rng);
    const auto cw = code.encode(file);
    CHECK(code.retrieve(cw) == file);
    CHECK(code.retrieve(code.encode(codes::Vec(file.size(), 0))) == codes::Vec(file.size(), 0));

    SUBCASE("one corrupted helper") {
        for (int trial = 0; trial < 5; ++trial) {
            const auto adv = AdversaryModel::random(ex.helpers, 1, code.m(), code.inner().l(), base, rng);
            const auto res = adversarial_repair(code, cw, ex.graph, 0, ex.helpers, adv);
            CHECK(res.success);
            CHECK(res.error_rank <= 5);
            CHECK(res.error_bound == 5);
            CHECK(res.report.total == Rational(85));
            for (std::size_t j = 0; j < cw.rows.size(); ++j) CHECK(res.restored[j] == cw.rows[j][0]);
        }
    }
    SUBCASE("no adversary") {
        const auto res = adversarial_repair(code, cw, ex.graph, 0, ex.helpers, AdversaryModel{});
        CHECK(res.success);
        CHECK(res.error_rank == 0);
    }
    SUBCASE("non-systematic failure is rejected") {
        CHECK_THROWS_AS(adversarial_repair(code, cw, ex.graph, 7, std::vector<int>{0, 1, 2, 3, 4, 5, 6, 8, 9},
                                           AdversaryModel{}),
                        ParameterError);
    }
}

TEST_CASE("AF baseline with extra helpers") {
    const auto ex = examples::get("fig5");
    CHECK(af_with_extra_helpers_baseline(ex.graph, 0, 5, 7, 1, 5).total == Rational(95));
    const auto star = graph::StorageGraph::star(12);
    CHECK(af_with_extra_helpers_baseline(star, 0, 4, 6, 2, 3).total == Rational((6 + 4) * 3));
    CHECK(af_with_extra_helpers_baseline(star, 0, 4, 6, 0, 3).total == Rational(6 * 3));
    CHECK_THROWS_AS(af_with_extra_helpers_baseline(star, 0, 4, 6, 3, 3), ParameterError);
}
