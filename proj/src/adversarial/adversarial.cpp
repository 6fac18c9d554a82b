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

#include "grc/adversarial/adversarial.hpp"

#include <algorithm>
#include <set>

#include "grc/error.hpp"

namespace grc::adversarial {
namespace {

ExtVec sub(const gf::ExtensionField& f, const ExtVec& a, const ExtVec& b) {
    ExtVec out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f.sub(a[i], b[i]));
    return out;
}

void check_vec(const gf::ExtensionField& f, const ExtVec& v, std::size_t len, const char* what) {
    if (v.size() != len) throw ParameterError(std::string(what) + " has the wrong length");
    for (const auto& x : v)
        if (!f.contains(x)) throw FieldMismatch(std::string(what) + " holds an element of another field");
}

}  // namespace

std::size_t rank_weight(const gf::ExtensionField& field, const ExtVec& v) { return gf::rank_over_base(field, v); }

GabidulinCode::GabidulinCode(ExtFieldPtr field, int N, int K, ExtVec points)
    : field_(std::move(field)), n_(N), k_(K), points_(std::move(points)) {
    if (!field_) throw ParameterError("Gabidulin code needs a field");
    if (K < 1 || K > N || N > static_cast<int>(field_->degree()))
        throw ParameterError("Gabidulin code needs 1 <= K <= N <= m");
    if (points_.empty()) {
        ExtSymbol g = field_->one();
        for (int i = 0; i < N; ++i) {
            points_.push_back(g);
            g = field_->mul(g, field_->gamma());
        }
    }
    check_vec(*field_, points_, static_cast<std::size_t>(N), "evaluation point list");
    if (rank_weight(*field_, points_) != static_cast<std::size_t>(N))
        throw ParameterError("evaluation points must be linearly independent over the base field");
}

ExtVec GabidulinCode::encode(const ExtVec& message) const {
    check_vec(*field_, message, static_cast<std::size_t>(k_), "message");
    ExtVec out;
    for (const auto& g : points_) out.push_back(gf::linearized_eval(*field_, message, g));
    return out;
}

ExtVec GabidulinCode::decode(const ExtVec& received) const {
    check_vec(*field_, received, static_cast<std::size_t>(n_), "received word");
    const auto& F = *field_;
    const int tau = radius();
    const std::size_t nv = static_cast<std::size_t>(tau) + 1;
    const std::size_t nn = static_cast<std::size_t>(k_ + tau);
    const gf::ExtOps ops{field_.get()};
    // V(r_j) - N(g_j) = 0 with q-degrees at most tau and K+tau-1.
    gf::ExtMatrix a;
    a.rows = static_cast<std::size_t>(n_);
    a.cols = nv + nn;
    a.data.assign(a.rows * a.cols, F.zero());
    for (int j = 0; j < n_; ++j) {
        ExtSymbol rp = received[j];
        for (std::size_t i = 0; i < nv; ++i) {
            if (i > 0) rp = F.frobenius(rp);
            a.at(j, i) = rp;
        }
        ExtSymbol gp = points_[j];
        for (std::size_t i = 0; i < nn; ++i) {
            if (i > 0) gp = F.frobenius(gp);
            a.at(j, nv + i) = F.neg(gp);
        }
    }
    const auto kernel = gf::detail::nullspace(ops, a);
    if (kernel.cols == 0) throw DecodingFailure("interpolation system has no nonzero solution");
    ExtVec v(nv);
    ExtVec nc(nn);
    for (std::size_t i = 0; i < nv; ++i) v[i] = kernel.at(i, 0);
    for (std::size_t i = 0; i < nn; ++i) nc[i] = kernel.at(nv + i, 0);
    int top = tau;
    while (top >= 0 && F.is_zero(v[top])) --top;
    if (top < 0) throw DecodingFailure("error-locator polynomial vanished");

    // Left division N = V o f, solved from the highest coefficient down.
    const ExtSymbol lead_inv = F.inv(v[top]);
    ExtVec f(static_cast<std::size_t>(k_), F.zero());
    for (int j = k_ - 1; j >= 0; --j) {
        const int s = j + top;
        ExtSymbol rest = F.zero();
        for (int i = 0; i < top; ++i) {
            const int idx = s - i;
            if (idx < k_) rest = F.add(rest, F.mul(v[i], F.frobenius(f[idx], static_cast<unsigned>(i))));
        }
        const ExtSymbol ns = static_cast<std::size_t>(s) < nn ? nc[s] : F.zero();
        f[j] = F.inverse_frobenius(F.mul(F.sub(ns, rest), lead_inv), static_cast<unsigned>(top));
    }
    for (std::size_t s = 0; s < nn; ++s) {
        ExtSymbol acc = F.zero();
        for (int i = 0; i <= top; ++i) {
            const int idx = static_cast<int>(s) - i;
            if (idx >= 0 && idx < k_) acc = F.add(acc, F.mul(v[i], F.frobenius(f[idx], static_cast<unsigned>(i))));
        }
        if (acc != nc[s]) throw DecodingFailure("division left a remainder; too many rank errors");
    }
    if (rank_weight(F, sub(F, received, encode(f))) > static_cast<std::size_t>(tau))
        throw DecodingFailure("no codeword within the decoding radius");
    return f;
}

ExtVec brute_force_nearest(const GabidulinCode& code, const ExtVec& received, std::size_t* distance) {
    const auto& F = *code.field();
    const std::uint64_t q = F.base()->order();
    const std::size_t digits = static_cast<std::size_t>(code.K()) * F.degree();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        total *= q;
        if (total > (1U << 16)) throw ParameterError("brute-force search is limited to 2^16 codewords");
    }
    ExtVec best;
    std::size_t best_d = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ExtVec msg;
        std::uint64_t x = idx;
        for (int e = 0; e < code.K(); ++e) {
            ExtSymbol s(F.degree());
            for (auto& c : s) {
                c = static_cast<gf::Symbol>(x % q);
                x /= q;
            }
            msg.push_back(std::move(s));
        }
        const ExtVec cw = code.encode(msg);
        const std::size_t d = rank_weight(F, sub(F, received, cw));
        if (best.empty() || d < best_d) {
            best = cw;
            best_d = d;
        }
    }
    if (distance) *distance = best_d;
    return best;
}

ConcatCode::ConcatCode(GabidulinCode outer, codes::LinearCode inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!(*inner_.field() == *outer_.field()->base()))
        throw FieldMismatch("inner code must work over the base field of the outer code");
    if (inner_.l() != outer_.N()) throw ParameterError("inner node size must equal the outer length N");
    if (inner_.systematic_nodes().size() != static_cast<std::size_t>(inner_.k()))
        throw ParameterError("inner code must be systematic");
    if (inner_.M() != inner_.k() * inner_.l()) throw ParameterError("inner code must store k l symbols");
}

int ConcatCode::file_size() const { return outer_.K() * inner_.k() * m(); }

double ConcatCode::rate() const {
    return static_cast<double>(outer_.K()) * inner_.k() / (static_cast<double>(outer_.N()) * inner_.n());
}

bool ConcatCode::is_systematic(int node) const {
    const auto& s = inner_.systematic_nodes();
    return std::find(s.begin(), s.end(), node) != s.end();
}

ConcatCodeword ConcatCode::encode(const Vec& file) const {
    if (file.size() != static_cast<std::size_t>(file_size())) throw ParameterError("file length must be K k m");
    const int k = inner_.k();
    const int K = outer_.K();
    const int N = outer_.N();
    const int mm = m();
    std::vector<ExtVec> blocks;
    for (int i = 0; i < k; ++i) {
        ExtVec msg;
        for (int e = 0; e < K; ++e) {
            const auto begin = file.begin() + (static_cast<std::ptrdiff_t>(i) * K + e) * mm;
            msg.emplace_back(begin, begin + mm);
        }
        blocks.push_back(outer_.encode(msg));
    }
    ConcatCodeword cw;
    for (int j = 0; j < mm; ++j) {
        Vec r;
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < N; ++c) r.push_back(blocks[i][c][j]);
        cw.rows.push_back(inner_.encode(r));
    }
    return cw;
}

ExtVec ConcatCode::node_symbols(const ConcatCodeword& cw, int node) const {
    if (cw.rows.size() != static_cast<std::size_t>(m())) throw ParameterError("codeword must have m rows");
    ExtVec out;
    for (int c = 0; c < outer_.N(); ++c) {
        ExtSymbol s;
        for (int j = 0; j < m(); ++j) s.push_back(cw.rows[j].at(node).at(c));
        out.push_back(std::move(s));
    }
    return out;
}

std::int64_t ConcatCode::retrieval_symbols(bool local_decode) const {
    return static_cast<std::int64_t>(inner_.k()) * (local_decode ? outer_.K() : outer_.N()) * m();
}

Vec ConcatCode::retrieve(const ConcatCodeword& cw) const {
    Vec file;
    for (int node : inner_.systematic_nodes())
        for (const auto& s : outer_.decode(node_symbols(cw, node))) file.insert(file.end(), s.begin(), s.end());
    return file;
}

AdversaryModel AdversaryModel::random(std::span<const int> candidates, int t, int m, int l, const gf::Field& field,
                                      std::mt19937_64& rng) {
    if (t < 0 || t > static_cast<int>(candidates.size())) throw ParameterError("cannot corrupt that many helpers");
    std::vector<int> pool(candidates.begin(), candidates.end());
    AdversaryModel adv;
    for (int i = 0; i < t; ++i) {
        const std::size_t pick = i + static_cast<std::size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[pick]);
        adv.corrupted.push_back(pool[i]);
        std::vector<Vec> block;
        bool nonzero = false;
        while (!nonzero) {
            block.assign(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(l), 0));
            for (auto& row : block)
                for (auto& x : row) {
                    x = static_cast<gf::Symbol>(rng() % field.order());
                    nonzero = nonzero || x != 0;
                }
        }
        adv.corruption.push_back(std::move(block));
    }
    return adv;
}

nlohmann::json AdversarialResult::to_json() const {
    return {{"error_rank", error_rank},
            {"error_bound", error_bound},
            {"decoded", decoded},
            {"success", success},
            {"total", to_string(report.total)},
            {"report", report.to_json()}};
}

AdversarialResult adversarial_repair(const ConcatCode& code, const ConcatCodeword& cw, const graph::StorageGraph& g,
                                     int f, std::span<const int> D, const AdversaryModel& adv) {
    if (!code.is_systematic(f)) throw ParameterError("adversarial repair is supported for systematic nodes only");
    const auto& inner = code.inner();
    const auto& F = *code.outer().field();
    const int mm = code.m();
    if (adv.corrupted.size() != adv.corruption.size()) throw ParameterError("one corruption block per corrupted node");
    const auto tree = graphrepair::build_repair_tree(g, f, D, inner.k());
    const auto plan = codes::derive_ip_matrices(inner, f, tree.helpers);

    std::vector<NodeContents> rows = cw.rows;
    AdversarialResult out;
    std::set<int> seen;
    for (std::size_t i = 0; i < adv.corrupted.size(); ++i) {
        const int h = adv.corrupted[i];
        if (std::find(D.begin(), D.end(), h) == D.end()) throw ParameterError("corrupted nodes must be helpers");
        if (!seen.insert(h).second) throw ParameterError("corrupted nodes must be distinct");
        if (adv.corruption[i].size() != static_cast<std::size_t>(mm)) throw ParameterError("corruption needs m rows");
        for (int j = 0; j < mm; ++j) {
            auto& content = rows[j].at(h);
            const auto& z = adv.corruption[i][j];
            if (z.size() != content.size()) throw ParameterError("corruption rows need l symbols");
            for (std::size_t c = 0; c < z.size(); ++c) content[c] = inner.field()->add(content[c], z[c]);
        }
        out.error_bound += plan.downloads()[plan.position(h)];
    }

    std::vector<Vec> restored(static_cast<std::size_t>(mm));
    for (int j = 0; j < mm; ++j) {
        auto report = graphrepair::run_repair(tree, plan, rows[j], graphrepair::Scheme::ip_u, inner.l(), false, restored[j]);
        if (j == 0) out.report = std::move(report);
    }
    ExtVec received;
    for (int c = 0; c < inner.l(); ++c) {
        ExtSymbol s;
        for (int j = 0; j < mm; ++j) s.push_back(restored[j][c]);
        received.push_back(std::move(s));
    }
    const ExtVec truth = code.node_symbols(cw, f);
    out.error_rank = rank_weight(F, sub(F, received, truth));
    ExtVec result = received;
    try {
        result = code.outer().encode(code.outer().decode(received));
        out.decoded = true;
    } catch (const DecodingFailure&) {
        out.decoded = false;
    }
    out.success = out.decoded && result == truth;
    out.restored.assign(static_cast<std::size_t>(mm), Vec(static_cast<std::size_t>(inner.l())));
    for (int j = 0; j < mm; ++j)
        for (int c = 0; c < inner.l(); ++c) out.restored[j][c] = result[c][j];
    return out;
}

graphrepair::BandwidthReport af_with_extra_helpers_baseline(const graph::StorageGraph& g, int f, int k, int d, int t,
                                                            std::int64_t beta) {
    if (t < 0 || d < k || beta < 1) throw ParameterError("baseline needs t >= 0, d >= k and beta >= 1");
    const int total = d + 2 * t;
    if (total > g.n() - 1) throw ParameterError("not enough nodes for d+2t helpers");
    const auto helpers = graph::nearest_helpers(g, f, total);
    const auto tree = graphrepair::build_repair_tree(g, f, helpers, k);
    return graphrepair::lambda_af_uniform(tree, Rational(beta * (total - k + 1)), total, k);
}

}  // namespace grc::adversarial
