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
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "grc/codes/linear_code.hpp"
#include "grc/gf/extension.hpp"
#include "grc/graph/graph.hpp"
#include "grc/graphrepair/graphrepair.hpp"

namespace grc::adversarial {

using codes::NodeContents;
using codes::Vec;
using gf::ExtFieldPtr;
using gf::ExtSymbol;
using ExtVec = std::vector<ExtSymbol>;

/// Rank over the base field of the m x N expansion of v.
std::size_t rank_weight(const gf::ExtensionField& field, const ExtVec& v);

/// [N, K, N-K+1] Gabidulin code over F_{q^m}: c_i = f(g_i) for the
/// linearized polynomial f(x) = sum_j f_j x^{q^j}.
class GabidulinCode {
public:
    /// Empty `points` selects g_i = gamma^{i-1}. Throws ParameterError
    /// unless 1 <= K <= N <= m and the points are independent over F_q.
    GabidulinCode(ExtFieldPtr field, int N, int K, ExtVec points = {});

    const ExtFieldPtr& field() const { return field_; }
    int N() const { return n_; }
    int K() const { return k_; }
    int min_distance() const { return n_ - k_ + 1; }
    int radius() const { return (n_ - k_) / 2; }
    const ExtVec& points() const { return points_; }

    ExtVec encode(const ExtVec& message) const;
    /// Welch-Berlekamp style decoding up to radius() rank errors. Throws
    /// DecodingFailure when no codeword lies within the radius.
    ExtVec decode(const ExtVec& received) const;

private:
    ExtFieldPtr field_;
    int n_;
    int k_;
    ExtVec points_;
};

/// Nearest codeword in rank distance by enumerating all q^{mK} messages
/// (first one found on ties). Throws ParameterError above 2^16 codewords.
ExtVec brute_force_nearest(const GabidulinCode& code, const ExtVec& received, std::size_t* distance = nullptr);

/// m parallel codewords of a systematic inner code, one per expansion row.
/// rows[j][i] is node i's content in row j.
struct ConcatCodeword {
    std::vector<NodeContents> rows;
};

/// Outer Gabidulin code [N, K] over F_{q^m} and a systematic inner
/// regenerating code over F_q with l = N.
class ConcatCode {
public:
    ConcatCode(GabidulinCode outer, codes::LinearCode inner);

    const GabidulinCode& outer() const { return outer_; }
    const codes::LinearCode& inner() const { return inner_; }
    int m() const { return static_cast<int>(outer_.field()->degree()); }
    /// K k m symbols of F_q.
    int file_size() const;
    double rate() const;
    bool is_systematic(int node) const;

    ConcatCodeword encode(const Vec& file) const;
    /// Node content recombined over the polynomial basis into N symbols of
    /// F_{q^m}.
    ExtVec node_symbols(const ConcatCodeword& cw, int node) const;
    /// Symbols of F_q downloaded to read the file from the systematic
    /// nodes: k K m with local decoding, k N m otherwise.
    std::int64_t retrieval_symbols(bool local_decode) const;
    /// Reads the file back from the systematic nodes, decoding each node's
    /// outer codeword locally.
    Vec retrieve(const ConcatCodeword& cw) const;

private:
    GabidulinCode outer_;
    codes::LinearCode inner_;
};

/// Additive corruption of stored contents: corruption[i] is an m x l block
/// (one l-vector per row) added to node corrupted[i].
struct AdversaryModel {
    std::vector<int> corrupted;
    std::vector<std::vector<Vec>> corruption;

    /// Picks t distinct nodes from `candidates` and nonzero l-vectors for
    /// every row.
    static AdversaryModel random(std::span<const int> candidates, int t, int m, int l, const gf::Field& field,
                                 std::mt19937_64& rng);
};

struct AdversarialResult {
    std::vector<Vec> restored;  ///< m rows of l symbols
    std::size_t error_rank = 0;
    std::int64_t error_bound = 0;  ///< sum of the corrupted helpers' downloads
    bool decoded = false;
    bool success = false;
    graphrepair::BandwidthReport report;  ///< counts in symbols of F_{q^m}

    nlohmann::json to_json() const;
};

/// IP repair of systematic node f over the BFS tree of {f} and D, run on
/// every expansion row with the corrupted contents, then outer decoding.
/// Throws ParameterError when f is not systematic.
AdversarialResult adversarial_repair(const ConcatCode& code, const ConcatCodeword& cw, const graph::StorageGraph& g,
                                     int f, std::span<const int> D, const AdversaryModel& adv);

/// AF accounting with the d+2t nearest helpers each sending beta.
graphrepair::BandwidthReport af_with_extra_helpers_baseline(const graph::StorageGraph& g, int f, int k, int d, int t,
                                                            std::int64_t beta);

}  // namespace grc::adversarial
