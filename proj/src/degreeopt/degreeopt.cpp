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

#include "grc/degreeopt/degreeopt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

#include "grc/error.hpp"
#include "grc/graphrepair/graphrepair.hpp"

namespace grc::degreeopt {
namespace {

std::vector<Rational> sorted_desc(std::vector<Rational> v) {
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return v;
}

// Layer sizes |Gamma_i| around f (index i-1); throws when G is disconnected.
std::vector<int> layer_sizes(const StorageGraph& g, int f) {
    const auto dist = graph::distances(g, f);
    std::vector<int> sizes;
    for (int v = 0; v < g.n(); ++v) {
        if (dist[v] < 0) throw GraphError("graph is disconnected");
        if (dist[v] == 0) continue;
        if (static_cast<int>(sizes.size()) < dist[v]) sizes.resize(static_cast<std::size_t>(dist[v]), 0);
        ++sizes[dist[v] - 1];
    }
    return sizes;
}

}  // namespace

void LpInstance::validate() const {
    if (n < 2) throw ParameterError("LP needs n >= 2");
    if (k < 1 || k > n - 1) throw ParameterError("LP needs 1 <= k <= n-1");
    if (costs.size() != static_cast<std::size_t>(n - 1)) throw ParameterError("LP needs n-1 costs");
    if (l < Rational(0)) throw ParameterError("node size must be nonnegative");
    for (const auto& c : costs)
        if (c < Rational(0)) throw ParameterError("costs must be nonnegative");
}

bool lp_feasible(int n, int k, const Rational& l, const std::vector<Rational>& beta) {
    std::vector<Rational> b = beta;
    std::sort(b.begin(), b.end());
    Rational s(0);
    for (int i = 0; i < n - k && i < static_cast<int>(b.size()); ++i) s += b[i];
    return s >= l;
}

DegreePlan solve_lp_structural(LpInstance inst) {
    inst.validate();
    DegreePlan best;
    best.costs = sorted_desc(inst.costs);
    const int n = inst.n;
    for (int d = inst.k; d <= n - 1; ++d) {
        const Rational beta = inst.l / Rational(d - inst.k + 1);
        Rational cheapest(0);
        for (int i = n - 1 - d; i < n - 1; ++i) cheapest += best.costs[i];
        const Rational obj = beta * cheapest;
        best.objective_by_d.push_back(obj);
        if (best.d == 0 || obj < best.objective) {
            best.d = d;
            best.objective = obj;
        }
    }
    best.beta.assign(static_cast<std::size_t>(n - 1), Rational(0));
    for (int i = n - 1 - best.d; i < n - 1; ++i) best.beta[i] = inst.l / Rational(best.d - inst.k + 1);
    if (!lp_feasible(n, inst.k, inst.l, best.beta)) throw Error("structural LP solution is infeasible");
    return best;
}

Rational lp_bruteforce_oracle(LpInstance inst, int grid_denominator) {
    inst.validate();
    if (inst.n > 6) throw ParameterError("brute-force LP oracle is limited to n <= 6");
    if (grid_denominator < 1) throw ParameterError("grid denominator must be positive");
    if (inst.l == Rational(0)) return Rational(0);
    const int vars = inst.n - 1;
    const int q = grid_denominator;
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1U << vars); ++m)
        if (std::popcount(m) == inst.n - inst.k) masks.push_back(m);
    std::vector<int> j(static_cast<std::size_t>(vars), 0);
    bool found = false;
    Rational best(0);
    while (true) {
        bool ok = true;
        for (unsigned m : masks) {
            int s = 0;
            for (int i = 0; i < vars; ++i)
                if (m & (1U << i)) s += j[i];
            if (s < q) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Rational obj(0);
            for (int i = 0; i < vars; ++i) obj += inst.costs[i] * Rational(j[i]);
            if (!found || obj < best) {
                best = obj;
                found = true;
            }
        }
        int pos = 0;
        while (pos < vars && j[pos] == q) j[pos++] = 0;
        if (pos == vars) break;
        ++j[pos];
    }
    return best * inst.l / Rational(q);
}

Rational lambda_af_at_degree(const StorageGraph& g, int f, int k, const Rational& l, int d) {
    if (d < k) throw ParameterError("repair degree must be at least k");
    const auto helpers = graph::nearest_helpers(g, f, d);
    const auto dist = graph::distances(g, f);
    std::int64_t hops = 0;
    for (int h : helpers) hops += dist[h];
    return Rational(hops) * l / Rational(d - k + 1);
}

AfDegreeResult optimal_degree_af(const StorageGraph& g, int f, int k, const Rational& l) {
    if (!g.connected()) throw GraphError("graph is disconnected");
    const int n = g.n();
    if (k < 1 || k > n - 1) throw ParameterError("need 1 <= k <= n-1");
    const auto order = graph::bfs_order(g, f);
    const auto dist = graph::distances(g, f);
    AfDegreeResult r;
    std::int64_t hops = 0;
    for (int d = 1; d <= n - 1; ++d) {
        hops += dist[order[d]];
        if (d < k) continue;
        const Rational lam = Rational(hops) * l / Rational(d - k + 1);
        r.lambda_by_d.push_back(lam);
        if (r.d == 0 || lam < r.lambda) {
            r.d = d;
            r.lambda = lam;
        }
    }
    r.helpers.assign(order.begin() + 1, order.begin() + 1 + r.d);
    return r;
}

Rational threshold_regular(int t, int m) {
    if (t < 2 || m < 1) throw ParameterError("threshold needs t >= 2 and m >= 1");
    Rational best(0);
    for (int a = 1; a <= m; ++a) {
        Rational s(0);
        std::int64_t layer = t;
        for (int i = 1; i <= a - 1; ++i) {
            s += Rational(layer) * (Rational(1) - Rational(i, a));
            layer *= (t - 1);
        }
        best = std::max(best, s);
    }
    return Rational(1) + best;
}

int threshold_k(int t, int m) {
    const Rational th = threshold_regular(t, m);
    return static_cast<int>(th.numerator() / th.denominator()) + 1;
}

Rational threshold_general(const StorageGraph& g, int f) {
    const auto sizes = layer_sizes(g, f);
    Rational best(1);
    std::int64_t ball = 0;
    std::int64_t weighted = 0;
    for (int a = 1; a <= static_cast<int>(sizes.size()); ++a) {
        if (a > 1) {
            ball += sizes[a - 2];
            weighted += static_cast<std::int64_t>(a - 1) * sizes[a - 2];
        }
        best = std::max(best, Rational(ball + 1) - Rational(weighted, a));
    }
    return best;
}

int threshold_k_general(const StorageGraph& g, int f) {
    const Rational th = threshold_general(g, f);
    return static_cast<int>(th.numerator() / th.denominator()) + 1;
}

nlohmann::json TreeSearchResult::to_json() const {
    nlohmann::json par = nlohmann::json::object();
    for (int h : helpers) par[std::to_string(h)] = parent[h];
    return {{"d", d},
            {"helpers", helpers},
            {"parent", par},
            {"lambda", to_string(lambda)},
            {"exhaustive", exhaustive},
            {"trees_examined", trees_examined}};
}

TreeSearchResult optimal_tree_search(const StorageGraph& g, int f, int k, const Rational& l, SearchMode mode) {
    const int n = g.n();
    if (f < 0 || f >= n) throw ParameterError("failed node out of range");
    if (k < 1 || k > n - 1) throw ParameterError("need 1 <= k <= n-1");
    TreeSearchResult best;
    best.parent.assign(static_cast<std::size_t>(n), -1);
    bool found = false;

    if (mode == SearchMode::heuristic) {
        const auto reach = graph::bfs_order(g, f);
        for (int d = k; d <= static_cast<int>(reach.size()) - 1; ++d) {
            const auto D = graph::nearest_helpers(g, f, d);
            const auto tree = graphrepair::build_repair_tree(g, f, D, k);
            const Rational lam = graphrepair::lambda_ip_uniform(tree, l, d, k).total;
            ++best.trees_examined;
            if (!found || lam < best.lambda) {
                found = true;
                best.lambda = lam;
                best.d = d;
                best.helpers = D;
                best.parent = tree.parent;
            }
        }
        if (!found) throw GraphError("fewer than k vertices are reachable from the failed node");
        std::sort(best.helpers.begin(), best.helpers.end());
        return best;
    }

    if (n > 9) throw ParameterError("exhaustive tree search is limited to n <= 9");
    constexpr std::uint64_t kBudget = 5'000'000;
    best.exhaustive = true;
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != f) others.push_back(v);
    const int m = static_cast<int>(others.size());
    std::vector<unsigned> subsets;
    for (unsigned mask = 1; mask < (1U << m); ++mask)
        if (std::popcount(mask) >= k) subsets.push_back(mask);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned mask : subsets) {
        std::vector<int> D;
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        in[f] = 1;
        for (int i = 0; i < m; ++i)
            if (mask & (1U << i)) {
                D.push_back(others[i]);
                in[others[i]] = 1;
            }
        const int d = static_cast<int>(D.size());
        std::vector<std::vector<int>> choices;
        bool ok = true;
        for (int v : D) {
            std::vector<int> c;
            for (int u : g.neighbors(v))
                if (in[u]) c.push_back(u);
            if (c.empty()) ok = false;
            choices.push_back(std::move(c));
        }
        if (!ok) continue;
        std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        std::vector<int> sigma(static_cast<std::size_t>(n), 0);
        std::vector<int> state(static_cast<std::size_t>(n), 0);
        while (true) {
            if (++best.trees_examined > kBudget)
                throw ParameterError("exhaustive tree search exceeds its enumeration budget");
            for (int i = 0; i < d; ++i) parent[D[i]] = choices[i][idx[i]];
            // Acyclic iff every helper reaches f; state 2 marks vertices known to.
            std::fill(state.begin(), state.end(), 0);
            state[f] = 2;
            bool tree = true;
            std::vector<int> order;
            for (int v : D) {
                std::vector<int> chain;
                int u = v;
                while (state[u] == 0) {
                    state[u] = 1;
                    chain.push_back(u);
                    u = parent[u];
                }
                if (state[u] == 1) {
                    tree = false;
                    break;
                }
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                    state[*it] = 2;
                    order.push_back(*it);
                }
            }
            if (tree) {
                std::fill(sigma.begin(), sigma.end(), 0);
                for (auto it = order.rbegin(); it != order.rend(); ++it) sigma[parent[*it]] += sigma[*it] + 1;
                std::int64_t units = 0;
                for (int v : D) units += std::min(sigma[v] + 1, d - k + 1);
                const Rational lam = Rational(units) * l / Rational(d - k + 1);
                if (!found || lam < best.lambda) {
                    found = true;
                    best.lambda = lam;
                    best.d = d;
                    best.helpers = D;
                    best.parent.assign(static_cast<std::size_t>(n), -1);
                    for (int v : D) best.parent[v] = parent[v];
                }
            }
            int pos = 0;
            while (pos < d && idx[pos] + 1 == choices[pos].size()) idx[pos++] = 0;
            if (pos == d) break;
            ++idx[pos];
        }
    }
    if (!found) throw GraphError("no tree reaches k helpers from the failed node");
    return best;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

McRow mc_trials(int n, double p, int k, int trials, std::uint64_t seed) {
    if (trials < 0) throw ParameterError("trial count must be nonnegative");
    if (n < 3) throw ParameterError("random-graph experiment needs n >= 3");
    if (k < 1 || k > n - 1) throw ParameterError("k must satisfy 1 <= k <= n-1");
    if (!(p > 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in (0, 1]");
    constexpr int kMaxResamples = 1000;
    McRow row;
    row.n = n;
    row.p = p;
    row.k = k;
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t s = splitmix64(seed + static_cast<std::uint64_t>(trial));
        auto g = StorageGraph::erdos_renyi(n, p, s);
        int attempts = 0;
        while (!g.connected()) {
            if (++attempts > kMaxResamples) throw Error("too many disconnected samples");
            ++row.resampled;
            s = splitmix64(s);
            g = StorageGraph::erdos_renyi(n, p, s);
        }
        ++row.trials;
        if (optimal_degree_af(g, 0, k, Rational(1)).d == n - 1) ++row.hits;
    }
    return row;
}

std::vector<McRow> mc_random_graph_experiment(const std::vector<int>& ns, double p_factor, double k_fraction,
                                              int trials, std::uint64_t seed) {
    std::vector<McRow> rows;
    for (int n : ns) {
        if (n < 3) throw ParameterError("random-graph experiment needs n >= 3");
        const double p = std::min(1.0, p_factor * std::log(static_cast<double>(n)) / n);
        const int k = std::max(1, static_cast<int>(std::floor(k_fraction * n)));
        rows.push_back(mc_trials(n, p, k, trials, splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(n)))));
    }
    return rows;
}

}  // namespace grc::degreeopt
