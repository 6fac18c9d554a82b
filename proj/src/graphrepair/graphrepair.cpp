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

#include "grc/graphrepair/graphrepair.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "grc/error.hpp"

namespace grc::graphrepair {
namespace {

nlohmann::json rational_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return grc::to_string(r);
}

void check_plan(const RepairTree& tree, const NonuniformPlan& plan) {
    if (plan.layer_beta.size() != static_cast<std::size_t>(tree.height()))
        throw ParameterError("plan must give one download per layer");
    if (!plan.feasible())
        throw ParameterError("nonuniform plan is infeasible: smallest d-k+1 downloads sum to " +
                             grc::to_string(plan.smallest_sum) + ", need " + grc::to_string(plan.l));
}

// Edge loads when every helper sends `own[v]` and vertices selected by
// `compress` replace what they hold by l symbols.
template <typename Compress>
BandwidthReport accumulate(const RepairTree& tree, Scheme scheme, const std::vector<Rational>& own, const Rational& l,
                           Compress compress) {
    std::vector<Rational> load(tree.parent.size(), Rational(0));
    BandwidthReport r;
    r.scheme = scheme;
    for (int v : tree.bottom_up()) {
        load[v] += own[v];
        if (compress(v, load[v])) load[v] = l;
        r.edges.push_back({v, tree.parent[v], load[v]});
        load[tree.parent[v]] += load[v];
    }
    return r;
}

auto no_compression = [](int, const Rational&) { return false; };

void finish(BandwidthReport& r, const RepairTree& tree, const std::vector<Rational>& own) {
    std::sort(r.edges.begin(), r.edges.end(), [](const EdgeLoad& a, const EdgeLoad& b) { return a.from < b.from; });
    std::vector<int> hs = tree.helpers;
    std::sort(hs.begin(), hs.end());
    for (int h : hs) r.downloads.emplace_back(h, own[h]);
}

std::vector<Rational> own_uniform(const RepairTree& tree, const Rational& beta) {
    std::vector<Rational> own(tree.parent.size(), Rational(0));
    for (int h : tree.helpers) own[h] = beta;
    return own;
}

std::vector<Rational> own_layered(const RepairTree& tree, const NonuniformPlan& plan) {
    std::vector<Rational> own(tree.parent.size(), Rational(0));
    for (int h : tree.helpers) own[h] = plan.layer_beta[tree.depth[h] - 1];
    return own;
}

void check_dims(const RepairTree& tree, const Rational& l, int d, int k) {
    if (d != tree.d() || k != tree.k) throw ParameterError("d and k must match the repair tree");
    if (l <= 0) throw ParameterError("node size must be positive");
}

}  // namespace

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::af_u:
            return "af-u";
        case Scheme::ip_u:
            return "ip-u";
        case Scheme::af_nu:
            return "af-nu";
        case Scheme::ip_nu:
            return "ip-nu";
    }
    return "?";
}

Scheme parse_scheme(const std::string& s) {
    for (Scheme x : {Scheme::af_u, Scheme::ip_u, Scheme::af_nu, Scheme::ip_nu})
        if (s == to_string(x)) return x;
    throw ParameterError("unknown scheme '" + s + "' (expected af-u, ip-u, af-nu or ip-nu)");
}

bool is_ip(Scheme s) { return s == Scheme::ip_u || s == Scheme::ip_nu; }
bool is_nonuniform(Scheme s) { return s == Scheme::af_nu || s == Scheme::ip_nu; }

std::vector<int> RepairTree::layer_sizes() const {
    std::vector<int> out;
    for (const auto& layer : layers) out.push_back(static_cast<int>(layer.size()));
    return out;
}

bool RepairTree::in_tree(int v) const {
    return v >= 0 && v < static_cast<int>(depth.size()) && depth[v] >= 0;
}

bool RepairTree::in_j(int v) const { return std::binary_search(J.begin(), J.end(), v); }

std::vector<int> RepairTree::bottom_up() const {
    std::vector<int> out = helpers;
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
        if (depth[a] != depth[b]) return depth[a] > depth[b];
        return a < b;
    });
    return out;
}

nlohmann::json RepairTree::to_json() const {
    nlohmann::json par = nlohmann::json::object();
    for (int h : helpers) par[std::to_string(h)] = parent[h];
    return {{"root", root}, {"helpers", helpers}, {"parent", par}, {"layers", layers}, {"J", J}};
}

RepairTree build_repair_tree(const StorageGraph& g, int f, std::span<const int> D, int k) {
    const int n = g.n();
    if (f < 0 || f >= n) throw ParameterError("failed node out of range");
    std::vector<char> allowed(static_cast<std::size_t>(n), 0);
    for (int h : D) {
        if (h < 0 || h >= n) throw ParameterError("helper out of range");
        if (h == f) throw ParameterError("the failed node cannot help");
        if (allowed[h]) throw ParameterError("helpers must be distinct");
        allowed[h] = 1;
    }
    if (D.empty()) throw ParameterError("at least one helper is needed");
    if (k < 1 || k > static_cast<int>(D.size())) throw ParameterError("need 1 <= k <= d");
    allowed[f] = 1;

    RepairTree t;
    t.root = f;
    t.k = k;
    t.parent.assign(static_cast<std::size_t>(n), -1);
    t.depth.assign(static_cast<std::size_t>(n), -1);
    t.children.assign(static_cast<std::size_t>(n), {});
    t.sigma.assign(static_cast<std::size_t>(n), 0);
    t.ip_ancestor.assign(static_cast<std::size_t>(n), -1);
    t.depth[f] = 0;
    std::vector<int> order{f};
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int u = order[i];
        for (int v : g.neighbors(u)) {
            if (!allowed[v] || t.depth[v] >= 0) continue;
            t.depth[v] = t.depth[u] + 1;
            t.parent[v] = u;
            t.children[u].push_back(v);
            order.push_back(v);
            if (static_cast<int>(t.layers.size()) < t.depth[v]) t.layers.emplace_back();
            t.layers[t.depth[v] - 1].push_back(v);
        }
    }
    if (order.size() != D.size() + 1) {
        for (int h : D)
            if (t.depth[h] < 0)
                throw GraphError("helper " + std::to_string(h) + " is unreachable from node " + std::to_string(f) +
                                 " among the helpers");
    }
    t.helpers.assign(order.begin() + 1, order.end());
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != f) t.sigma[t.parent[*it]] += t.sigma[*it] + 1;
    for (int h : t.helpers)
        if (t.sigma[h] >= t.ip_threshold()) t.J.push_back(h);
    std::sort(t.J.begin(), t.J.end());
    for (int h : t.helpers) {
        int a = t.parent[h];
        while (a != f && !t.in_j(a)) a = t.parent[a];
        t.ip_ancestor[h] = a;
    }
    return t;
}

Rational BandwidthReport::edge_sum() const {
    Rational s(0);
    for (const auto& e : edges) s += e.symbols;
    return s;
}

nlohmann::json BandwidthReport::to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& x : edges) e.push_back({{"from", x.from}, {"to", x.to}, {"symbols", rational_json(x.symbols)}});
    nlohmann::json dl = nlohmann::json::object();
    for (const auto& [h, b] : downloads) dl[std::to_string(h)] = rational_json(b);
    return {{"scheme", to_string(scheme)}, {"total", rational_json(total)}, {"edges", e}, {"downloads", dl}};
}

bool NonuniformPlan::monotone() const {
    for (std::size_t i = 0; i < layer_beta.size(); ++i) {
        if (layer_beta[i] < 0) return false;
        if (i > 0 && layer_beta[i] > layer_beta[i - 1]) return false;
    }
    return true;
}

bool NonuniformPlan::feasible() const { return monotone() && eq16_residual == Rational(0) && smallest_sum == l; }

nlohmann::json NonuniformPlan::to_json() const {
    nlohmann::json lb = nlohmann::json::array();
    nlohmann::json dl = nlohmann::json::array();
    for (const auto& b : layer_beta) lb.push_back(rational_json(b));
    for (const auto& x : delta) dl.push_back(rational_json(x));
    return {{"l", rational_json(l)},   {"beta", rational_json(beta)},
            {"layer_beta", lb},        {"delta", dl},
            {"t_prime", t_prime},      {"eq16_residual", rational_json(eq16_residual)},
            {"feasible", feasible()}};
}

NonuniformPlan make_plan(const RepairTree& tree, Rational l, std::vector<Rational> layer_beta) {
    if (layer_beta.size() != static_cast<std::size_t>(tree.height()))
        throw ParameterError("plan must give one download per layer");
    NonuniformPlan p;
    const int r = tree.ip_threshold();
    p.l = l;
    p.beta = l / Rational(r);
    p.layer_beta = std::move(layer_beta);
    for (const auto& b : p.layer_beta) p.delta.push_back(p.beta - b);
    const auto sizes = tree.layer_sizes();
    const int t = tree.height();
    int suffix = 0;
    for (int s = t; s >= 1; --s) {
        suffix += sizes[s - 1];
        if (suffix >= r) {
            p.t_prime = s;
            break;
        }
    }
    if (p.t_prime > 0) {
        Rational acc(0);
        int below = 0;
        for (int i = p.t_prime + 1; i <= t; ++i) {
            acc += Rational(sizes[i - 1]) * p.delta[i - 1];
            below += sizes[i - 1];
        }
        p.eq16_residual = acc + Rational(r - below) * p.delta[p.t_prime - 1];
    }
    std::vector<Rational> all;
    for (int i = 0; i < t; ++i)
        for (int c = 0; c < sizes[i]; ++c) all.push_back(p.layer_beta[i]);
    std::sort(all.begin(), all.end());
    for (int i = 0; i < r && i < static_cast<int>(all.size()); ++i) p.smallest_sum += all[i];
    return p;
}

NonuniformPlan uniform_plan(const RepairTree& tree, Rational l) {
    return make_plan(tree, l, std::vector<Rational>(static_cast<std::size_t>(tree.height()), l / Rational(tree.ip_threshold())));
}

NonuniformPlan deepest_layer_plan(const RepairTree& tree, Rational l, Rational delta) {
    const int r = tree.ip_threshold();
    const int da = tree.layer_sizes().back();
    if (da >= r) throw ParameterError("the deepest layer alone reaches d-k+1 helpers; its deficit cannot be absorbed");
    const Rational beta = l / Rational(r);
    std::vector<Rational> lb(static_cast<std::size_t>(tree.height()), beta + Rational(da) * delta / Rational(r - da));
    lb.back() = beta - delta;
    return make_plan(tree, l, std::move(lb));
}

BandwidthReport lambda_af_uniform(const RepairTree& tree, Rational l, int d, int k) {
    check_dims(tree, l, d, k);
    const Rational beta = l / Rational(d - k + 1);
    const auto own = own_uniform(tree, beta);
    auto r = accumulate(tree, Scheme::af_u, own, l, no_compression);
    const auto sizes = tree.layer_sizes();
    for (std::size_t i = 0; i < sizes.size(); ++i) r.total += Rational(static_cast<std::int64_t>(i + 1) * sizes[i]) * beta;
    finish(r, tree, own);
    return r;
}

BandwidthReport lambda_ip_uniform(const RepairTree& tree, Rational l, int d, int k) {
    check_dims(tree, l, d, k);
    const Rational beta = l / Rational(d - k + 1);
    const auto own = own_uniform(tree, beta);
    BandwidthReport r;
    r.scheme = Scheme::ip_u;
    for (int h : tree.helpers) {
        const Rational e = Rational(std::min(tree.sigma[h] + 1, d - k + 1)) * beta;
        r.edges.push_back({h, tree.parent[h], e});
        r.total += e;
    }
    finish(r, tree, own);
    return r;
}

BandwidthReport lambda_ip_nonuniform(const RepairTree& tree, Rational l, int d, int k, const NonuniformPlan& plan,
                                     bool greedy_ip) {
    check_dims(tree, l, d, k);
    check_plan(tree, plan);
    if (plan.l != l) throw ParameterError("plan node size differs from l");
    const auto own = own_layered(tree, plan);
    auto r = accumulate(tree, Scheme::ip_nu, own, l, [&](int v, const Rational& load) {
        return tree.in_j(v) || (greedy_ip && load > l);
    });
    if (greedy_ip) {
        r.total = r.edge_sum();
    } else {
        r.total = Rational(static_cast<std::int64_t>(tree.J.size())) * l;
        for (int h : tree.helpers)
            if (!tree.in_j(h))
                r.total += Rational(tree.depth[h] - tree.depth[tree.ip_ancestor[h]]) * own[h];
    }
    finish(r, tree, own);
    return r;
}

BandwidthReport lambda_af_nonuniform(const RepairTree& tree, const NonuniformPlan& plan) {
    check_plan(tree, plan);
    const auto own = own_layered(tree, plan);
    auto r = accumulate(tree, Scheme::af_nu, own, plan.l, no_compression);
    const auto sizes = tree.layer_sizes();
    for (std::size_t i = 0; i < sizes.size(); ++i)
        r.total += Rational(static_cast<std::int64_t>(i + 1) * sizes[i]) * plan.layer_beta[i];
    finish(r, tree, own);
    return r;
}

Rational ip_nonuniform_savings(const RepairTree& tree, const NonuniformPlan& plan) {
    check_plan(tree, plan);
    Rational s(0);
    for (int h : tree.helpers)
        if (!tree.in_j(h)) s += Rational(tree.depth[h] - tree.depth[tree.ip_ancestor[h]]) * plan.delta[tree.depth[h] - 1];
    return s;
}

Rational af_deepest_layer_savings(std::span<const int> layer_sizes, int k, Rational delta) {
    const int a = static_cast<int>(layer_sizes.size());
    if (a == 0) throw ParameterError("empty layer list");
    int d = 0;
    for (int x : layer_sizes) d += x;
    const int da = layer_sizes.back();
    if (da >= d - k + 1) throw ParameterError("the deepest layer alone reaches d-k+1 helpers");
    std::int64_t inner = -static_cast<std::int64_t>(a) * (k - 1);
    for (int i = 1; i < a; ++i) inner += static_cast<std::int64_t>(a - i) * layer_sizes[i - 1];
    return Rational(da) * delta / Rational(d - k + 1 - da) * Rational(inner);
}

BandwidthReport run_repair(const RepairTree& tree, const codes::IpMatrixSet& plan, const NodeContents& nodes,
                           Scheme scheme, std::int64_t l, bool greedy_ip, Vec& restored) {
    struct Message {
        std::optional<Vec> partial;
        std::vector<int> raw_helpers;
        std::vector<Vec> raw_symbols;
        std::int64_t size(std::int64_t l) const {
            std::int64_t s = partial ? l : 0;
            for (const auto& v : raw_symbols) s += static_cast<std::int64_t>(v.size());
            return s;
        }
    };
    if (plan.failed != tree.root) throw ParameterError("repair plan is for a different failed node");
    const auto& field = plan.combiners.at(0).field();
    auto add_into = [&](std::optional<Vec>& acc, const Vec& x) {
        if (!acc) {
            acc = x;
            return;
        }
        for (std::size_t i = 0; i < x.size(); ++i) (*acc)[i] = field->add((*acc)[i], x[i]);
    };
    auto merge = [&](Message& into, Message&& from) {
        if (from.partial) add_into(into.partial, *from.partial);
        for (std::size_t i = 0; i < from.raw_helpers.size(); ++i) {
            into.raw_helpers.push_back(from.raw_helpers[i]);
            into.raw_symbols.push_back(std::move(from.raw_symbols[i]));
        }
    };
    std::map<int, Message> inbox;
    BandwidthReport r;
    r.scheme = scheme;
    for (int v : tree.bottom_up()) {
        Message m;
        m.raw_helpers.push_back(v);
        m.raw_symbols.push_back(plan.helper_symbols(v, nodes.at(v)));
        r.downloads.emplace_back(v, Rational(static_cast<std::int64_t>(m.raw_symbols.back().size())));
        if (auto it = inbox.find(v); it != inbox.end()) {
            merge(m, std::move(it->second));
            inbox.erase(it);
        }
        if (is_ip(scheme) && (tree.in_j(v) || (greedy_ip && m.size(l) > l))) {
            add_into(m.partial, plan.combine(m.raw_helpers, m.raw_symbols));
            m.raw_helpers.clear();
            m.raw_symbols.clear();
        }
        r.edges.push_back({v, tree.parent[v], Rational(m.size(l))});
        merge(inbox[tree.parent[v]], std::move(m));
    }
    Message& top = inbox[tree.root];
    std::optional<Vec> acc = top.partial;
    if (!top.raw_helpers.empty()) add_into(acc, plan.combine(top.raw_helpers, top.raw_symbols));
    restored = acc ? *acc : Vec(static_cast<std::size_t>(l), 0);
    std::sort(r.edges.begin(), r.edges.end(), [](const EdgeLoad& a, const EdgeLoad& b) { return a.from < b.from; });
    std::sort(r.downloads.begin(), r.downloads.end());
    r.total = r.edge_sum();
    return r;
}

namespace {

bool same_counts(const BandwidthReport& a, const BandwidthReport& b) {
    if (a.total != b.total || a.edges.size() != b.edges.size() || a.downloads != b.downloads) return false;
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (a.edges[i].from != b.edges[i].from || a.edges[i].to != b.edges[i].to ||
            a.edges[i].symbols != b.edges[i].symbols)
            return false;
    return true;
}

SimulationResult simulate_with_plan(const RepairTree& tree, const codes::IpMatrixSet& ip, const NodeContents& nodes,
                                    std::int64_t l, Scheme scheme, bool greedy_ip, const NonuniformPlan& plan) {
    SimulationResult out;
    out.measured = run_repair(tree, ip, nodes, scheme, l, greedy_ip, out.content);
    const int d = tree.d();
    const int k = tree.k;
    switch (scheme) {
        case Scheme::af_u:
            out.formula = lambda_af_uniform(tree, Rational(l), d, k);
            break;
        case Scheme::ip_u:
            out.formula = lambda_ip_uniform(tree, Rational(l), d, k);
            break;
        case Scheme::af_nu:
            out.formula = lambda_af_nonuniform(tree, plan);
            break;
        case Scheme::ip_nu:
            out.formula = lambda_ip_nonuniform(tree, Rational(l), d, k, plan, greedy_ip);
            break;
    }
    out.restored = out.content == nodes.at(tree.root);
    out.counts_match = same_counts(out.measured, out.formula);
    return out;
}

void check_inputs(const StorageGraph& g, int n, int d, std::span<const int> D, const NodeContents& nodes) {
    if (n != g.n()) throw ParameterError("code length does not match the graph");
    if (static_cast<int>(D.size()) != d) throw ParameterError("the code repairs from exactly d helpers");
    if (static_cast<int>(nodes.size()) != n) throw ParameterError("one content vector per node required");
}

}  // namespace

SimulationResult simulate_repair(const StorageGraph& g, const codes::LinearCode& code, const NodeContents& nodes, int f,
                                 std::span<const int> D, Scheme scheme, bool greedy_ip) {
    check_inputs(g, code.n(), code.d(), D, nodes);
    const auto tree = build_repair_tree(g, f, D, code.k());
    const auto ip = codes::derive_ip_matrices(code, f, tree.helpers);
    const Rational beta(code.l(), code.d() - code.k() + 1);
    for (int b : ip.downloads())
        if (Rational(b) != beta) throw ParameterError("code does not download l/(d-k+1) symbols from every helper");
    return simulate_with_plan(tree, ip, nodes, code.l(), scheme, greedy_ip, uniform_plan(tree, Rational(code.l())));
}

SimulationResult simulate_repair(const StorageGraph& g, const stacking::StackedCode& code, const NodeContents& nodes,
                                 int f, std::span<const int> D, Scheme scheme, bool greedy_ip) {
    const auto& spec = code.spec();
    check_inputs(g, spec.n, spec.d, D, nodes);
    const auto tree = build_repair_tree(g, f, D, spec.k);
    const auto ip = code.repair_plan(f, tree.helpers);
    std::map<int, std::int64_t> dl;
    const auto downloads = ip.downloads();
    for (std::size_t i = 0; i < tree.helpers.size(); ++i) dl[tree.helpers[i]] = downloads[i];
    std::vector<Rational> layer_beta;
    for (const auto& layer : tree.layers) {
        for (int v : layer)
            if (dl[v] != dl[layer.front()])
                throw ParameterError("stacked download profile is not constant on layer " +
                                     std::to_string(layer_beta.size() + 1));
        layer_beta.emplace_back(dl[layer.front()]);
    }
    const auto plan = make_plan(tree, Rational(spec.l), layer_beta);
    if (!is_nonuniform(scheme)) {
        const Rational beta(spec.l, spec.d - spec.k + 1);
        for (const auto& b : layer_beta)
            if (b != beta) throw ParameterError("uniform schemes need uniform downloads");
    }
    return simulate_with_plan(tree, ip, nodes, spec.l, scheme, greedy_ip, plan);
}

}  // namespace grc::graphrepair
