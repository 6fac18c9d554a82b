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

#include "grc/graph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <random>
#include <sstream>

#include "grc/error.hpp"

namespace grc::graph {

StorageGraph::StorageGraph(int n) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

void StorageGraph::check_vertex(int v) const {
    if (v < 0 || v >= n()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

std::size_t StorageGraph::edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adj_) s += a.size();
    return s / 2;
}

void StorageGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self loops are not allowed");
    auto insert = [](std::vector<int>& a, int x) {
        auto it = std::lower_bound(a.begin(), a.end(), x);
        if (it == a.end() || *it != x) a.insert(it, x);
    };
    insert(adj_[u], v);
    insert(adj_[v], u);
}

bool StorageGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& StorageGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> StorageGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool StorageGraph::connected() const {
    if (n() == 0) return true;
    return static_cast<int>(bfs_order(*this, 0).size()) == n();
}

nlohmann::json StorageGraph::to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (auto [u, v] : edges()) e.push_back({u, v});
    return {{"n", n()}, {"edges", e}};
}

StorageGraph StorageGraph::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
        !j["edges"].is_array())
        throw GraphError("graph JSON needs an integer \"n\" and an \"edges\" array");
    StorageGraph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw GraphError("each edge must be a pair of vertex indices");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

StorageGraph StorageGraph::complete(int n) {
    StorageGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

StorageGraph StorageGraph::cycle(int n) {
    if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
    StorageGraph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

StorageGraph StorageGraph::path(int n) {
    StorageGraph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

StorageGraph StorageGraph::star(int n) {
    StorageGraph g(n);
    for (int u = 1; u < n; ++u) g.add_edge(0, u);
    return g;
}

StorageGraph StorageGraph::petersen() {
    StorageGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

StorageGraph StorageGraph::tree_ball(int t, int radius) {
    if (t < 1 || radius < 0) throw GraphError("tree ball needs t >= 1 and radius >= 0");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> frontier{0};
    int next = 1;
    for (int r = 0; r < radius; ++r) {
        std::vector<int> nf;
        for (int v : frontier) {
            const int kids = v == 0 ? t : t - 1;
            for (int c = 0; c < kids; ++c) {
                edges.emplace_back(v, next);
                nf.push_back(next++);
            }
        }
        frontier = std::move(nf);
    }
    StorageGraph g(next);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

StorageGraph StorageGraph::erdos_renyi(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw GraphError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    StorageGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) g.add_edge(u, v);
        }
    return g;
}

namespace {

std::map<std::string, std::string> parse_args(const std::string& body, std::vector<std::string>& positional) {
    std::map<std::string, std::string> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            positional.push_back(item);
        else
            out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

long long to_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw GraphError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw GraphError("expected an integer, got '" + s + "'");
    return v;
}

double to_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw GraphError("expected a number, got '" + s + "'");
    }
    if (pos != s.size()) throw GraphError("expected a number, got '" + s + "'");
    return v;
}

}  // namespace

StorageGraph parse_graph(const std::string& spec) {
    if (spec.empty()) throw GraphError("empty graph specification");
    if (spec.front() == '{') {
        try {
            return StorageGraph::from_json(nlohmann::json::parse(spec));
        } catch (const nlohmann::json::exception& e) {
            throw GraphError(std::string("bad graph JSON: ") + e.what());
        }
    }
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<std::string> pos;
    const auto args = colon == std::string::npos ? std::map<std::string, std::string>{}
                                                 : parse_args(spec.substr(colon + 1), pos);
    auto get = [&](const std::string& key, std::size_t index) -> std::string {
        if (auto it = args.find(key); it != args.end()) return it->second;
        if (index < pos.size()) return pos[index];
        throw GraphError("graph '" + name + "' needs parameter " + key);
    };
    if (name == "petersen") return StorageGraph::petersen();
    if (name == "complete") return StorageGraph::complete(static_cast<int>(to_int(get("n", 0))));
    if (name == "cycle") return StorageGraph::cycle(static_cast<int>(to_int(get("n", 0))));
    if (name == "path") return StorageGraph::path(static_cast<int>(to_int(get("n", 0))));
    if (name == "star") return StorageGraph::star(static_cast<int>(to_int(get("n", 0))));
    if (name == "tree")
        return StorageGraph::tree_ball(static_cast<int>(to_int(get("t", 0))), static_cast<int>(to_int(get("radius", 1))));
    if (name == "er")
        return StorageGraph::erdos_renyi(static_cast<int>(to_int(get("n", 0))), to_double(get("p", 1)),
                                         static_cast<std::uint64_t>(to_int(get("seed", 2))));
    std::ifstream in(spec);
    if (!in) throw GraphError("unknown graph '" + spec + "' (not a named family or readable file)");
    try {
        return StorageGraph::from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("bad graph JSON in ") + spec + ": " + e.what());
    }
}

std::vector<int> distances(const StorageGraph& g, int source) {
    if (source < 0 || source >= g.n()) throw GraphError("source vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

std::vector<int> bfs_order(const StorageGraph& g, int source) {
    if (source < 0 || source >= g.n()) throw GraphError("source vertex out of range");
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> order{source};
    seen[source] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int v : g.neighbors(order[i]))
            if (!seen[v]) {
                seen[v] = 1;
                order.push_back(v);
            }
    return order;
}

std::vector<int> nearest_helpers(const StorageGraph& g, int f, int d) {
    const auto order = bfs_order(g, f);
    if (d < 0 || static_cast<int>(order.size()) - 1 < d)
        throw GraphError("fewer than d vertices are reachable from the failed node");
    return {order.begin() + 1, order.begin() + 1 + d};
}

}  // namespace grc::graph
