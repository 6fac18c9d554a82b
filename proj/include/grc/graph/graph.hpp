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
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace grc::graph {

/// Simple undirected graph on vertices 0..n-1.
class StorageGraph {
public:
    StorageGraph() = default;
    explicit StorageGraph(int n);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    /// Throws GraphError on self loops and out-of-range endpoints; repeated
    /// edges are ignored.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    /// Sorted ascending.
    const std::vector<int>& neighbors(int v) const;
    /// Each edge once as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    bool connected() const;

    nlohmann::json to_json() const;
    static StorageGraph from_json(const nlohmann::json& j);

    static StorageGraph complete(int n);
    static StorageGraph cycle(int n);
    static StorageGraph path(int n);
    static StorageGraph star(int n);
    static StorageGraph petersen();
    /// Ball of the given radius in the infinite t-regular tree, root 0,
    /// vertices numbered in BFS order.
    static StorageGraph tree_ball(int t, int radius);
    /// G(n, p): each pair u < v, in lexicographic order, is kept when a
    /// 53-bit uniform draw from mt19937_64(seed) falls below p.
    static StorageGraph erdos_renyi(int n, double p, std::uint64_t seed);

private:
    void check_vertex(int v) const;
    std::vector<std::vector<int>> adj_;
};

/// Accepts "petersen", "complete:10", "cycle:8", "path:5", "star:6",
/// "tree:t=3,radius=3", "er:n=100,p=0.1,seed=7", inline JSON, or a path to a
/// JSON file.
StorageGraph parse_graph(const std::string& spec);

/// Hop distances from `source` (-1 when unreachable).
std::vector<int> distances(const StorageGraph& g, int source);
/// Vertices reachable from `source` in BFS order, ties by ascending index.
std::vector<int> bfs_order(const StorageGraph& g, int source);
/// The first d vertices after `f` in BFS order.
std::vector<int> nearest_helpers(const StorageGraph& g, int f, int d);

}  // namespace grc::graph
