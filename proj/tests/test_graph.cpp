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

#include <algorithm>

#include "grc/error.hpp"
#include "grc/graph/graph.hpp"

using namespace grc;
using namespace grc::graph;

TEST_CASE("named families") {
    const auto p = StorageGraph::petersen();
    CHECK(p.n() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.neighbors(v).size() == 3);
    const auto dist = distances(p, 0);
    CHECK(*std::max_element(dist.begin(), dist.end()) == 2);

    const auto t = StorageGraph::tree_ball(3, 3);
    CHECK(t.n() == 22);
    CHECK(t.edge_count() == 21);
    CHECK(t.connected());

    CHECK(StorageGraph::complete(6).edge_count() == 15);
    CHECK(StorageGraph::cycle(5).edge_count() == 5);
    CHECK(StorageGraph::path(4).edge_count() == 3);
    CHECK(StorageGraph::star(5).neighbors(0).size() == 4);
    CHECK_THROWS_AS(StorageGraph::cycle(2), GraphError);
}

TEST_CASE("Erdos-Renyi graphs are reproducible") {
    const auto a = StorageGraph::erdos_renyi(60, 0.1, 7);
    const auto b = StorageGraph::erdos_renyi(60, 0.1, 7);
    const auto c = StorageGraph::erdos_renyi(60, 0.1, 8);
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() != c.edges());
    CHECK(StorageGraph::erdos_renyi(10, 0.0, 1).edge_count() == 0);
    CHECK(StorageGraph::erdos_renyi(10, 1.0, 1).edge_count() == 45);
}

TEST_CASE("parse_graph shorthands and JSON") {
    CHECK(parse_graph("petersen").edge_count() == 15);
    CHECK(parse_graph("complete:10").edge_count() == 45);
    CHECK(parse_graph("cycle:n=7").edge_count() == 7);
    CHECK(parse_graph("tree:t=3,radius=2").n() == 10);
    CHECK(parse_graph("er:n=100,p=0.1,seed=7").edges() == StorageGraph::erdos_renyi(100, 0.1, 7).edges());
    const auto g = parse_graph(R"({"n": 4, "edges": [[0,1],[1,2],[2,3]]})");
    CHECK(g.edge_count() == 3);
    CHECK(StorageGraph::from_json(g.to_json()).edges() == g.edges());
    CHECK_THROWS_AS(parse_graph("nosuchfamily"), GraphError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,0]]})"), GraphError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,5]]})"), GraphError);
    CHECK_THROWS_AS(parse_graph("complete:x"), GraphError);
}

TEST_CASE("BFS order and nearest helpers") {
    const auto g = StorageGraph::tree_ball(3, 3);
    const auto h = nearest_helpers(g, 0, 13);
    CHECK(h.size() == 13);
    const auto dist = distances(g, 0);
    CHECK(std::count_if(h.begin(), h.end(), [&](int v) { return dist[v] == 3; }) == 4);
    CHECK_THROWS_AS(nearest_helpers(StorageGraph(3), 0, 1), GraphError);
}
