// Copyright 2026 The qisd authors
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

#include <optional>
#include <vector>

namespace qisd {

/// Undirected multigraph with pairwise-distinct edge weights. Weight order
/// encodes the time order of two-qubit gates in the circuit the graph
/// abstracts; only the order matters.
struct WeightedGraph {
  struct Edge {
    int u = 0, v = 0;
    double w = 0;
  };
  int vertices = 0;
  std::vector<Edge> edges;

  void add_edge(int u, int v, double w);
  /// Validates vertex bounds and weight distinctness; throws otherwise.
  void validate() const;
};

/// Edge e is useful w.r.t. (a, b) when strictly-increasing-weight paths,
/// starting with w(e), run from both endpoints of e into {a, b}. An
/// endpoint already in {a, b} satisfies its direction (t = 0); parallel
/// edges are distinct traversable edges.
bool is_useful_edge(const WeightedGraph& g, std::size_t edge_index, int a,
                    int b);

/// Good graph: every vertex pair is connected by a path made entirely of
/// edges useful with respect to that pair.
bool is_good_graph(const WeightedGraph& g);

/// Edges of a useful path between (a, b), if one exists (diagnostic).
std::optional<std::vector<std::size_t>> useful_path(const WeightedGraph& g,
                                                    int a, int b);

/// Exhaustive search over multigraphs (parallel multiplicity capped at 2)
/// and all weight orderings: minimum edge count of any good graph on n
/// vertices with at most max_edges edges, or nullopt when none exists in
/// that range. Brute-force scale: 3 <= n <= 5.
std::optional<int> min_good_graph_edges(int n, int max_edges);

/// A witness graph achieving the minimum (same search).
std::optional<WeightedGraph> min_good_graph_witness(int n, int max_edges);

}  // namespace qisd
