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

#include "qisd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qisd {

void WeightedGraph::add_edge(int u, int v, double w) {
  edges.push_back({u, v, w});
}

void WeightedGraph::validate() const {
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices ||
        e.u == e.v)
      throw std::invalid_argument("edge endpoints out of range");
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i].w == edges[j].w)
        throw std::invalid_argument("edge weights must be distinct");
}

namespace {

// strictly-increasing continuation from v (last weight wmin) into {a, b}
bool reach(const WeightedGraph& g, int v, double wmin, int a, int b) {
  if (v == a || v == b) return true;
  for (const auto& e : g.edges) {
    if (e.w <= wmin) continue;
    if (e.u == v && reach(g, e.v, e.w, a, b)) return true;
    if (e.v == v && reach(g, e.u, e.w, a, b)) return true;
  }
  return false;
}

}  // namespace

bool is_useful_edge(const WeightedGraph& g, std::size_t edge_index, int a,
                    int b) {
  const auto& e = g.edges.at(edge_index);
  return reach(g, e.u, e.w, a, b) && reach(g, e.v, e.w, a, b);
}

std::optional<std::vector<std::size_t>> useful_path(const WeightedGraph& g,
                                                    int a, int b) {
  std::vector<std::size_t> useful;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (is_useful_edge(g, i, a, b)) useful.push_back(i);
  // breadth-first search over useful edges, tracking the path
  std::vector<int> prev_vertex(g.vertices, -1);
  std::vector<std::size_t> prev_edge(g.vertices, SIZE_MAX);
  std::vector<bool> seen(g.vertices, false);
  std::vector<int> queue{a};
  seen[a] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    if (v == b) break;
    for (std::size_t ei : useful) {
      const auto& e = g.edges[ei];
      int to = -1;
      if (e.u == v) to = e.v;
      if (e.v == v) to = e.u;
      if (to < 0 || seen[to]) continue;
      seen[to] = true;
      prev_vertex[to] = v;
      prev_edge[to] = ei;
      queue.push_back(to);
    }
  }
  if (!seen[b]) return std::nullopt;
  std::vector<std::size_t> path;
  for (int v = b; v != a; v = prev_vertex[v]) path.push_back(prev_edge[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_good_graph(const WeightedGraph& g) {
  for (int a = 0; a < g.vertices; ++a)
    for (int b = a + 1; b < g.vertices; ++b)
      if (!useful_path(g, a, b).has_value()) return false;
  return true;
}

namespace {

struct Search {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  bool try_edge_count(int m, WeightedGraph* witness) {
    // multisets of pairs with multiplicity <= 2
    std::vector<int> combo;
    return enumerate(0, m, combo, witness);
  }

  bool enumerate(int start, int remaining, std::vector<int>& combo,
                 WeightedGraph* witness) {
    if (remaining == 0) {
      return check_combo(combo, witness);
    }
    for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
      for (int mult = 1; mult <= 2 && mult <= remaining; ++mult) {
        for (int k = 0; k < mult; ++k) combo.push_back(i);
        if (enumerate(i + 1, remaining - mult, combo, witness)) return true;
        for (int k = 0; k < mult; ++k) combo.pop_back();
      }
    }
    return false;
  }

  bool check_combo(const std::vector<int>& combo, WeightedGraph* witness) {
    // all vertices covered
    std::vector<bool> seen(n, false);
    for (int i : combo) {
      seen[pairs[i].first] = true;
      seen[pairs[i].second] = true;
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      return false;
    // connectivity pre-filter
    {
      std::vector<int> comp(n);
      std::iota(comp.begin(), comp.end(), 0);
      const std::function<int(int)> find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
      };
      for (int i : combo) comp[find(pairs[i].first)] = find(pairs[i].second);
      const int root = find(0);
      for (int v = 1; v < n; ++v)
        if (find(v) != root) return false;
    }
    const int m = static_cast<int>(combo.size());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      WeightedGraph g;
      g.vertices = n;
      for (int k = 0; k < m; ++k)
        g.add_edge(pairs[combo[k]].first, pairs[combo[k]].second, perm[k]);
      if (is_good_graph(g)) {
        if (witness != nullptr) *witness = g;
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }
};

}  // namespace

std::optional<WeightedGraph> min_good_graph_witness(int n, int max_edges) {
  if (n < 3 || n > 5) throw std::invalid_argument("n out of brute-force range");
  Search s;
  s.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) s.pairs.emplace_back(u, v);
  for (int m = n - 1; m <= max_edges; ++m) {
    WeightedGraph witness;
    if (s.try_edge_count(m, &witness)) return witness;
  }
  return std::nullopt;
}

std::optional<int> min_good_graph_edges(int n, int max_edges) {
  const auto witness = min_good_graph_witness(n, max_edges);
  if (!witness.has_value()) return std::nullopt;
  return static_cast<int>(witness->edges.size());
}

}  // namespace qisd
