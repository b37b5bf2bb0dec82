#pragma once

#include "genergy/common.hpp"

#include <string>
#include <utility>
#include <vector>

namespace genergy {

// Labeled undirected simple graph, adjacency-set representation.
// Invariants: symmetric adjacency, no loops, no duplicate edges,
// vertex indices dense in [0, n).  All operations below are pure:
// they return fresh graphs and never mutate their inputs.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::vector<std::string> labels;    // optional provenance tags (empty or size n)

  Graph() = default;
  explicit Graph(int order);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  void check_vertex(int v) const;
  // Asserts the representation invariants; throws Errc::Internal on violation.
  void check_invariants() const;
};

Graph delete_edge(const Graph& g, int u, int v);
Graph delete_vertices(const Graph& g, const std::vector<int>& vs);
Graph disjoint_union(const Graph& g1, const Graph& g2);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
// Returns true iff g has no odd cycle; if coloring != nullptr it receives a
// 2-coloring witness (values 0/1) when bipartite.
bool is_bipartite(const Graph& g, std::vector<int>* coloring = nullptr);
// |E| - |V| + #components
int cyclomatic_number(const Graph& g);

// A set of simple cycles, each stored as its vertex sequence (the closing
// edge back to the first vertex is implicit).
struct CycleSet {
  std::vector<std::vector<int>> cycles;
  std::size_t size() const { return cycles.size(); }
};

// All simple cycles through the edge uv, found by DFS over simple paths
// from u to v in g - uv.  Inputs here have cyclomatic number <= 3, so the
// enumeration is small; no attempt is made to bound it otherwise.
CycleSet find_cycles_through_edge(const Graph& g, int u, int v);
// All simple cycles of g, deduplicated by edge set.
CycleSet all_cycles(const Graph& g);

// Iteratively strips degree-<=1 vertices; returns the induced subgraph.
Graph two_core(const Graph& g);

// graph6 (de-facto standard ASCII encoding, n <= 62 handled with the
// single-byte header, larger n with the 4-byte form).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// {"n":..., "edges":[[u,v],...], "labels":{"0":"...",...}}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace genergy
