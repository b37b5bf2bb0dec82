#pragma once

#include "genergy/graph.hpp"
#include "genergy/intpoly.hpp"

namespace genergy {

// det(lambda I - A), Faddeev-LeVerrier over exact integers.
IntPoly charpoly_oracle(const Graph& g, int limit = 64);

// Edge/pendant deletion recursion:
//   phi(G) = phi(G-uv) - phi(G-u-v) - 2 sum_{C in cycles(uv)} phi(G-C)
//   phi(G) = lambda phi(G-v) - phi(G-u-v)   for a pendant edge uv
// Components are split multiplicatively; results memoized on canonical form
// (per component, skipped above 24 vertices).
IntPoly charpoly_recursive(const Graph& g);

// b_{2i} = (-1)^i a_{2i}; validates that odd coefficients vanish and every
// b_{2i} >= 0 (throws NotBipartitePolynomial otherwise).
BSeq b_sequence(const IntPoly& p, bool bipartite_witness);
// Convenience: checks bipartiteness, runs the oracle, extracts b.
BSeq b_sequence(const Graph& g);

// One application of the b-coefficient recursion at edge uv:
//   b_{2i}(G) = b_{2i}(G-uv) + b_{2i-2}(G-u-v)
//              + 2 sum_{C_l} (-1)^{1+l/2} b_{2i-l}(G-C_l)
// Returns the subgraphs, signs, and the recombined sequence.
struct BRecursionStep {
  Graph minus_edge;
  Graph minus_ends;
  struct CycleTerm {
    std::vector<int> cycle;
    Graph rest;  // G - V(C)
    int sign;    // (-1)^{1+l/2}
  };
  std::vector<CycleTerm> cycle_terms;
  BSeq recombined;
};
BRecursionStep b_recursion_step(const Graph& g, int u, int v);

// Independent Sachs-figure route to the b-coefficients of a bipartite
// graph: sum over vertex-disjoint unions of edges and even cycles, each
// cycle of length l weighted 2*(-1)^{1+l/2}.  For a forest this is plain
// matching counting.  Exponential; capped at 20 vertices.
BSeq matching_count_oracle(const Graph& g, int limit = 20);

}  // namespace genergy
