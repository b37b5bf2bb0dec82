#pragma once

#include "genergy/graph.hpp"

namespace genergy {

// Exact canonical form: two graphs receive equal strings iff they are
// isomorphic (labels are provenance only and ignored).  Implemented by
// equitable-partition refinement plus exhaustive backtracking over vertex
// individualizations; exact, not hash-based.  Throws TooLarge beyond limit.
std::string canonical_form(const Graph& g, int limit = 32);

bool isomorphic(const Graph& a, const Graph& b, int limit = 32);

// perm[v] = new index of vertex v.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace genergy
