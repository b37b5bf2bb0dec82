#pragma once

#include "genergy/families.hpp"

#include <array>
#include <optional>

namespace genergy {

// True iff g contains three pairwise vertex-disjoint cycles, decided exactly
// by enumerating all simple cycles (a tricyclic graph has at most 7) and
// scanning triples.
bool has_three_disjoint_cycles(const Graph& g);

// Every valid Theta_I(n;a,b,k;l1,l2;lc) and Theta_II(n;a,b,k;l1,l2,l3) tuple
// on n vertices, deduplicated up to the parameter symmetries (end swap for
// Theta_I, arm permutations for Theta_II) with a final canonical-form pass as
// the safety net.  Optional filter restricts the sorted cycle-length triple.
// Returns an empty list below the minimum order 13.
std::vector<FamilySpec> enumerate_central(int n, std::optional<std::array<int, 3>> cycle_filter = {});

// Every connected bipartite graph on n vertices with n+2 edges containing
// three vertex-disjoint cycles, one representative per isomorphism class;
// grown from central structures by attaching pendant vertices layer by
// layer.  Hard-capped (TooLarge) above `cap`.
std::vector<Graph> enumerate_full(int n, int cap = 16);

// Helper shared with tests: one pendant-growth layer with isomorphism
// rejection (every graph on k+1 vertices whose non-core part is a forest
// arises from a k-vertex one by adding a leaf).
std::vector<Graph> grow_pendant_layer(const std::vector<Graph>& layer);

}  // namespace genergy
