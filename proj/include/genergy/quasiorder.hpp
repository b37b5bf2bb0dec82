#pragma once

#include "genergy/charpoly.hpp"
#include "genergy/graph.hpp"

namespace genergy {

enum class Relation { Equal, StrictlyLess, StrictlyGreater, Incomparable };

const char* relation_name(Relation r);

// Outcome of the coefficientwise b-sequence comparison.  Incomparable is a
// first-class result: it is exactly the regime the exception classes live in
// and must be surfaced, not treated as an error.
struct QuasiOrd {
  Relation relation;
  std::vector<int> witness_indices;  // indices where strictness or conflict occurs
  int first_witness() const { return witness_indices.empty() ? -1 : witness_indices.front(); }
};

QuasiOrd compare_bseq(const BSeq& b1, const BSeq& b2);
// Both graphs must be bipartite and of equal order.
QuasiOrd compare(const Graph& g1, const Graph& g2);

// g1 <= g2 in the quasi-order (Equal or StrictlyLess).
inline bool preceq(const QuasiOrd& q) {
  return q.relation == Relation::Equal || q.relation == Relation::StrictlyLess;
}

// The alternating path chain
//   P_n > P_2 u P_{n-2} > P_4 u P_{n-4} > ... > P_{2k} u P_{n-2k}
//       > P_{2k+1} u P_{n-2k-1} > P_{2k-1} u P_{n-2k+1} > ... > P_3 u P_{n-3} > P_1 u P_{n-1}
// with k = floor(n/4).  Where the pattern repeats a partition the pair
// collapses to Equal; every other consecutive pair must be strictly greater.
struct PathChainStep {
  std::vector<int> left, right;  // path orders of both sides
  Relation relation;
  bool ok;  // StrictlyGreater, or Equal on a repeated partition
};
struct PathChainReport {
  int n = 0;
  std::vector<PathChainStep> steps;
  bool all_ok = true;
};
PathChainReport verify_path_chain(int n);

// Checks G0 u G1 <= G0 u G2 given g1 <= g2 (all bipartite, g1/g2 equal
// order).  Always true by the union product; a false return is a bug trap.
bool union_monotonicity_check(const Graph& g0, const Graph& g1, const Graph& g2);

}  // namespace genergy
