#pragma once

#include "genergy/graph.hpp"

#include <array>
#include <optional>

namespace genergy {

enum class FamilyKind { Path, Cycle, Star, PnA, PnAB, RAB, Pn666, ThetaI, ThetaII };

const char* family_kind_name(FamilyKind k);

// Parameter record for every named family.  Unused fields stay 0.
//   theta_i (n;a,b,k;l1,l2;lc): chain C_a -path(l1)- C_b -path(l2)- C_k,
//     lc = vertex count of the smaller C_b arc between the attachments
//     (lc = 1 means both paths attach at the same vertex).
//   theta_ii (n;a,b,k;l1,l2,l3): three cycles joined by paths of l1,l2,l3
//     vertices to a common center vertex.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int n = 0, a = 0, b = 0, k = 0, l1 = 0, l2 = 0, l3 = 0, lc = 0;

  bool operator==(const FamilySpec& o) const = default;

  // Compact string form, e.g. "theta2:20:6,6,6:3,2,2".
  std::string to_string() const;
  static FamilySpec parse(const std::string& text);
  std::string to_json() const;
};

Graph build(const FamilySpec& spec);

Graph path(int n);
Graph cycle(int n);
Graph star(int n);

// Cycle C_a with a pendant path, n vertices total (n = a gives the bare cycle).
Graph p_n_a(int n, int a);
// Cycles C_a and C_b joined by a path of order n-a-b+2 (order 1: the cycles
// share a single vertex).
Graph p_n_ab(int n, int a, int b);
// Two cycles connected by an edge (= P^{a,b}_{a+b}).
Graph r_ab(int a, int b);
// a,b >= 10 and a = b = 2 (mod 4): the constraint attached to R_{a,b}.
bool is_r_ab_exceptional(int a, int b);
// Three hexagons on a path: two attached to one endpoint, one to the other.
Graph p_n_666(int n);

// Builders exposing vertex landmarks, used by the verification harness to
// delete the exact edges the case analyses name.
struct ThetaIBuild {
  Graph g;
  FamilySpec spec;
  std::vector<int> ring_a, ring_b, ring_k;  // ring order
  std::vector<int> path1;                   // u1 ... u2 (l1 vertices)
  std::vector<int> path2;                   // v1 ... v2 (l2 vertices)
  int u1, u2, v1, v2;
};
ThetaIBuild theta_i_build(int n, int a, int b, int k, int l1, int l2, int lc);
Graph theta_i(int n, int a, int b, int k, int l1, int l2, int lc);

struct ThetaIIBuild {
  Graph g;
  FamilySpec spec;
  std::array<std::vector<int>, 3> rings;
  std::array<std::vector<int>, 3> paths;  // attach ... center (l_i vertices)
  std::array<int, 3> attach;
  int center;
};
ThetaIIBuild theta_ii_build(int n, int a, int b, int k, int l1, int l2, int l3);
Graph theta_ii(int n, int a, int b, int k, int l1, int l2, int l3);

// The nine exceptional parameter families.  Matching is parameter-based and
// normalizes orientation: both end-swaps of a Theta_I tuple and all arm
// permutations of a Theta_II tuple are tested.
enum class GammaForm { G1_i, G1_ii, G1_iii, G1_iv, G2_i, G2_ii, G2_iii, G2_iv, G2_v };

const char* gamma_form_name(GammaForm f);

struct GammaClass {
  std::vector<GammaForm> forms;  // all matched forms, sorted
  bool in_gamma() const { return !forms.empty(); }
  std::string to_string() const;
};

GammaClass gamma_classify(const FamilySpec& spec);
// Graph input is first matched to a Theta spec via structure recognition;
// throws NotCentralStructure if it is not a tree-free Theta shape.
GammaClass gamma_classify(const Graph& g);

// Recognizes a tree-free central structure (Theta_I or Theta_II) and returns
// its parameter tuple; throws NotCentralStructure otherwise.
FamilySpec recognize_central(const Graph& g);

}  // namespace genergy
