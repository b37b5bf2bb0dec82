#include "doctest.h"

#include <numeric>
#include <random>

#include "genergy/canon.hpp"
#include "genergy/energy.hpp"
#include "genergy/families.hpp"
#include "genergy/quasiorder.hpp"

using namespace genergy;

TEST_CASE("compare basics") {
  QuasiOrd q = compare(disjoint_union(path(2), path(2)), path(4));
  CHECK(q.relation == Relation::StrictlyLess);  // b [1,2,1] vs [1,3,1]
  REQUIRE(q.witness_indices.size() == 1);
  CHECK(q.witness_indices[0] == 1);

  Graph g = p_n_666(20);
  CHECK(compare(g, g).relation == Relation::Equal);

  QuasiOrd fixed = compare(disjoint_union(cycle(6), path(2)), path(8));
  // regression fixture, computed exactly: b = [1,7,15,13,4] vs [1,7,15,10,1]
  CHECK(fixed.relation == Relation::StrictlyGreater);
  CHECK(fixed.first_witness() == 3);

  CHECK_THROWS_AS(compare(path(3), path(4)), Error);
  CHECK_THROWS_AS(compare(cycle(5), p_n_a(5, 3)), Error);
}

TEST_CASE("compare is isomorphism invariant") {
  std::mt19937 rng(8);
  Graph a = theta_ii(20, 6, 6, 6, 3, 2, 2);
  Graph b = p_n_666(20);
  QuasiOrd ref = compare(a, b);
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(compare(relabel(a, perm), b).relation == ref.relation);
  }
}

TEST_CASE("path chain") {
  PathChainReport r4 = verify_path_chain(4);
  CHECK(r4.all_ok);
  REQUIRE(r4.steps.size() == 3);
  CHECK(r4.steps[0].relation == Relation::StrictlyGreater);
  CHECK(r4.steps[1].relation == Relation::StrictlyGreater);
  CHECK(r4.steps[2].relation == Relation::Equal);  // P_3 u P_1 repeats as P_1 u P_3

  PathChainReport r8 = verify_path_chain(8);
  CHECK(r8.all_ok);
  REQUIRE(r8.steps.size() == 5);
  CHECK(r8.steps[0].left == std::vector<int>{8});
  CHECK(r8.steps[2].right == std::vector<int>{5, 3});

  CHECK(verify_path_chain(30).all_ok);
  CHECK_THROWS_AS(verify_path_chain(3), Error);
}

TEST_CASE("union monotonicity") {
  CHECK(union_monotonicity_check(cycle(6), disjoint_union(path(2), path(2)), path(4)));
  CHECK(union_monotonicity_check(Graph(0), disjoint_union(path(2), path(2)), path(4)));
  // P^4_6 < C_6 (the Subcase 2.3 kernel); unioning preserves it
  CHECK(union_monotonicity_check(p_n_a(8, 4), p_n_a(6, 4), cycle(6)));
  // precondition violated: P^4_5 and P_5 are incomparable
  CHECK_THROWS_AS(union_monotonicity_check(path(3), p_n_a(5, 4), path(5)), Error);
}

TEST_CASE("transitivity and reflexivity on sampled triples") {
  std::vector<Graph> chain{path(12),
                           disjoint_union(path(2), path(10)),
                           disjoint_union(path(4), path(8)),
                           disjoint_union(path(6), path(6)),
                           disjoint_union(path(1), path(11))};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i; j < chain.size(); ++j) {
      QuasiOrd ij = compare(chain[i], chain[j]);
      for (std::size_t k = j; k < chain.size(); ++k) {
        QuasiOrd jk = compare(chain[j], chain[k]);
        QuasiOrd ik = compare(chain[i], chain[k]);
        if (preceq(ij) && preceq(jk)) CHECK(preceq(ik));
      }
    }
}

TEST_CASE("quasi-order soundness against certified energies") {
  // strict b-domination must put the certified enclosures in the same order
  std::vector<std::pair<Graph, Graph>> pairs;
  pairs.emplace_back(disjoint_union(path(2), path(2)), path(4));
  pairs.emplace_back(theta_i(20, 6, 6, 6, 4, 2, 1), theta_i(20, 6, 6, 6, 4, 2, 2));
  pairs.emplace_back(p_n_a(6, 4), cycle(6));
  for (auto& [g1, g2] : pairs) {
    QuasiOrd q = compare(g1, g2);
    REQUIRE(q.relation == Relation::StrictlyLess);
    CHECK(energy_compare(g1, g2, 1e-7) == EnergyOrder::Less);
  }
}
