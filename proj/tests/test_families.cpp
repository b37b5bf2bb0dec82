#include "doctest.h"

#include <set>

#include "genergy/canon.hpp"
#include "genergy/charpoly.hpp"
#include "genergy/enumerate.hpp"
#include "genergy/families.hpp"

using namespace genergy;

TEST_CASE("basic families") {
  CHECK(path(1).n == 1);
  CHECK(path(1).edge_count() == 0);
  Graph c6 = cycle(6);
  CHECK(c6.edge_count() == 6);
  CHECK(is_bipartite(c6));
  Graph s5 = star(5);
  std::multiset<int> degs;
  for (int v = 0; v < 5; ++v) degs.insert(s5.degree(v));
  CHECK(degs == std::multiset<int>{4, 1, 1, 1, 1});
  CHECK_THROWS_AS(path(0), Error);
  CHECK_THROWS_AS(cycle(2), Error);
}

TEST_CASE("p_n_a") {
  CHECK(isomorphic(p_n_a(6, 6), cycle(6)));
  Graph g = p_n_a(10, 6);
  CHECK(g.n == 10);
  CHECK(g.edge_count() == 10);
  auto cycles = all_cycles(g);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles.cycles[0].size() == 6);
  CHECK_THROWS_AS(p_n_a(5, 6), Error);
}

TEST_CASE("p_n_ab") {
  Graph g = p_n_ab(14, 6, 6);
  CHECK(g.n == 14);
  CHECK(cyclomatic_number(g) == 2);
  Graph shared = p_n_ab(11, 6, 6);  // path order 1: the cycles share a vertex
  CHECK(shared.n == 11);
  CHECK(shared.edge_count() == 12);
  CHECK(all_cycles(shared).size() == 2);  // the shared vertex is a cut vertex: just the two hexagons
  Graph g13 = p_n_ab(13, 6, 6);
  CHECK(g13.n == 13);
  CHECK(g13.edge_count() == 14);
  CHECK_THROWS_AS(p_n_ab(10, 6, 6), Error);
}

TEST_CASE("r_ab") {
  Graph r = r_ab(10, 10);
  CHECK(r.n == 20);
  CHECK(r.edge_count() == 21);
  CHECK(is_r_ab_exceptional(10, 10));
  CHECK_FALSE(is_r_ab_exceptional(4, 4));
  Graph s = r_ab(4, 4);
  CHECK(s.n == 8);
  CHECK(s.edge_count() == 9);
  CHECK(is_bipartite(r_ab(10, 14)));
  CHECK(cyclomatic_number(r_ab(10, 14)) == 2);
}

TEST_CASE("p_n_666 and the theta_ii identity") {
  Graph g = p_n_666(20);
  CHECK(g.n == 20);
  CHECK(g.edge_count() == 22);
  CHECK(cyclomatic_number(g) == 3);
  CHECK(is_bipartite(p_n_666(22)));
  for (int n = 20; n <= 30; ++n)
    CHECK(canonical_form(p_n_666(n)) == canonical_form(theta_ii(n, 6, 6, 6, n - 17, 2, 2)));
  CHECK_THROWS_AS(p_n_666(19), Error);
}

TEST_CASE("theta_i construction") {
  // vertex-count identity: 6+6+6+2+2-4 = 18, not 20
  CHECK_THROWS_AS(theta_i(20, 6, 6, 6, 2, 2, 2), Error);
  Graph g = theta_i(20, 6, 6, 6, 3, 3, 2);
  CHECK(g.n == 20);
  CHECK(g.edge_count() == 22);
  CHECK(cyclomatic_number(g) == 3);
  CHECK(is_bipartite(g));
  CHECK(has_three_disjoint_cycles(g));

  // lc = 1 means both paths attach at the same vertex
  ThetaIBuild t = theta_i_build(18, 6, 6, 6, 2, 2, 1);
  CHECK(t.u2 == t.v2);
  CHECK(t.g.degree(t.u2) == 4);

  CHECK_THROWS_AS(theta_i(20, 6, 5, 6, 4, 3, 2), Error);   // odd cycle
  CHECK_THROWS_AS(theta_i(20, 6, 6, 6, 1, 5, 2), Error);   // path too short
  CHECK_THROWS_AS(theta_i(22, 6, 6, 6, 4, 4, 5), Error);   // lc beyond the smaller arc
}

TEST_CASE("theta_ii construction") {
  Graph g = theta_ii(20, 6, 6, 6, 3, 2, 2);
  CHECK(g.n == 20);
  CHECK(canonical_form(g) == canonical_form(p_n_666(20)));
  Graph h = theta_ii(22, 6, 6, 6, 5, 2, 2);
  CHECK(h.n == 22);
  Graph m = theta_ii(19, 4, 4, 4, 4, 4, 4);
  CHECK(m.n == 19);
  CHECK(has_three_disjoint_cycles(m));
  CHECK_THROWS_AS(theta_ii(20, 6, 6, 6, 9, 9, 9), Error);
}

TEST_CASE("theta cycles are exactly as requested") {
  for (const Graph& g : {theta_i(21, 4, 6, 8, 3, 4, 3), theta_ii(21, 4, 6, 8, 2, 3, 3)}) {
    auto cs = all_cycles(g);
    REQUIRE(cs.size() == 3);
    std::multiset<std::size_t> lens;
    for (const auto& c : cs.cycles) lens.insert(c.size());
    CHECK(lens == std::multiset<std::size_t>{4, 6, 8});
  }
}

TEST_CASE("structure recognition round trip") {
  for (const FamilySpec& s : enumerate_central(18)) {
    Graph g = build(s);
    FamilySpec r = recognize_central(g);
    CHECK(canonical_form(build(r)) == canonical_form(g));
  }
  CHECK_THROWS_AS(recognize_central(path(9)), Error);
  CHECK_THROWS_AS(recognize_central(p_n_a(10, 6)), Error);
  // planted trees are rejected
  Graph planted = theta_ii(20, 6, 6, 6, 3, 2, 2);
  planted.n += 1;
  planted.adj.emplace_back();
  planted.labels.push_back("tree");
  planted.add_edge(0, planted.n - 1);
  CHECK_THROWS_AS(recognize_central(planted), Error);
}

TEST_CASE("gamma classification") {
  auto gc = [](FamilySpec s) { return gamma_classify(s).to_string(); };
  // spec examples
  CHECK(gc({FamilyKind::ThetaII, 0, 10, 6, 6, 2, 3, 3, 0}) == "Gamma2(i)");
  CHECK(gc({FamilyKind::ThetaII, 0, 8, 8, 8, 3, 3, 3, 0}) == "Gamma2(ii)");
  CHECK(gc({FamilyKind::ThetaII, 0, 6, 6, 6, 3, 2, 2, 0}) == "None");
  // arm order must not matter
  CHECK(gc({FamilyKind::ThetaII, 0, 6, 10, 6, 3, 2, 3, 0}) == "Gamma2(i)");
  CHECK(gc({FamilyKind::ThetaII, 0, 4, 8, 6, 3, 2, 2, 0}) == "Gamma2(i)+Gamma2(iii)");
  CHECK(gc({FamilyKind::ThetaII, 0, 8, 4, 6, 3, 4, 3, 0}) == "Gamma2(v)");
  CHECK(gc({FamilyKind::ThetaII, 0, 4, 8, 4, 4, 3, 2, 0}) == "Gamma2(iv)");
  // Gamma1 forms, both orientations
  CHECK(gc({FamilyKind::ThetaI, 0, 8, 4, 8, 2, 3, 0, 2}) == "Gamma1(i)");
  CHECK(gc({FamilyKind::ThetaI, 0, 8, 6, 8, 3, 2, 0, 2}) == "Gamma1(ii)");
  CHECK(gc({FamilyKind::ThetaI, 0, 8, 6, 8, 3, 3, 0, 2}) == "None");
  CHECK(gc({FamilyKind::ThetaI, 0, 4, 6, 6, 2, 3, 0, 2}) == "Gamma1(iii)+Gamma1(iv)");
  CHECK(gc({FamilyKind::ThetaI, 0, 10, 8, 4, 5, 2, 0, 2}) == "Gamma1(iv)");
  CHECK(gc({FamilyKind::ThetaI, 0, 4, 8, 10, 2, 5, 0, 2}) == "Gamma1(iv)");  // reflected
  CHECK(gc({FamilyKind::ThetaI, 0, 8, 6, 8, 3, 2, 0, 3}) == "None");         // lc != 2
  CHECK_THROWS_AS(gamma_classify(FamilySpec{FamilyKind::Cycle, 6, 0, 0, 0, 0, 0, 0, 0}), Error);
  // graph input goes through recognition
  CHECK(gamma_classify(theta_ii(25, 10, 6, 6, 2, 3, 3)).to_string() == "Gamma2(i)");
  CHECK_THROWS_AS(gamma_classify(path(7)), Error);
}

TEST_CASE("spec string round trip") {
  for (const char* s : {"path:5", "cycle:6", "star:5", "pna:10:6", "pnab:14:6,6", "rab:20:10,10",
                        "p666:20", "theta1:22:6,6,6:6,2:2", "theta2:20:6,6,6:3,2,2"}) {
    FamilySpec spec = FamilySpec::parse(s);
    CHECK(spec.to_string() == s);
    if (spec.kind != FamilyKind::RAB) CHECK(build(spec).n == spec.n);
  }
  CHECK_THROWS_AS(FamilySpec::parse("theta2:20:6,6:3,2,2"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("nope:4"), Error);
  CHECK_THROWS_AS(FamilySpec::parse("cycle:x"), Error);
  CHECK_THROWS_AS(build(FamilySpec::parse("rab:19:10,10")), Error);
}

TEST_CASE("family invariants across constructors") {
  for (const char* s : {"pna:12:6", "pnab:16:6,8", "rab:14:6,8", "p666:21",
                        "theta1:21:4,6,8:3,4:3", "theta2:24:6,8,6:3,2,4"}) {
    FamilySpec spec = FamilySpec::parse(s);
    Graph g = build(spec);
    g.check_invariants();
    CHECK(g.n == spec.n);
    CHECK(is_bipartite(g));
    int want = spec.kind == FamilyKind::PnA ? 1 : (spec.kind == FamilyKind::Pn666 ||
                spec.kind == FamilyKind::ThetaI || spec.kind == FamilyKind::ThetaII ? 3 : 2);
    CHECK(cyclomatic_number(g) == want);
  }
}
