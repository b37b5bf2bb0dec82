#include "doctest.h"

#include <random>

#include "genergy/charpoly.hpp"
#include "genergy/families.hpp"

using namespace genergy;

namespace {

IntPoly poly(std::vector<long long> a) {
  std::vector<BigInt> c;
  for (long long x : a) c.emplace_back(x);
  return IntPoly(std::move(c));
}

// random connected bipartite tricyclic graph with three disjoint cycles:
// a random small central structure plus random pendants
Graph random_tricyclic(std::mt19937& rng, int nmax) {
  for (;;) {
    int which = rng() % 2;
    Graph g;
    if (which == 0) {
      int l1 = 2 + rng() % 2, l2 = 2 + rng() % 2;
      int lc = 1 + rng() % 3;
      g = theta_i(8 + l1 + l2, 4, 4, 4, l1, l2, lc);
    } else {
      int l1 = 2 + rng() % 2, l2 = 2 + rng() % 2, l3 = 2 + rng() % 2;
      g = theta_ii(7 + l1 + l2 + l3, 4, 4, 4, l1, l2, l3);
    }
    if (g.n > nmax) continue;
    while (g.n < nmax && rng() % 3 != 0) {
      int at = rng() % g.n;
      g.n += 1;
      g.adj.emplace_back();
      if (!g.labels.empty()) g.labels.push_back("tree");
      g.add_edge(at, g.n - 1);
    }
    return g;
  }
}

}  // namespace

TEST_CASE("quoted polynomial fixtures") {
  CHECK(charpoly_oracle(cycle(6)) == poly({1, 0, -6, 0, 9, 0, -4}));
  CHECK(charpoly_oracle(p_n_a(6, 4)) == poly({1, 0, -6, 0, 6, 0, 0}));
  // the quoted -3 coefficient is a misprint: P^4_5 has 5 edges, so a_2 = -5
  CHECK(charpoly_oracle(p_n_a(5, 4)) == poly({1, 0, -5, 0, 2, 0}));
  CHECK(charpoly_oracle(path(5)) == poly({1, 0, -4, 0, 3, 0}));
  CHECK(charpoly_oracle(cycle(6)).to_string() == "λ^6-6λ^4+9λ^2-4");
}

TEST_CASE("recursive charpoly equals the determinant route") {
  CHECK(charpoly_recursive(p_n_a(5, 4)) == charpoly_oracle(p_n_a(5, 4)));
  CHECK(charpoly_recursive(Graph(1)) == poly({1, 0}));
  CHECK(charpoly_recursive(Graph(0)) == poly({1}));
  std::mt19937 rng(99);
  for (int t = 0; t < 200; ++t) {
    int n = 5 + static_cast<int>(rng() % 8);
    Graph g(n);
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() % 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (side[u] != side[v] && rng() % n < 2 && !g.has_edge(u, v)) g.add_edge(u, v);
    CHECK(charpoly_recursive(g) == charpoly_oracle(g));
  }
}

TEST_CASE("a1 and a2 structure") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    Graph g = random_tricyclic(rng, 13);
    IntPoly p = charpoly_oracle(g);
    CHECK(p.a[0] == 1);
    CHECK(p.a[1] == 0);
    CHECK(p.a[2] == -g.edge_count());
  }
}

TEST_CASE("b_sequence extraction and validation") {
  BSeq c6 = b_sequence(charpoly_oracle(cycle(6)), true);
  CHECK(c6.b == std::vector<BigInt>{1, 6, 9, 4});
  BSeq p2 = b_sequence(charpoly_oracle(path(2)), true);
  CHECK(p2.b == std::vector<BigInt>{1, 1});
  BSeq p64 = b_sequence(charpoly_oracle(p_n_a(6, 4)), true);
  CHECK(p64.b == std::vector<BigInt>{1, 6, 6, 0});
  CHECK_THROWS_AS(b_sequence(charpoly_oracle(cycle(5)), true), Error);
  CHECK_THROWS_AS(b_sequence(charpoly_oracle(cycle(6)), false), Error);
}

TEST_CASE("matching count oracle") {
  BSeq p4 = matching_count_oracle(path(4));
  CHECK(p4.b == std::vector<BigInt>{1, 3, 1});
  BSeq c4 = matching_count_oracle(cycle(4));
  CHECK(c4.b == std::vector<BigInt>{1, 4, 0});  // spectrum {2,0,0,-2}
  BSeq e3 = matching_count_oracle(Graph(3));
  CHECK(e3.b == std::vector<BigInt>{1, 0});
  CHECK_THROWS_AS(matching_count_oracle(Graph(24)), Error);
}

TEST_CASE("three-way agreement on random tricyclic graphs") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_tricyclic(rng, 14);
    IntPoly p = charpoly_oracle(g);
    CHECK(charpoly_recursive(g) == p);
    CHECK(b_sequence(p, true) == matching_count_oracle(g));
  }
}

TEST_CASE("b recursion step") {
  // pendant edge of P_3: b(P_3) = b(P_2 u P_1) + shift b(P_1)
  BRecursionStep st = b_recursion_step(path(3), 1, 2);
  CHECK(st.cycle_terms.empty());
  CHECK(st.recombined == b_sequence(path(3)));

  // cycle edge of C_6 carries the single length-6 cycle with sign +1
  BRecursionStep c = b_recursion_step(cycle(6), 0, 1);
  REQUIRE(c.cycle_terms.size() == 1);
  CHECK(c.cycle_terms[0].sign == 1);
  CHECK(c.cycle_terms[0].rest.n == 0);
  CHECK(c.recombined == b_sequence(cycle(6)));

  // center edge u1v1 of Theta_II(20;6,6,6;3,2,2), the Subcase 1.1 expansion:
  // a bridge, so exactly the two-term rule applies
  ThetaIIBuild t = theta_ii_build(20, 6, 6, 6, 3, 2, 2);
  int u1 = t.paths[0][t.paths[0].size() - 2];
  BRecursionStep s = b_recursion_step(t.g, t.center, u1);
  CHECK(s.cycle_terms.empty());
  CHECK(s.recombined == b_sequence(t.g));

  CHECK_THROWS_AS(b_recursion_step(cycle(5), 0, 1), Error);
  CHECK_THROWS_AS(b_recursion_step(path(4), 0, 2), Error);
}

TEST_CASE("union product identity") {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    Graph g1 = random_tricyclic(rng, 12);
    Graph g2 = t % 2 == 0 ? path(2 + rng() % 6) : random_tricyclic(rng, 12);
    BSeq u = b_sequence(disjoint_union(g1, g2));
    BSeq conv = bseq_convolve(b_sequence(g1), b_sequence(g2));
    CHECK(u == conv);
  }
}

TEST_CASE("edge addition monotonicity") {
  std::mt19937 rng(47);
  int done = 0;
  while (done < 200) {
    int n = 6 + static_cast<int>(rng() % 8);
    Graph g(n);
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() % 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (side[u] != side[v] && rng() % n < 2 && !g.has_edge(u, v)) g.add_edge(u, v);
    // pick a random bipartite-respecting non-edge
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || side[u] == side[v] || g.has_edge(u, v)) continue;
    Graph ge = g;
    ge.add_edge(u, v);
    bool ok = true;  // e not on a cycle, or all cycles through e of length 2 mod 4
    for (const auto& c : find_cycles_through_edge(ge, u, v).cycles)
      if (c.size() % 4 != 2) ok = false;
    if (!ok) continue;
    ++done;
    BSeq before = b_sequence(g), after = b_sequence(ge);
    for (std::size_t i = 0; i < after.b.size(); ++i) CHECK(before.at(static_cast<int>(i)) <= after.b[i]);
  }
}
