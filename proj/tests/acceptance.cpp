// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code = number of failed
// criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "genergy/canon.hpp"
#include "genergy/verify.hpp"

using namespace genergy;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

IntPoly poly(std::vector<long long> a) {
  std::vector<BigInt> c;
  for (long long x : a) c.emplace_back(x);
  return IntPoly(std::move(c));
}

Graph random_tricyclic(std::mt19937& rng, int nmax) {
  for (;;) {
    Graph g;
    if (rng() % 2 == 0) {
      int l1 = 2 + rng() % 2, l2 = 2 + rng() % 2, lc = 1 + rng() % 3;
      g = theta_i(8 + l1 + l2, 4, 4, 4, l1, l2, lc);
    } else {
      int l1 = 2 + rng() % 2, l2 = 2 + rng() % 2, l3 = 2 + rng() % 2;
      g = theta_ii(7 + l1 + l2 + l3, 4, 4, 4, l1, l2, l3);
    }
    if (g.n > nmax) continue;
    while (g.n < nmax && rng() % 3 != 0) {
      int at = static_cast<int>(rng() % g.n);
      g.n += 1;
      g.adj.emplace_back();
      if (!g.labels.empty()) g.labels.push_back("tree");
      g.add_edge(at, g.n - 1);
    }
    return g;
  }
}

// criterion 1: the four polynomials quoted verbatim in the source derivation
Outcome criterion1() {
  struct Fixture {
    const char* name;
    Graph g;
    IntPoly quoted;
  };
  std::vector<Fixture> fx;
  fx.push_back({"C_6", cycle(6), poly({1, 0, -6, 0, 9, 0, -4})});
  fx.push_back({"P^4_6", p_n_a(6, 4), poly({1, 0, -6, 0, 6, 0, 0})});
  fx.push_back({"P^4_5", p_n_a(5, 4), poly({1, 0, -3, 0, 2, 0})});
  fx.push_back({"P_5", path(5), poly({1, 0, -4, 0, 3, 0})});
  bool all = true;
  std::ostringstream os;
  for (auto& f : fx) {
    IntPoly got = charpoly_oracle(f.g);
    bool ok = got == f.quoted;
    all = all && ok;
    if (!ok)
      os << f.name << ": computed " << got.to_string() << " but the quoted polynomial is "
         << f.quoted.to_string() << " (misprint in the source derivation; both the "
         << "determinant and deletion recursions give the computed value, and a_2 must "
         << "equal -|E| = " << -f.g.edge_count() << "). ";
  }
  if (all) os << "all four quoted polynomials reproduced";
  return {all, os.str()};
}

Outcome criterion2() {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 14; ++n) {
    corpus.push_back(path(n));
    if (n >= 3) corpus.push_back(cycle(n));
    if (n >= 2) corpus.push_back(star(n));
  }
  for (int a = 3; a <= 8; ++a)
    for (int n = a; n <= 14; ++n) corpus.push_back(p_n_a(n, a));
  for (int a = 3; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      for (int n = a + b - 1; n <= 14; ++n) corpus.push_back(p_n_ab(n, a, b));
  for (int m = 13; m <= 14; ++m)
    for (const FamilySpec& s : enumerate_central(m)) corpus.push_back(build(s));
  std::mt19937 rng(20140102);
  for (int t = 0; t < 500; ++t) corpus.push_back(random_tricyclic(rng, 14));
  int checked = 0, sachs_checked = 0;
  for (const Graph& g : corpus) {
    IntPoly p = charpoly_oracle(g);
    if (!(charpoly_recursive(g) == p)) return {false, "recursion mismatch on " + to_graph6(g)};
    ++checked;
    if (is_bipartite(g) && g.n <= 20) {
      if (!(b_sequence(p, true) == matching_count_oracle(g)))
        return {false, "Sachs oracle mismatch on " + to_graph6(g)};
      ++sachs_checked;
    }
  }
  return {true, std::to_string(checked) + " graphs, three-way agreement (" +
                    std::to_string(sachs_checked) + " with the Sachs route)"};
}

Outcome criterion3() {
  for (int n = 4; n <= 30; ++n) {
    PathChainReport rep = verify_path_chain(n);
    if (!rep.all_ok) return {false, "chain violated at n=" + std::to_string(n)};
  }
  return {true, "chain strict (duplicates Equal) for 4 <= n <= 30"};
}

Outcome criterion4() {
  std::mt19937 rng(31337);
  for (int t = 0; t < 200; ++t) {
    Graph g1 = random_tricyclic(rng, 12);
    Graph g2 = t % 2 == 0 ? path(2 + rng() % 6) : random_tricyclic(rng, 12);
    if (!(b_sequence(disjoint_union(g1, g2)) == bseq_convolve(b_sequence(g1), b_sequence(g2))))
      return {false, "union product failed"};
  }
  int done = 0;
  while (done < 200) {
    int n = 6 + static_cast<int>(rng() % 8);
    Graph g(n);
    std::vector<int> side(n);
    for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() % 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (side[u] != side[v] && rng() % n < 2 && !g.has_edge(u, v)) g.add_edge(u, v);
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v || side[u] == side[v] || g.has_edge(u, v)) continue;
    Graph ge = g;
    ge.add_edge(u, v);
    bool admissible = true;
    for (const auto& c : find_cycles_through_edge(ge, u, v).cycles)
      if (c.size() % 4 != 2) admissible = false;
    if (!admissible) continue;
    ++done;
    BSeq before = b_sequence(g), after = b_sequence(ge);
    for (std::size_t i = 0; i < after.b.size(); ++i)
      if (!(before.at(static_cast<int>(i)) <= after.b[i]))
        return {false, "edge-addition monotonicity failed"};
  }
  return {true, "union product and edge-addition monotonicity on 200 cases each"};
}

Outcome criterion5() {
  VerifyReport rep;
  rep.merge(verify_lemma_3_3());
  rep.merge(verify_theorem_3_4());
  rep.merge(verify_lemmas_3_5_3_6_3_9());
  rep.merge(verify_theorem_3_8());
  rep.merge(verify_lemma_3_10());
  std::map<std::string, int> counts;
  for (const auto& c : rep.claims) counts[c.id.substr(0, c.id.find('('))]++;
  // minimum instance counts; the case-8 regions are single tuples at n >= 20
  std::vector<std::pair<std::string, int>> want = {
      {"L3.3/case1", 3},      {"L3.3/case2", 3},      {"L3.5", 3},
      {"L3.6", 3},            {"L3.9", 3},            {"T3.8/sub1.1", 3},
      {"T3.8/sub1.2", 3},     {"T3.8/sub1.3", 2},     {"T3.8/sub2.1", 3},
      {"T3.8/sub2.2", 3},     {"T3.8/sub3.1", 3},     {"T3.8/sub3.2", 3},
      {"T3.8/sub4.1", 3},     {"T3.8/sub4.2", 3},
  };
  for (const char* sub : {"1.1", "1.3", "2.1", "2.2", "2.3", "3.1", "3.2", "4.1", "4.2", "4.3",
                          "4.4", "5.1", "5.2", "5.3", "6.1", "6.2", "6.3", "7.1", "7.2", "7.3"})
    want.emplace_back(std::string("T3.4/case") + sub[0] + "/sub" + sub, 3);
  for (const char* sub : {"8.1", "8.2", "8.3"}) want.emplace_back(std::string("T3.4/case8/sub") + sub, 1);
  std::ostringstream os;
  bool ok = rep.proved_failures() == 0;
  if (!ok) os << rep.proved_failures() << " proved-claim failures. ";
  int strict310 = 0;
  for (const auto& c : rep.claims)
    if (c.id.rfind("L3.10/l", 0) == 0 && c.expected == "prec") ++strict310;
  if (strict310 < 3) {
    ok = false;
    os << "L3.10 strict rows missing. ";
  }
  for (auto& [prefix, minc] : want) {
    int have = 0;
    for (const auto& [id, k] : counts)
      if (id.rfind(prefix, 0) == 0) have += k;
    if (have < minc) {
      ok = false;
      os << prefix << " has " << have << " < " << minc << " instances. ";
    }
  }
  if (ok) os << rep.claims.size() << " claim instances, zero proved failures, all subcases covered";
  return {ok, os.str()};
}

Outcome criterion6() {
  EnergyOrder ord = energy_compare(theta_i(22, 6, 6, 6, 6, 2, 2), theta_ii(22, 6, 6, 6, 5, 2, 2), 1e-6);
  return {ord == EnergyOrder::Less,
          std::string("energy_compare(theta1:22:6,6,6:6,2:2, theta2:22:6,6,6:5,2,2) = ") +
              energy_order_name(ord)};
}

Outcome criterion7() {
  std::vector<Graph> corpus = {
      path(8),          path(15),          star(9),          cycle(6),
      cycle(7),         cycle(12),         cycle(13),        p_n_a(10, 6),
      p_n_a(14, 4),     p_n_a(9, 5),       p_n_ab(14, 6, 6), p_n_ab(13, 4, 6),
      r_ab(10, 10),     r_ab(4, 6),        p_n_666(20),      p_n_666(24),
      theta_i(20, 4, 6, 6, 4, 4, 2), theta_i(22, 6, 6, 6, 6, 2, 1),
      theta_ii(22, 6, 6, 6, 5, 2, 2), theta_ii(19, 4, 4, 4, 4, 4, 4),
  };
  for (const Graph& g : corpus) {
    EnergyEnclosure e = energy_certified(g, 1e-9);
    double est = coulson_energy(g, 1e-6);
    if (std::abs(est - (e.lo.to_double() + e.hi.to_double()) / 2) > 1e-4)
      return {false, "certified/coulson disagree beyond 1e-4 on " + to_graph6(g)};
  }
  EnergyEnclosure c6 = energy_certified(cycle(6), 1e-9);
  if (!(c6.contains(8.0) && c6.width() <= 1e-9))
    return {false, "C_6 enclosure does not certify 8 at width 1e-9"};
  return {true, std::to_string(corpus.size()) + " corpus graphs agree within 1e-4; E(C_6) = 8 certified"};
}

Outcome criterion8() {
  const std::set<int> cycle_wins{7, 9, 10, 11, 13, 15};
  for (int n = 7; n <= 16; ++n) {
    EnergyOrder ord = energy_compare(cycle(n), p_n_a(n, 6), 1e-6);
    EnergyOrder expect = cycle_wins.count(n) ? EnergyOrder::Greater : EnergyOrder::Less;
    if (ord != expect)
      return {false, "C_n vs P_n^6 split wrong at n=" + std::to_string(n) + ": " +
                         energy_order_name(ord)};
  }
  EnergyOrder r = energy_compare(p_n_ab(20, 6, 6), r_ab(10, 10), 1e-6);
  if (r != EnergyOrder::Greater) return {false, "E(P^{6,6}_20) vs E(R_{10,10}) not Greater"};
  return {true, "C_n/P_n^6 split correct on 7..16; E(P^{6,6}_20) > E(R_{10,10})"};
}

Outcome criterion9() {
  VerifyReport rep = conjecture_scan(20, true);
  std::string summary;
  for (const auto& c : rep.claims)
    if (c.id.rfind("scan/summary", 0) == 0) summary = c.actual + (c.note.empty() ? "" : "; " + c.note);
  bool ok = rep.proved_failures() == 0;
  return {ok, ok ? summary : std::to_string(rep.proved_failures()) + " failures; " + summary};
}

// independent generate-and-filter oracle: every tricyclic multigraph kernel
// (<= 4 vertices, min degree 3), every edge subdivision, every tree planting
namespace kernel_oracle {

struct Multigraph {
  int n;
  std::vector<int> loops;                 // per vertex
  std::vector<std::vector<int>> mult;     // symmetric multiplicity matrix
};

std::string mg_key(const Multigraph& m) {
  // canonical form by brute force over vertex permutations (n <= 4)
  std::vector<int> perm(m.n);
  for (int i = 0; i < m.n; ++i) perm[i] = i;
  std::string best;
  do {
    std::ostringstream os;
    for (int i = 0; i < m.n; ++i) os << m.loops[perm[i]] << ";";
    for (int i = 0; i < m.n; ++i)
      for (int j = i + 1; j < m.n; ++j) os << m.mult[perm[i]][perm[j]] << ",";
    std::string s = os.str();
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool mg_connected(const Multigraph& m) {
  std::vector<char> seen(m.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < m.n; ++v)
      if (m.mult[u][v] > 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

std::vector<Multigraph> kernels() {
  std::vector<Multigraph> out;
  std::set<std::string> seen;
  for (int n = 1; n <= 4; ++n) {
    int m = n + 2;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    int vars = n + static_cast<int>(pairs.size());  // loops then pair multiplicities
    std::vector<int> val(vars, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == vars) {
        if (left != 0) return;
        Multigraph mg{n, std::vector<int>(val.begin(), val.begin() + n),
                      std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          mg.mult[pairs[p].first][pairs[p].second] = val[n + p];
          mg.mult[pairs[p].second][pairs[p].first] = val[n + p];
        }
        for (int v = 0; v < n; ++v) {
          int deg = 2 * mg.loops[v];
          for (int u = 0; u < n; ++u) deg += mg.mult[v][u];
          if (deg < 3) return;
        }
        if (!mg_connected(mg)) return;
        if (seen.insert(mg_key(mg)).second) out.push_back(std::move(mg));
        return;
      }
      for (int v2 = 0; v2 <= left; ++v2) {
        val[idx] = v2;
        rec(idx + 1, left - v2);
      }
    };
    rec(0, m);
  }
  return out;
}

// subdivide kernel edges with the given interior vertex counts and emit a
// simple graph, or an empty optional if a loop/parallel pair collapses
std::optional<Graph> subdivide(const Multigraph& m, const std::vector<int>& interior) {
  int total = m.n;
  for (int s : interior) total += s;
  Graph g(total);
  int next = m.n;
  std::size_t idx = 0;
  auto chain = [&](int from, int to, int inner) {
    int prev = from;
    for (int t = 0; t < inner; ++t) {
      g.add_edge(prev, next);
      prev = next++;
    }
    if (g.has_edge(prev, to) || prev == to) return false;  // collapse: not simple
    g.add_edge(prev, to);
    return true;
  };
  for (int v = 0; v < m.n; ++v)
    for (int l = 0; l < m.loops[v]; ++l) {
      int inner = interior[idx++];
      if (inner < 2) return std::nullopt;  // a loop needs >= 2 interior vertices
      if (!chain(v, v, inner)) return std::nullopt;
    }
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v)
      for (int c = 0; c < m.mult[u][v]; ++c)
        if (!chain(u, v, interior[idx++])) return std::nullopt;
  return g;
}

std::set<std::string> order14_class() {
  std::set<std::string> cores;
  std::vector<Graph> seeds;
  for (const Multigraph& m : kernels()) {
    int edges = 0;
    for (int v = 0; v < m.n; ++v) edges += m.loops[v];
    for (int u = 0; u < m.n; ++u)
      for (int v = u + 1; v < m.n; ++v) edges += m.mult[u][v];
    int budget = 14 - m.n;
    std::vector<int> interior(edges, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == edges) {
        auto g = subdivide(m, interior);
        if (!g) return;
        if (!is_bipartite(*g)) return;
        if (!has_three_disjoint_cycles(*g)) return;
        if (cores.insert(canonical_form(*g)).second) seeds.push_back(std::move(*g));
        return;
      }
      for (int s = 0; s <= left; ++s) {
        interior[idx] = s;
        rec(idx + 1, left - s);
      }
    };
    rec(0, budget);
  }
  // plant trees: grow the cores of each order up to 14
  std::map<int, std::vector<Graph>> by_order;
  for (const Graph& g : seeds) by_order[g.n].push_back(g);
  std::set<std::string> result;
  std::vector<Graph> layer;
  for (int n = 13; n <= 14; ++n) {
    layer = grow_pendant_layer(layer);
    for (const Graph& g : by_order[n]) layer.push_back(g);
    std::set<std::string> keys;
    std::vector<Graph> dedup;
    for (Graph& g : layer)
      if (keys.insert(canonical_form(g)).second) dedup.push_back(std::move(g));
    layer = std::move(dedup);
  }
  for (const Graph& g : layer) result.insert(canonical_form(g));
  return result;
}

}  // namespace kernel_oracle

Outcome criterion10() {
  std::vector<Graph> ours = enumerate_full(14);
  std::set<std::string> mine;
  for (const Graph& g : ours) mine.insert(canonical_form(g));
  std::set<std::string> oracle = kernel_oracle::order14_class();
  if (mine != oracle) {
    std::ostringstream os;
    os << "class mismatch: enumerate_full(14) = " << mine.size() << ", oracle = " << oracle.size();
    return {false, os.str()};
  }
  VerifyReport rep = verify_tree_flattening(14);
  if (rep.proved_failures() > 0) return {false, "tree flattening failed at n=14"};
  std::ostringstream os;
  os << mine.size() << " isomorphism classes at n=14 match the kernel-subdivision oracle; "
     << "every planted member dominated by a central structure";
  return {true, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> cs = {
      {1, "quoted polynomial fixtures", 1, criterion1},
      {2, "oracle equivalence (recursive / determinant / Sachs)", 120, criterion2},
      {3, "path chain strict for 4 <= n <= 30", 10, criterion3},
      {4, "union product and edge-addition monotonicity", 60, criterion4},
      {5, "section-3 case grids, zero failures", 600, criterion5},
      {6, "computed energy case at n=22", 30, criterion6},
      {7, "certified vs coulson cross-validation", 60, criterion7},
      {8, "background orderings at desk scale", 60, criterion8},
      {9, "conjecture scan at n=20", 900, criterion9},
      {10, "full enumeration vs kernel oracle at n=14", 1200, criterion10},
  };
  int failures = 0;
  for (auto& c : cs) {
    auto t0 = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_time = secs <= c.limit_s;
    bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << " (" << secs << "s"
              << (in_time ? "" : ", over budget") << "): " << c.what << " -- " << out.detail
              << "\n";
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed\n");
  return failures;
}
