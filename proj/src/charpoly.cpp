#include "genergy/charpoly.hpp"

#include <algorithm>
#include <unordered_map>

#include "genergy/canon.hpp"

namespace genergy {

IntPoly charpoly_oracle(const Graph& g, int limit) {
  const int n = g.n;
  if (n > limit) fail(Errc::TooLarge, "charpoly_oracle: order exceeds limit");
  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k ... with M_{k+1} = A M_k + c_k I.
  // The divisions are exact over the integers.
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  coeffs[0] = 1;
  if (n == 0) return IntPoly(std::move(coeffs));
  std::vector<std::vector<BigInt>> M(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 0; i < n; ++i) M[i][i] = 1;  // M_0 = I
  for (int k = 1; k <= n; ++k) {
    // M <- A*M  (A is the 0/1 adjacency matrix: row i sums over neighbors)
    std::vector<std::vector<BigInt>> AM(n, std::vector<BigInt>(n, BigInt(0)));
    for (int i = 0; i < n; ++i)
      for (int t : g.adj[i])
        for (int j = 0; j < n; ++j) AM[i][j] += M[t][j];
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += AM[i][i];
    BigInt ck = -tr / k;
    coeffs[k] = ck;
    for (int i = 0; i < n; ++i) AM[i][i] += ck;
    M = std::move(AM);
  }
  return IntPoly(std::move(coeffs));
}

namespace {

// Picks the recursion edge: a pendant edge if one exists (two-term rule),
// otherwise an edge on a shortest cycle.
bool pick_edge(const Graph& g, int& u, int& v, bool& pendant) {
  for (int w = 0; w < g.n; ++w)
    if (g.degree(w) == 1) {
      v = w;
      u = g.adj[w][0];
      pendant = true;
      return true;
    }
  // no pendant: every vertex has degree 0 or >= 2
  std::size_t best = SIZE_MAX;
  int bu = -1, bv = -1;
  for (auto [a, b] : g.edges()) {
    CycleSet cs = find_cycles_through_edge(g, a, b);
    std::size_t shortest = SIZE_MAX;
    for (const auto& c : cs.cycles) shortest = std::min(shortest, c.size());
    if (shortest < best) {
      best = shortest;
      bu = a;
      bv = b;
    }
  }
  if (bu < 0) return false;  // edgeless
  u = bu;
  v = bv;
  pendant = false;
  return true;
}

constexpr int kMemoCap = 24;

IntPoly charpoly_connected(const Graph& g);

IntPoly charpoly_split(const Graph& g) {
  auto comps = components(g);
  if (comps.size() <= 1) return charpoly_connected(g);
  IntPoly out = poly_one();
  for (const auto& comp : comps) {
    std::vector<int> rest;
    std::vector<char> keep(g.n, 0);
    for (int v : comp) keep[v] = 1;
    for (int v = 0; v < g.n; ++v)
      if (!keep[v]) rest.push_back(v);
    out = poly_mul(out, charpoly_connected(delete_vertices(g, rest)));
  }
  return out;
}

IntPoly charpoly_connected(const Graph& g) {
  if (g.n == 0) return poly_one();
  thread_local std::unordered_map<std::string, IntPoly> memo;
  std::string key;
  if (g.n <= kMemoCap) {
    key = canonical_form(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  IntPoly result;
  int u = -1, v = -1;
  bool pendant = false;
  if (!pick_edge(g, u, v, pendant)) {
    result = poly_lambda_pow(g.n);  // edgeless
  } else if (pendant) {
    // phi(G) = lambda phi(G-v) - phi(G-u-v), v the pendant vertex
    IntPoly a = poly_shift(charpoly_split(delete_vertices(g, {v})), 1);
    IntPoly b = charpoly_split(delete_vertices(g, {u, v}));
    result = poly_sub(a, b);
  } else {
    IntPoly acc = poly_sub(charpoly_split(delete_edge(g, u, v)), charpoly_split(delete_vertices(g, {u, v})));
    for (const auto& cyc : find_cycles_through_edge(g, u, v).cycles)
      acc = poly_sub(acc, poly_scale(charpoly_split(delete_vertices(g, cyc)), BigInt(2)));
    result = std::move(acc);
  }
  if (!key.empty()) memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

IntPoly charpoly_recursive(const Graph& g) { return charpoly_split(g); }

BSeq b_sequence(const IntPoly& p, bool bipartite_witness) {
  if (!bipartite_witness) fail(Errc::NotBipartite, "b_sequence requires a bipartite source");
  const int n = p.degree();
  BSeq s;
  s.n = n;
  s.b.resize(n / 2 + 1);
  for (int i = 0; i <= n; ++i) {
    if (i % 2 == 1) {
      if (p.a[i] != 0) fail(Errc::NotBipartitePolynomial, "odd coefficient a_" + std::to_string(i) + " nonzero");
    } else {
      BigInt b = (i / 2) % 2 == 0 ? p.a[i] : BigInt(-p.a[i]);
      if (b < 0) fail(Errc::NotBipartitePolynomial, "negative b_" + std::to_string(i));
      s.b[i / 2] = b;
    }
  }
  return s;
}

BSeq b_sequence(const Graph& g) { return b_sequence(charpoly_oracle(g), is_bipartite(g)); }

BRecursionStep b_recursion_step(const Graph& g, int u, int v) {
  if (!is_bipartite(g)) fail(Errc::NotBipartite, "b_recursion_step: graph not bipartite");
  if (!g.has_edge(u, v)) fail(Errc::MissingEdge, "b_recursion_step: edge absent");
  BRecursionStep step;
  step.minus_edge = delete_edge(g, u, v);
  step.minus_ends = delete_vertices(g, {u, v});
  BSeq acc = b_sequence(step.minus_edge);
  acc.n = g.n;
  acc.b.resize(g.n / 2 + 1, BigInt(0));
  {
    BSeq me = b_sequence(step.minus_ends);
    for (std::size_t i = 0; i < me.b.size(); ++i)
      if (i + 1 < acc.b.size()) acc.b[i + 1] += me.b[i];
  }
  for (const auto& cyc : find_cycles_through_edge(g, u, v).cycles) {
    BRecursionStep::CycleTerm term;
    term.cycle = cyc;
    std::vector<int> cv = cyc;
    term.rest = delete_vertices(g, cv);
    int half = static_cast<int>(cyc.size()) / 2;
    term.sign = (1 + half) % 2 == 0 ? 1 : -1;
    BSeq rb = b_sequence(term.rest);
    for (std::size_t i = 0; i < rb.b.size(); ++i) {
      std::size_t idx = i + half;
      if (idx < acc.b.size()) acc.b[idx] += BigInt(2 * term.sign) * rb.b[i];
    }
    step.cycle_terms.push_back(std::move(term));
  }
  step.recombined = std::move(acc);
  return step;
}

namespace {

// Matching generating coefficients m_k = number of k-edge matchings.
void matchings_by_size(const Graph& g, std::vector<char>& used, int minEdge, int size,
                       const std::vector<std::pair<int, int>>& es, std::vector<BigInt>& out) {
  out[size] += 1;
  for (std::size_t e = minEdge; e < es.size(); ++e) {
    auto [a, b] = es[e];
    if (used[a] || used[b]) continue;
    used[a] = used[b] = 1;
    matchings_by_size(g, used, static_cast<int>(e) + 1, size + 1, es, out);
    used[a] = used[b] = 0;
  }
}

}  // namespace

BSeq matching_count_oracle(const Graph& g, int limit) {
  if (g.n > limit) fail(Errc::TooLarge, "matching_count_oracle: order exceeds limit");
  if (!is_bipartite(g)) fail(Errc::NotBipartite, "matching_count_oracle: graph not bipartite");
  BSeq s;
  s.n = g.n;
  s.b.assign(g.n / 2 + 1, BigInt(0));
  // Enumerate disjoint families of (even) cycles; all cycles are even here.
  CycleSet cycles = all_cycles(g);
  const std::size_t m = cycles.size();
  if (m > 20) fail(Errc::TooLarge, "matching_count_oracle: too many cycles");
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<char> used(g.n, 0);
    bool disjoint = true;
    int halves = 0, weight_sign = 1, ncyc = 0;
    for (std::size_t c = 0; c < m && disjoint; ++c) {
      if (!(mask >> c & 1)) continue;
      ++ncyc;
      int l = static_cast<int>(cycles.cycles[c].size());
      halves += l / 2;
      weight_sign *= (1 + l / 2) % 2 == 0 ? 1 : -1;
      for (int v : cycles.cycles[c]) {
        if (used[v]) {
          disjoint = false;
          break;
        }
        used[v] = 1;
      }
    }
    if (!disjoint) continue;
    // matchings of G - V(selected cycles)
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges())
      if (!used[a] && !used[b]) es.emplace_back(a, b);
    std::vector<BigInt> mcount(g.n / 2 + 1, BigInt(0));
    std::vector<char> mused = used;
    matchings_by_size(g, mused, 0, 0, es, mcount);
    BigInt w = weight_sign;
    for (int c = 0; c < ncyc; ++c) w *= 2;
    for (std::size_t k = 0; k < mcount.size(); ++k) {
      std::size_t idx = k + halves;
      if (idx < s.b.size()) s.b[idx] += w * mcount[k];
    }
  }
  return s;
}

}  // namespace genergy
