#include "genergy/canon.hpp"

#include <algorithm>
#include <map>

namespace genergy {

namespace {

// Refine a coloring to the coarsest equitable one below it: repeatedly split
// color classes by the multiset of neighbor colors.  The result depends only
// on the isomorphism type and the input coloring, never on vertex ids.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const int n = g.n;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.adj[v].size() + 1);
      s.push_back(color[v]);
      for (int w : g.adj[v]) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> order;
    for (int v = 0; v < n; ++v) order[sig[v].first];  // collect distinct signatures
    int next = 0;
    for (auto& [k, id] : order) id = next++;
    std::vector<int> newcolor(n);
    for (int v = 0; v < n; ++v) newcolor[v] = order[sig[v].first];
    if (newcolor == color) return color;
    color = std::move(newcolor);
  }
}

std::string certificate(const Graph& g, const std::vector<int>& color) {
  // color is discrete here: order vertices by color.
  const int n = g.n;
  std::vector<int> by_color(n);
  for (int v = 0; v < n; ++v) by_color[color[v]] = v;
  std::string cert;
  cert.reserve(2 + static_cast<std::size_t>(n) * n / 8 + 1);
  cert.push_back(static_cast<char>(n));
  int acc = 0, bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (g.has_edge(by_color[i], by_color[j]) ? 1 : 0);
      if (++bits == 8) {
        cert.push_back(static_cast<char>(acc));
        acc = bits = 0;
      }
    }
  if (bits) cert.push_back(static_cast<char>(acc << (8 - bits)));
  return cert;
}

// Vertices u, v are twins when their neighborhoods agree outside {u, v};
// swapping a twin pair is an automorphism, so one branch per twin class
// suffices.  This keeps leaf clusters (stars, pendant bunches) linear
// instead of factorial.
bool twins(const Graph& g, int u, int v) {
  auto strip = [](std::vector<int> a, int x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it != a.end() && *it == x) a.erase(it);
    return a;
  };
  return strip(g.adj[u], v) == strip(g.adj[v], u);
}

void search(const Graph& g, const std::vector<int>& color, std::string& best, bool& have_best) {
  const int n = g.n;
  // locate the smallest non-singleton color class
  std::vector<std::vector<int>> cells(n);
  int maxc = 0;
  for (int v = 0; v < n; ++v) {
    cells[color[v]].push_back(v);
    maxc = std::max(maxc, color[v]);
  }
  int target = -1;
  for (int c = 0; c <= maxc; ++c)
    if (cells[c].size() > 1) {
      target = c;
      break;
    }
  if (target == -1) {
    std::string cert = certificate(g, color);
    if (!have_best || cert < best) {
      best = std::move(cert);
      have_best = true;
    }
    return;
  }
  std::vector<int> reps;
  for (int v : cells[target]) {
    bool dup = false;
    for (int r : reps)
      if (twins(g, r, v)) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(v);
  }
  for (int v : reps) {
    // individualize v: give it a fresh color just below its class
    std::vector<int> c2(n);
    for (int u = 0; u < n; ++u) c2[u] = 2 * color[u] + 1;
    c2[v] = 2 * color[v];
    search(g, refine(g, std::move(c2)), best, have_best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g, int limit) {
  if (g.n > limit)
    fail(Errc::TooLarge, "canonical_form: order " + std::to_string(g.n) + " exceeds limit " + std::to_string(limit));
  std::vector<int> init(g.n, 0);
  std::string best;
  bool have_best = false;
  search(g, refine(g, std::move(init)), best, have_best);
  if (g.n == 0) best = std::string(1, '\0');
  return best;
}

bool isomorphic(const Graph& a, const Graph& b, int limit) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, limit) == canonical_form(b, limit);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n) fail(Errc::BadParam, "relabel: permutation size mismatch");
  Graph h(g.n);
  if (!g.labels.empty()) h.labels.resize(g.n);
  for (int v = 0; v < g.n; ++v)
    if (!g.labels.empty()) h.labels[perm[v]] = g.labels[v];
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace genergy
