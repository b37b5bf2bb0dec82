#include "genergy/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace genergy {

Graph::Graph(int order) : n(order), adj(order) {
  if (order < 0) fail(Errc::BadParam, "negative vertex count");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n) fail(Errc::BadVertex, "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Errc::BadParam, "self-loop rejected");
  if (has_edge(u, v)) fail(Errc::BadParam, "duplicate edge rejected");
  adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
  adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
  std::size_t d = 0;
  for (const auto& a : adj) d += a.size();
  return static_cast<int>(d / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) es.emplace_back(u, v);
  return es;
}

void Graph::check_invariants() const {
  if (static_cast<int>(adj.size()) != n) fail(Errc::Internal, "adjacency size mismatch");
  for (int u = 0; u < n; ++u) {
    if (!std::is_sorted(adj[u].begin(), adj[u].end())) fail(Errc::Internal, "unsorted adjacency");
    if (std::adjacent_find(adj[u].begin(), adj[u].end()) != adj[u].end())
      fail(Errc::Internal, "duplicate edge");
    for (int v : adj[u]) {
      if (v < 0 || v >= n) fail(Errc::Internal, "neighbor out of range");
      if (v == u) fail(Errc::Internal, "self-loop");
      if (!std::binary_search(adj[v].begin(), adj[v].end(), u)) fail(Errc::Internal, "asymmetric adjacency");
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n) fail(Errc::Internal, "label size mismatch");
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) fail(Errc::MissingEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") absent");
  Graph h = g;
  auto erase_from = [](std::vector<int>& a, int x) {
    a.erase(std::lower_bound(a.begin(), a.end(), x));
  };
  erase_from(h.adj[u], v);
  erase_from(h.adj[v], u);
  return h;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
  std::vector<char> gone(g.n, 0);
  for (int v : vs) {
    g.check_vertex(v);
    gone[v] = 1;
  }
  std::vector<int> newid(g.n, -1);
  int m = 0;
  for (int v = 0; v < g.n; ++v)
    if (!gone[v]) newid[v] = m++;
  Graph h(m);
  if (!g.labels.empty()) h.labels.resize(m);
  for (int u = 0; u < g.n; ++u) {
    if (gone[u]) continue;
    if (!g.labels.empty()) h.labels[newid[u]] = g.labels[u];
    for (int v : g.adj[u])
      if (u < v && !gone[v]) h.add_edge(newid[u], newid[v]);
  }
  return h;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph h(g1.n + g2.n);
  if (!g1.labels.empty() || !g2.labels.empty()) {
    h.labels.resize(h.n);
    for (int v = 0; v < g1.n; ++v) h.labels[v] = g1.labels.empty() ? "" : g1.labels[v];
    for (int v = 0; v < g2.n; ++v) h.labels[g1.n + v] = g2.labels.empty() ? "" : g2.labels[v];
  }
  for (auto [u, v] : g1.edges()) h.add_edge(u, v);
  for (auto [u, v] : g2.edges()) h.add_edge(g1.n + u, g1.n + v);
  return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> q{s};
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      out[id].push_back(u);
      for (int v : g.adj[u])
        if (comp[v] == -1) {
          comp[v] = id;
          q.push_back(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n == 0 || components(g).size() == 1; }

bool is_bipartite(const Graph& g, std::vector<int>* coloring) {
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          q.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  if (coloring) *coloring = std::move(color);
  return true;
}

int cyclomatic_number(const Graph& g) {
  return g.edge_count() - g.n + static_cast<int>(components(g).size());
}

namespace {

// DFS over simple paths from cur to target in g (edge uv already removed by
// the caller).  Path lengths are bounded by the graph order; for our inputs
// (cyclomatic number <= 3) the number of paths is tiny.
void path_dfs(const Graph& g, int cur, int target, std::vector<int>& path, std::vector<char>& used,
              std::vector<std::vector<int>>& out) {
  if (cur == target) {
    out.push_back(path);
    return;
  }
  for (int w : g.adj[cur]) {
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    path_dfs(g, w, target, path, used, out);
    path.pop_back();
    used[w] = 0;
  }
}

}  // namespace

CycleSet find_cycles_through_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) fail(Errc::MissingEdge, "edge absent");
  Graph h = delete_edge(g, u, v);
  std::vector<std::vector<int>> paths;
  std::vector<int> path{u};
  std::vector<char> used(g.n, 0);
  used[u] = 1;
  path_dfs(h, u, v, path, used, paths);
  CycleSet cs;
  cs.cycles = std::move(paths);  // path u..v plus the implicit closing edge vu
  return cs;
}

CycleSet all_cycles(const Graph& g) {
  CycleSet out;
  std::vector<std::vector<std::pair<int, int>>> seen;  // sorted edge sets
  for (auto [u, v] : g.edges()) {
    CycleSet through = find_cycles_through_edge(g, u, v);
    for (auto& cyc : through.cycles) {
      std::vector<std::pair<int, int>> es;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        es.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(es.begin(), es.end());
      if (std::find(seen.begin(), seen.end(), es) == seen.end()) {
        seen.push_back(std::move(es));
        out.cycles.push_back(std::move(cyc));
      }
    }
  }
  return out;
}

Graph two_core(const Graph& g) {
  std::vector<char> gone(g.n, 0);
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (!gone[v] && deg[v] <= 1) {
        gone[v] = 1;
        changed = true;
        for (int w : g.adj[v])
          if (!gone[w]) --deg[w];
      }
    }
  }
  std::vector<int> vs;
  for (int v = 0; v < g.n; ++v)
    if (gone[v]) vs.push_back(v);
  return delete_vertices(g, vs);
}

// ---- graph6 ----

std::string to_graph6(const Graph& g) {
  std::string s;
  auto push_word = [&s](long long x) {
    // 18-bit big-endian word in three printable bytes
    s.push_back(static_cast<char>(63 + ((x >> 12) & 63)));
    s.push_back(static_cast<char>(63 + ((x >> 6) & 63)));
    s.push_back(static_cast<char>(63 + (x & 63)));
  };
  if (g.n <= 62) {
    s.push_back(static_cast<char>(63 + g.n));
  } else {
    s.push_back(126);
    push_word(g.n);
  }
  int bit = 0, acc = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bit == 6) {
        s.push_back(static_cast<char>(63 + acc));
        bit = 0;
        acc = 0;
      }
    }
  }
  if (bit > 0) s.push_back(static_cast<char>(63 + (acc << (6 - bit))));
  return s;
}

Graph from_graph6(const std::string& line) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > line.size()) fail(Errc::ParseError, "graph6: truncated input");
  };
  need(1);
  long long n;
  if (static_cast<unsigned char>(line[pos]) == 126) {
    ++pos;
    need(3);
    n = 0;
    for (int t = 0; t < 3; ++t) {
      int c = static_cast<unsigned char>(line[pos++]) - 63;
      if (c < 0 || c > 63) fail(Errc::ParseError, "graph6: bad byte");
      n = (n << 6) | c;
    }
  } else {
    n = static_cast<unsigned char>(line[pos++]) - 63;
    if (n < 0 || n > 62) fail(Errc::ParseError, "graph6: bad order byte");
  }
  Graph g(static_cast<int>(n));
  int bit = 0, acc = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit == 0) {
        need(1);
        acc = static_cast<unsigned char>(line[pos++]) - 63;
        if (acc < 0 || acc > 63) fail(Errc::ParseError, "graph6: bad byte");
        bit = 6;
      }
      --bit;
      if ((acc >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

// ---- JSON ----

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto& es = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  if (!g.labels.empty()) {
    nlohmann::json lab;
    for (int v = 0; v < g.n; ++v)
      if (!g.labels[v].empty()) lab[std::to_string(v)] = g.labels[v];
    j["labels"] = lab;
  }
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("graph json: ") + e.what());
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) fail(Errc::ParseError, "graph json: missing n");
  Graph g(j["n"].get<int>());
  for (const auto& e : j.value("edges", nlohmann::json::array())) {
    if (!e.is_array() || e.size() != 2) fail(Errc::ParseError, "graph json: bad edge");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("labels")) {
    g.labels.resize(g.n);
    for (auto& [key, val] : j["labels"].items()) {
      int v = std::stoi(key);
      g.check_vertex(v);
      g.labels[v] = val.get<std::string>();
    }
  }
  return g;
}

}  // namespace genergy
