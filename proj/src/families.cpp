#include "genergy/families.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace genergy {

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Star: return "star";
    case FamilyKind::PnA: return "pna";
    case FamilyKind::PnAB: return "pnab";
    case FamilyKind::RAB: return "rab";
    case FamilyKind::Pn666: return "p666";
    case FamilyKind::ThetaI: return "theta1";
    case FamilyKind::ThetaII: return "theta2";
  }
  return "?";
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << family_kind_name(kind) << ":" << n;
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Star:
    case FamilyKind::Pn666: break;
    case FamilyKind::PnA: os << ":" << a; break;
    case FamilyKind::PnAB:
    case FamilyKind::RAB: os << ":" << a << "," << b; break;
    case FamilyKind::ThetaI: os << ":" << a << "," << b << "," << k << ":" << l1 << "," << l2 << ":" << lc; break;
    case FamilyKind::ThetaII: os << ":" << a << "," << b << "," << k << ":" << l1 << "," << l2 << "," << l3; break;
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::ParseError, "spec string: bad integer '" + s + "' for " + what);
  return std::stoi(s);
}

std::vector<int> parse_list(const std::string& s, std::size_t want, const std::string& what) {
  auto parts = split(s, ',');
  if (parts.size() != want)
    fail(Errc::ParseError, "spec string: expected " + std::to_string(want) + " comma-separated values for " + what);
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(parse_int(p, what));
  return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() < 2) fail(Errc::ParseError, "spec string: expected kind:n[...], got '" + text + "'");
  FamilySpec s;
  const std::string& kind = parts[0];
  s.n = parse_int(parts[1], "n");
  auto expect_parts = [&](std::size_t k) {
    if (parts.size() != k)
      fail(Errc::ParseError, "spec string: wrong number of ':' groups for " + kind + " in '" + text + "'");
  };
  if (kind == "path" || kind == "cycle" || kind == "star" || kind == "p666") {
    expect_parts(2);
    s.kind = kind == "path"   ? FamilyKind::Path
             : kind == "cycle" ? FamilyKind::Cycle
             : kind == "star"  ? FamilyKind::Star
                               : FamilyKind::Pn666;
  } else if (kind == "pna") {
    expect_parts(3);
    s.kind = FamilyKind::PnA;
    s.a = parse_int(parts[2], "a");
  } else if (kind == "pnab" || kind == "rab") {
    expect_parts(3);
    s.kind = kind == "pnab" ? FamilyKind::PnAB : FamilyKind::RAB;
    auto ab = parse_list(parts[2], 2, "a,b");
    s.a = ab[0];
    s.b = ab[1];
  } else if (kind == "theta1") {
    expect_parts(5);
    s.kind = FamilyKind::ThetaI;
    auto abk = parse_list(parts[2], 3, "a,b,k");
    auto ls = parse_list(parts[3], 2, "l1,l2");
    s.a = abk[0];
    s.b = abk[1];
    s.k = abk[2];
    s.l1 = ls[0];
    s.l2 = ls[1];
    s.lc = parse_int(parts[4], "lc");
  } else if (kind == "theta2") {
    expect_parts(4);
    s.kind = FamilyKind::ThetaII;
    auto abk = parse_list(parts[2], 3, "a,b,k");
    auto ls = parse_list(parts[3], 3, "l1,l2,l3");
    s.a = abk[0];
    s.b = abk[1];
    s.k = abk[2];
    s.l1 = ls[0];
    s.l2 = ls[1];
    s.l3 = ls[2];
  } else {
    fail(Errc::ParseError, "spec string: unknown kind '" + kind + "'");
  }
  return s;
}

std::string FamilySpec::to_json() const {
  nlohmann::json j;
  j["kind"] = family_kind_name(kind);
  j["n"] = n;
  switch (kind) {
    case FamilyKind::PnA: j["a"] = a; break;
    case FamilyKind::PnAB:
    case FamilyKind::RAB:
      j["a"] = a;
      j["b"] = b;
      break;
    case FamilyKind::ThetaI:
      j["a"] = a;
      j["b"] = b;
      j["k"] = k;
      j["l1"] = l1;
      j["l2"] = l2;
      j["lc"] = lc;
      break;
    case FamilyKind::ThetaII:
      j["a"] = a;
      j["b"] = b;
      j["k"] = k;
      j["l1"] = l1;
      j["l2"] = l2;
      j["l3"] = l3;
      break;
    default: break;
  }
  return j.dump();
}

Graph build(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::Path: return path(s.n);
    case FamilyKind::Cycle: return cycle(s.n);
    case FamilyKind::Star: return star(s.n);
    case FamilyKind::PnA: return p_n_a(s.n, s.a);
    case FamilyKind::PnAB: return p_n_ab(s.n, s.a, s.b);
    case FamilyKind::RAB:
      if (s.n != s.a + s.b) fail(Errc::CountMismatch, "rab: n must equal a+b");
      return r_ab(s.a, s.b);
    case FamilyKind::Pn666: return p_n_666(s.n);
    case FamilyKind::ThetaI: return theta_i(s.n, s.a, s.b, s.k, s.l1, s.l2, s.lc);
    case FamilyKind::ThetaII: return theta_ii(s.n, s.a, s.b, s.k, s.l1, s.l2, s.l3);
  }
  fail(Errc::Internal, "unreachable");
}

Graph path(int n) {
  if (n < 1) fail(Errc::BadParam, "path requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) fail(Errc::BadParam, "cycle requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph star(int n) {
  if (n < 1) fail(Errc::BadParam, "star requires n >= 1");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph p_n_a(int n, int a) {
  if (a < 3) fail(Errc::BadParam, "p_n_a requires a >= 3");
  if (n < a) fail(Errc::BadParam, "p_n_a requires n >= a");
  Graph g = cycle(a);
  g.n = n;
  g.adj.resize(n);
  for (int i = a; i < n; ++i) g.add_edge(i == a ? 0 : i - 1, i);
  return g;
}

Graph p_n_ab(int n, int a, int b) {
  if (a < 3 || b < 3) fail(Errc::BadParam, "p_n_ab requires a,b >= 3");
  int order = n - a - b + 2;  // order of the joining path
  if (order < 1) fail(Errc::BadParam, "p_n_ab requires n >= a+b-1");
  Graph g(n);
  for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
  if (order == 1) {
    // the cycles share vertex 0
    int prev = 0;
    for (int i = 0; i < b - 1; ++i) {
      int cur = a + i;
      g.add_edge(prev, cur);
      prev = cur;
    }
    g.add_edge(prev, 0);
  } else {
    for (int i = 0; i < b; ++i) g.add_edge(a + i, a + (i + 1) % b);
    // path of order-2 internal vertices between vertex 0 (on C_a) and vertex a (on C_b)
    int prev = 0;
    for (int i = 0; i < order - 2; ++i) {
      int cur = a + b + i;
      g.add_edge(prev, cur);
      prev = cur;
    }
    g.add_edge(prev, a);
  }
  return g;
}

Graph r_ab(int a, int b) {
  if (a < 3 || b < 3) fail(Errc::BadParam, "r_ab requires a,b >= 3");
  return p_n_ab(a + b, a, b);
}

bool is_r_ab_exceptional(int a, int b) { return a >= 10 && b >= 10 && a % 4 == 2 && b % 4 == 2; }

Graph p_n_666(int n) {
  if (n < 20) fail(Errc::BadParam, "p_n_666 requires n >= 20");
  Graph g(n);
  g.labels.resize(n);
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 6; ++i) {
      g.add_edge(6 * c + i, 6 * c + (i + 1) % 6);
      g.labels[6 * c + i] = "cycle" + std::to_string(c) + ":" + std::to_string(i);
    }
  for (int i = 18; i < n; ++i) {
    if (i > 18) g.add_edge(i - 1, i);
    g.labels[i] = "path:" + std::to_string(i - 18);
  }
  g.add_edge(0, 18);
  g.add_edge(6, 18);
  g.add_edge(12, n - 1);
  return g;
}

namespace {

void check_theta_cycles(int a, int b, int k) {
  for (int c : {a, b, k})
    if (c < 4 || c % 2 != 0) fail(Errc::BadParam, "theta cycles must be even and >= 4");
}

}  // namespace

ThetaIBuild theta_i_build(int n, int a, int b, int k, int l1, int l2, int lc) {
  check_theta_cycles(a, b, k);
  if (l1 < 2 || l2 < 2) fail(Errc::BadParam, "theta_i requires l1,l2 >= 2");
  if (lc < 1 || lc > b / 2 + 1) fail(Errc::BadParam, "theta_i requires 1 <= lc <= b/2+1");
  if (n != a + b + k + l1 + l2 - 4)
    fail(Errc::CountMismatch, "theta_i: n=" + std::to_string(n) + " but parameters give " +
                                  std::to_string(a + b + k + l1 + l2 - 4));
  ThetaIBuild t;
  t.spec = FamilySpec{FamilyKind::ThetaI, n, a, b, k, l1, l2, 0, lc};
  Graph g(n);
  g.labels.resize(n);
  for (int i = 0; i < a; ++i) {
    g.add_edge(i, (i + 1) % a);
    t.ring_a.push_back(i);
    g.labels[i] = "cycle-a:" + std::to_string(i);
  }
  for (int i = 0; i < b; ++i) {
    g.add_edge(a + i, a + (i + 1) % b);
    t.ring_b.push_back(a + i);
    g.labels[a + i] = "cycle-b:" + std::to_string(i);
  }
  for (int i = 0; i < k; ++i) {
    g.add_edge(a + b + i, a + b + (i + 1) % k);
    t.ring_k.push_back(a + b + i);
    g.labels[a + b + i] = "cycle-k:" + std::to_string(i);
  }
  t.u1 = 0;
  t.u2 = t.ring_b[0];
  t.v2 = t.ring_b[lc - 1];
  t.v1 = t.ring_k[0];
  int next = a + b + k;
  auto join = [&](int from, int to, int internals, const std::string& tag, std::vector<int>& out) {
    out.push_back(from);
    int prev = from;
    for (int i = 0; i < internals; ++i) {
      g.add_edge(prev, next);
      g.labels[next] = tag + ":" + std::to_string(i);
      out.push_back(next);
      prev = next++;
    }
    g.add_edge(prev, to);
    out.push_back(to);
  };
  join(t.u1, t.u2, l1 - 2, "path1", t.path1);
  join(t.v1, t.v2, l2 - 2, "path2", t.path2);
  t.g = std::move(g);
  return t;
}

Graph theta_i(int n, int a, int b, int k, int l1, int l2, int lc) {
  return theta_i_build(n, a, b, k, l1, l2, lc).g;
}

ThetaIIBuild theta_ii_build(int n, int a, int b, int k, int l1, int l2, int l3) {
  check_theta_cycles(a, b, k);
  for (int l : {l1, l2, l3})
    if (l < 2) fail(Errc::BadParam, "theta_ii requires l1,l2,l3 >= 2");
  if (n != a + b + k + l1 + l2 + l3 - 5)
    fail(Errc::CountMismatch, "theta_ii: n=" + std::to_string(n) + " but parameters give " +
                                  std::to_string(a + b + k + l1 + l2 + l3 - 5));
  ThetaIIBuild t;
  t.spec = FamilySpec{FamilyKind::ThetaII, n, a, b, k, l1, l2, l3, 0};
  Graph g(n);
  g.labels.resize(n);
  const int lens[3] = {a, b, k};
  const int ls[3] = {l1, l2, l3};
  int base = 0;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < lens[c]; ++i) {
      g.add_edge(base + i, base + (i + 1) % lens[c]);
      t.rings[c].push_back(base + i);
      g.labels[base + i] = "cycle" + std::to_string(c) + ":" + std::to_string(i);
    }
    t.attach[c] = base;
    base += lens[c];
  }
  t.center = base;
  g.labels[t.center] = "center";
  int next = base + 1;
  for (int c = 0; c < 3; ++c) {
    t.paths[c].push_back(t.attach[c]);
    int prev = t.attach[c];
    for (int i = 0; i < ls[c] - 2; ++i) {
      g.add_edge(prev, next);
      g.labels[next] = "path" + std::to_string(c + 1) + ":" + std::to_string(i);
      t.paths[c].push_back(next);
      prev = next++;
    }
    g.add_edge(prev, t.center);
    t.paths[c].push_back(t.center);
  }
  t.g = std::move(g);
  return t;
}

Graph theta_ii(int n, int a, int b, int k, int l1, int l2, int l3) {
  return theta_ii_build(n, a, b, k, l1, l2, l3).g;
}

// ---- Gamma classification ----

const char* gamma_form_name(GammaForm f) {
  switch (f) {
    case GammaForm::G1_i: return "Gamma1(i)";
    case GammaForm::G1_ii: return "Gamma1(ii)";
    case GammaForm::G1_iii: return "Gamma1(iii)";
    case GammaForm::G1_iv: return "Gamma1(iv)";
    case GammaForm::G2_i: return "Gamma2(i)";
    case GammaForm::G2_ii: return "Gamma2(ii)";
    case GammaForm::G2_iii: return "Gamma2(iii)";
    case GammaForm::G2_iv: return "Gamma2(iv)";
    case GammaForm::G2_v: return "Gamma2(v)";
  }
  return "?";
}

std::string GammaClass::to_string() const {
  if (forms.empty()) return "None";
  std::string s;
  for (auto f : forms) {
    if (!s.empty()) s += "+";
    s += gamma_form_name(f);
  }
  return s;
}

namespace {

bool in23(int l) { return l == 2 || l == 3; }

void classify_theta_i(const FamilySpec& s, std::vector<GammaForm>& out) {
  if (s.lc != 2) return;  // every Gamma1 form is stated at lc = 2
  // both chain orientations: (a,l1 | b | k,l2) and the reflection
  const int A[2] = {s.a, s.k}, K[2] = {s.k, s.a}, L1[2] = {s.l1, s.l2}, L2[2] = {s.l2, s.l1};
  for (int o = 0; o < 2; ++o) {
    int a = A[o], k = K[o], l1 = L1[o], l2 = L2[o], b = s.b;
    if (b == 4 && a >= 8 && k >= 8 && in23(l1) && in23(l2)) out.push_back(GammaForm::G1_i);
    if (a >= 8 && b >= 6 && k >= 8 && in23(l1) && in23(l2) && !(l1 == 3 && l2 == 3))
      out.push_back(GammaForm::G1_ii);
    if (a == 4 && b >= 6 && k >= 6 && in23(l1) && in23(l2)) out.push_back(GammaForm::G1_iii);
    if (k == 4 && in23(l2)) out.push_back(GammaForm::G1_iv);
  }
}

void classify_theta_ii(const FamilySpec& s, std::vector<GammaForm>& out) {
  std::array<std::pair<int, int>, 3> arm = {{{s.a, s.l1}, {s.b, s.l2}, {s.k, s.l3}}};
  for (auto [c, l] : arm) {
    if (l == 2 && c >= 8) out.push_back(GammaForm::G2_i);
    if (c == 4 && l == 3) out.push_back(GammaForm::G2_iii);
    if (c == 4 && l == 2) out.push_back(GammaForm::G2_iv);
  }
  if (arm[0].second == 3 && arm[1].second == 3 && arm[2].second == 3 && arm[0].first >= 8 &&
      arm[1].first >= 8 && arm[2].first >= 8)
    out.push_back(GammaForm::G2_ii);
  for (int mid = 0; mid < 3; ++mid) {
    if (arm[mid] != std::pair<int, int>{4, 4}) continue;
    auto x = arm[(mid + 1) % 3], y = arm[(mid + 2) % 3];
    if (x.second == 3 && y.second == 3 && x.first >= 6 && y.first >= 6) out.push_back(GammaForm::G2_v);
  }
}

}  // namespace

GammaClass gamma_classify(const FamilySpec& s) {
  if (s.kind != FamilyKind::ThetaI && s.kind != FamilyKind::ThetaII)
    fail(Errc::NotCentralStructure, "gamma_classify expects a theta1 or theta2 spec");
  GammaClass g;
  if (s.kind == FamilyKind::ThetaI)
    classify_theta_i(s, g.forms);
  else
    classify_theta_ii(s, g.forms);
  std::sort(g.forms.begin(), g.forms.end());
  g.forms.erase(std::unique(g.forms.begin(), g.forms.end()), g.forms.end());
  return g;
}

GammaClass gamma_classify(const Graph& g) { return gamma_classify(recognize_central(g)); }

// ---- structure recognition ----

namespace {

// Walk a degree-2 chain starting with edge (from, first) until a vertex in
// `stop` is reached; returns the full vertex list including both endpoints.
std::vector<int> walk_chain(const Graph& g, int from, int first, const std::vector<char>& stop) {
  std::vector<int> path{from, first};
  int prev = from, cur = first;
  while (!stop[cur]) {
    int nxt = -1;
    for (int w : g.adj[cur])
      if (w != prev) {
        if (nxt != -1) fail(Errc::NotCentralStructure, "branching connector path");
        nxt = w;
      }
    if (nxt == -1) fail(Errc::NotCentralStructure, "dangling connector path");
    path.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return path;
}

}  // namespace

FamilySpec recognize_central(const Graph& g) {
  if (!is_connected(g)) fail(Errc::NotCentralStructure, "not connected");
  if (!is_bipartite(g)) fail(Errc::NotCentralStructure, "not bipartite");
  if (cyclomatic_number(g) != 3) fail(Errc::NotCentralStructure, "cyclomatic number != 3");
  if (two_core(g).n != g.n) fail(Errc::NotCentralStructure, "graph has planted trees");
  CycleSet cs = all_cycles(g);
  if (cs.size() != 3) fail(Errc::NotCentralStructure, "cycles are not vertex-disjoint");
  std::vector<int> oncycle(g.n, -1);
  for (int c = 0; c < 3; ++c)
    for (int v : cs.cycles[c]) {
      if (oncycle[v] != -1) fail(Errc::NotCentralStructure, "cycles share a vertex");
      oncycle[v] = c;
    }
  std::vector<char> stop(g.n, 0);
  for (int v = 0; v < g.n; ++v) stop[v] = oncycle[v] >= 0;

  // Theta_II: a non-cycle vertex of degree 3 is the center.
  int center = -1;
  for (int v = 0; v < g.n; ++v)
    if (oncycle[v] < 0 && g.degree(v) == 3) {
      if (center != -1) fail(Errc::NotCentralStructure, "two branch vertices");
      center = v;
    }
  if (center != -1) {
    int cyc[3], ls[3];
    for (int i = 0; i < 3; ++i) {
      auto p = walk_chain(g, center, g.adj[center][i], stop);
      int c = oncycle[p.back()];
      cyc[i] = static_cast<int>(cs.cycles[c].size());
      ls[i] = static_cast<int>(p.size());
    }
    FamilySpec s;
    s.kind = FamilyKind::ThetaII;
    s.n = g.n;
    s.a = cyc[0];
    s.b = cyc[1];
    s.k = cyc[2];
    s.l1 = ls[0];
    s.l2 = ls[1];
    s.l3 = ls[2];
    return s;
  }

  // Theta_I: the middle cycle carries either one degree-4 vertex (lc = 1)
  // or two degree-3 vertices.
  for (int c = 0; c < 3; ++c) {
    const auto& ring = cs.cycles[c];
    std::vector<int> attach;
    int deg4 = -1;
    for (int v : ring) {
      if (g.degree(v) == 4) deg4 = v;
      if (g.degree(v) == 3) attach.push_back(v);
    }
    auto make_spec = [&](const std::vector<int>& p1, const std::vector<int>& p2, int lc) {
      FamilySpec s;
      s.kind = FamilyKind::ThetaI;
      s.n = g.n;
      s.b = static_cast<int>(ring.size());
      s.a = static_cast<int>(cs.cycles[oncycle[p1.back()]].size());
      s.k = static_cast<int>(cs.cycles[oncycle[p2.back()]].size());
      s.l1 = static_cast<int>(p1.size());
      s.l2 = static_cast<int>(p2.size());
      s.lc = lc;
      return s;
    };
    if (deg4 != -1) {
      std::vector<std::vector<int>> ps;
      for (int w : g.adj[deg4])
        if (oncycle[w] != c) ps.push_back(walk_chain(g, deg4, w, stop));
      if (ps.size() != 2 || oncycle[ps[0].back()] == c || oncycle[ps[1].back()] == c)
        fail(Errc::NotCentralStructure, "unrecognized attachment pattern");
      return make_spec(ps[0], ps[1], 1);
    }
    if (attach.size() == 2) {
      std::vector<std::vector<int>> ps;
      for (int v : attach)
        for (int w : g.adj[v])
          if (oncycle[w] != c) ps.push_back(walk_chain(g, v, w, stop));
      if (ps.size() != 2 || oncycle[ps[0].back()] == c || oncycle[ps[1].back()] == c) continue;
      // arc distance between the two attachments along the ring
      int i0 = -1, i1 = -1, len = static_cast<int>(ring.size());
      for (int i = 0; i < len; ++i) {
        if (ring[i] == attach[0]) i0 = i;
        if (ring[i] == attach[1]) i1 = i;
      }
      int d = std::abs(i0 - i1);
      d = std::min(d, len - d);
      return make_spec(ps[0], ps[1], d + 1);
    }
  }
  fail(Errc::NotCentralStructure, "no theta shape found");
}

}  // namespace genergy
