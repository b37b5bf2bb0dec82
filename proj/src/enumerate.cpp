#include "genergy/enumerate.hpp"

#include <algorithm>
#include <set>

#include "genergy/canon.hpp"

namespace genergy {

bool has_three_disjoint_cycles(const Graph& g) {
  const auto& cyc = all_cycles(g).cycles;
  std::vector<std::vector<char>> mask;
  for (const auto& c : cyc) {
    std::vector<char> s(g.n, 0);
    for (int v : c) s[v] = 1;
    mask.push_back(std::move(s));
  }
  auto disjoint = [&](std::size_t i, std::size_t j) {
    for (int v = 0; v < g.n; ++v)
      if (mask[i][v] && mask[j][v]) return false;
    return true;
  };
  for (std::size_t i = 0; i < cyc.size(); ++i)
    for (std::size_t j = i + 1; j < cyc.size(); ++j) {
      if (!disjoint(i, j)) continue;
      for (std::size_t k = j + 1; k < cyc.size(); ++k)
        if (disjoint(i, k) && disjoint(j, k)) return true;
    }
  return false;
}

std::vector<FamilySpec> enumerate_central(int n, std::optional<std::array<int, 3>> cycle_filter) {
  std::vector<FamilySpec> out;
  if (n < 13) return out;
  std::array<int, 3> want{};
  if (cycle_filter) {
    want = *cycle_filter;
    std::sort(want.begin(), want.end());
  }
  auto cycles_ok = [&](int a, int b, int k) {
    if (!cycle_filter) return true;
    std::array<int, 3> got{a, b, k};
    std::sort(got.begin(), got.end());
    return got == want;
  };
  std::set<std::string> seen;
  auto emit = [&](FamilySpec s) {
    std::string key = canonical_form(build(s));
    if (seen.insert(std::move(key)).second) out.push_back(s);
  };
  // Theta_II: arm pairs (cycle, path) in non-decreasing order
  for (int a = 4; a + 8 + 6 <= n + 5; a += 2)
    for (int b = a; a + b + 4 + 6 <= n + 5; b += 2)
      for (int k = b; a + b + k + 6 <= n + 5; k += 2) {
        if (!cycles_ok(a, b, k)) continue;
        int rest = n + 5 - a - b - k;
        for (int l1 = 2; l1 <= rest - 4; ++l1)
          for (int l2 = 2; l2 <= rest - l1 - 2; ++l2) {
            int l3 = rest - l1 - l2;
            std::array<std::pair<int, int>, 3> arms{{{a, l1}, {b, l2}, {k, l3}}};
            if (!std::is_sorted(arms.begin(), arms.end())) continue;  // one representative per arm multiset
            emit(FamilySpec{FamilyKind::ThetaII, n, a, b, k, l1, l2, l3, 0});
          }
      }
  // Theta_I: middle (b, lc), end pairs (a, l1) <= (k, l2)
  for (int b = 4; b + 8 + 4 <= n + 4; b += 2)
    for (int a = 4; a + b + 4 + 4 <= n + 4; a += 2)
      for (int k = a; a + b + k + 4 <= n + 4; k += 2) {
        if (!cycles_ok(a, b, k)) continue;
        int rest = n + 4 - a - b - k;
        for (int l1 = 2; l1 <= rest - 2; ++l1) {
          int l2 = rest - l1;
          if (std::pair<int, int>{a, l1} > std::pair<int, int>{k, l2}) continue;
          for (int lc = 1; lc <= b / 2 + 1; ++lc)
            emit(FamilySpec{FamilyKind::ThetaI, n, a, b, k, l1, l2, 0, lc});
        }
      }
  return out;
}

std::vector<Graph> grow_pendant_layer(const std::vector<Graph>& layer) {
  std::vector<Graph> next;
  std::set<std::string> seen;
  for (const Graph& g : layer) {
    for (int v = 0; v < g.n; ++v) {
      Graph h = g;
      h.n += 1;
      h.adj.emplace_back();
      if (!h.labels.empty()) h.labels.push_back("tree");
      h.add_edge(v, h.n - 1);
      if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
    }
  }
  return next;
}

std::vector<Graph> enumerate_full(int n, int cap) {
  if (n > cap) fail(Errc::TooLarge, "enumerate_full: order exceeds cap " + std::to_string(cap));
  std::vector<Graph> current;
  for (int m = 13; m <= n; ++m) {
    std::vector<Graph> layer = grow_pendant_layer(current);
    for (const FamilySpec& s : enumerate_central(m)) layer.push_back(build(s));
    std::set<std::string> level_seen;
    std::vector<Graph> dedup;
    for (Graph& g : layer)
      if (level_seen.insert(canonical_form(g)).second) dedup.push_back(std::move(g));
    current = std::move(dedup);
  }
  return current;
}

}  // namespace genergy
