#include "genergy/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "genergy/canon.hpp"
#include "json.hpp"

namespace genergy {

int VerifyReport::proved_failures() const {
  int f = 0;
  for (const auto& c : claims)
    if (c.proved && !c.pass) ++f;
  return f;
}

int VerifyReport::total_failures() const {
  int f = 0;
  for (const auto& c : claims)
    if (!c.pass) ++f;
  return f;
}

void VerifyReport::merge(VerifyReport other) {
  if (title.empty())
    title = other.title;
  else if (!other.title.empty())
    title += "+" + other.title;
  for (auto& c : other.claims) claims.push_back(std::move(c));
}

std::string VerifyReport::to_markdown() const {
  std::ostringstream os;
  os << "# Verification report: " << title << "\n\n";
  os << "- claims: " << claims.size() << "\n";
  os << "- failures (proved): " << proved_failures() << "\n";
  os << "- failures (total, incl. reported-only): " << total_failures() << "\n\n";
  os << "| id | lhs | rhs | expected | actual | pass | severity |\n";
  os << "|----|-----|-----|----------|--------|------|----------|\n";
  for (const auto& c : claims) {
    os << "| " << c.id << " | " << c.lhs << " | " << c.rhs << " | " << c.expected << " | " << c.actual
       << " | " << (c.pass ? "yes" : "NO") << " | " << (c.proved ? "proved" : "reported") << " |\n";
  }
  bool any_notes = false;
  for (const auto& c : claims)
    if (!c.note.empty()) any_notes = true;
  if (any_notes) {
    os << "\n## Notes\n";
    for (const auto& c : claims)
      if (!c.note.empty()) os << "- **" << c.id << "**: " << c.note << "\n";
  }
  return os.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["title"] = title;
  j["proved_failures"] = proved_failures();
  j["total_failures"] = total_failures();
  auto& arr = j["claims"] = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json e;
    e["id"] = c.id;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["pass"] = c.pass;
    e["severity"] = c.proved ? "proved" : "reported";
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  return j.dump(2);
}

namespace {

BSeq bseq_cached(const Graph& g) {
  thread_local std::unordered_map<std::string, BSeq> cache;
  std::string key = canonical_form(g, 64);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  BSeq s = b_sequence(charpoly_recursive(g), is_bipartite(g));
  cache.emplace(std::move(key), s);
  return s;
}

std::string failure_artifacts(const Graph& gl, const Graph& gr, const QuasiOrd& q) {
  std::ostringstream os;
  os << "lhs=" << to_graph6(gl) << " rhs=" << to_graph6(gr) << " b(lhs)=" << bseq_cached(gl).to_string()
     << " b(rhs)=" << bseq_cached(gr).to_string() << " first_witness=" << q.first_witness();
  return os.str();
}

ClaimInstance compare_claim(const std::string& id, const FamilySpec& lhs, const FamilySpec& rhs,
                            bool strict, bool proved = true) {
  ClaimInstance c;
  c.id = id;
  c.lhs = lhs.to_string();
  c.rhs = rhs.to_string();
  c.expected = strict ? "prec" : "preceq";
  c.proved = proved;
  Graph gl = build(lhs), gr = build(rhs);
  QuasiOrd q = compare_bseq(bseq_cached(gl), bseq_cached(gr));
  c.actual = relation_name(q.relation);
  c.pass = strict ? q.relation == Relation::StrictlyLess : preceq(q);
  if (!c.pass) c.note = failure_artifacts(gl, gr, q);
  return c;
}

const std::vector<int> kCycleGrid = {4, 6, 8, 10};
constexpr int kMaxN = 28;
constexpr int kMinTheoremN = 20;  // the section-3 theorems assume orders of at least 20

}  // namespace

VerifyReport verify_lemma_3_3() {
  VerifyReport rep;
  rep.title = "L3.3";
  for (int a : kCycleGrid)
    for (int k : kCycleGrid) {
      if (k < a) continue;
      for (int b : kCycleGrid)
        for (int l1 = 2; l1 <= 8; ++l1)
          for (int l2 = 2; l2 <= 8; ++l2) {
            if (a == k && l2 < l1) continue;
            int n = a + b + k + l1 + l2 - 4;
            if (n > kMaxN) continue;
            for (int lc = 1; lc <= b / 2 + 1; ++lc) {
              FamilySpec src{FamilyKind::ThetaI, n, a, b, k, l1, l2, 0, lc};
              FamilySpec dst{FamilyKind::ThetaI, n, a, b, k, l1, l2, 0, 2};
              std::string id = lc == 1 ? "L3.3/case1" : (lc == 2 ? "L3.3/same" : "L3.3/case2");
              rep.add(compare_claim(id, src, dst, false));
            }
          }
    }
  return rep;
}

namespace {

struct Arm {
  int c, l;
};

// Slot order a >= k >= b (the case-analysis convention), ties broken by the shorter attachment path
// first, matching the per-subcase layouts of the case analysis.
void slot_theta_ii(std::array<Arm, 3>& arms) {
  std::sort(arms.begin(), arms.end(), [](const Arm& x, const Arm& y) {
    if (x.c != y.c) return x.c > y.c;
    return x.l < y.l;
  });
}

std::string t34_subcase(int a, int b, int k, int /*l1*/, int l2, int /*l3*/, bool c1, bool c2, bool c3) {
  bool all6 = a == 6 && b == 6 && k == 6;
  int cs = (c1 ? 0 : 1) + (c2 ? 0 : 2) + (c3 ? 0 : 4);
  int case_no = 0;
  switch (cs) {
    case 0: case_no = 1; break;
    case 1: case_no = 2; break;
    case 4: case_no = 3; break;
    case 2: case_no = 4; break;
    case 5: case_no = 5; break;
    case 3: case_no = 6; break;
    case 6: case_no = 7; break;
    case 7: case_no = 8; break;
  }
  auto label = [&](const char* sub) { return "T3.4/case" + std::to_string(case_no) + (sub[0] ? std::string("/sub") + sub : ""); };
  switch (case_no) {
    case 1: return label(l2 == 3 ? "1.3" : "1.1");
    case 2:
      if (all6) return label("");
      if (a == 6 && k == 6) return label("2.1");
      if (a == 6 && k == 4) return label("2.2");
      return label("2.3");
    case 3:
      if (a <= 6) return label("");
      return label(k == 6 ? "3.1" : "3.2");
    case 4:
      if (b == 6) return label(l2 == 3 ? "4.1" : "4.2");
      return label(l2 == 5 ? "4.3" : "4.4");
    case 5:
      if (all6) return label("");
      if (a == 6 && k == 6) return label("5.1");
      if (a == 6 && k == 4) return label("5.2");
      return label("5.3");
    case 6:
      if (all6) return label("");
      if (a == 6 && k == 6) return label("6.1");
      if (a == 6 && k == 4) return label("6.2");
      return label("6.3");
    case 7:
      if (a <= 6) return label("");
      if (k == 6 && b == 6) return label("7.1");
      if (k == 6 && b == 4) return label("7.2");
      return label("7.3");
    case 8:
      if (all6) return label("");
      if (a == 6 && k == 6) return label("8.1");
      if (a == 6 && k == 4) return label("8.2");
      return label("8.3");
  }
  return label("");
}

}  // namespace

VerifyReport verify_theorem_3_4() {
  VerifyReport rep;
  rep.title = "T3.4";
  std::set<std::string> seen;
  for (int a : kCycleGrid)
    for (int b : kCycleGrid)
      for (int k : kCycleGrid)
        for (int l1 = 2; l1 <= 8; ++l1)
          for (int l2 = 2; l2 <= 8; ++l2)
            for (int l3 = 2; l3 <= 8; ++l3) {
              int n = a + b + k + l1 + l2 + l3 - 5;
              if (n < kMinTheoremN || n > kMaxN) continue;
              std::array<Arm, 3> arms{{{a, l1}, {b, l2}, {k, l3}}};
              slot_theta_ii(arms);
              // one representative per arm multiset
              std::ostringstream key;
              for (const Arm& x : arms) key << x.c << "," << x.l << ";";
              if (!seen.insert(key.str()).second) continue;
              int A = arms[0].c, L1 = arms[0].l;
              int K = arms[1].c, L3 = arms[1].l;
              int B = arms[2].c, L2 = arms[2].l;
              FamilySpec src{FamilyKind::ThetaII, n, A, B, K, L1, L2, L3, 0};
              if (gamma_classify(src).in_gamma()) continue;
              bool c1 = L1 + A - 2 >= 7, c2 = L2 + B - 3 >= 7, c3 = L3 + K - 2 >= 7;
              std::string id = t34_subcase(A, B, K, L1, L2, L3, c1, c2, c3);
              int t1 = A + L1 - 6, t2 = B + L2 - 6, t3 = K + L3 - 6;
              if (t1 < 2 || t2 < 2 || t3 < 2) {
                ClaimInstance c;
                c.id = id + "/unmappable";
                c.lhs = src.to_string();
                c.rhs = "-";
                c.expected = "report";
                c.actual = "target outside family";
                c.pass = false;
                c.proved = false;
                rep.add(std::move(c));
                continue;
              }
              FamilySpec dst{FamilyKind::ThetaII, n, 6, 6, 6, t1, t2, t3, 0};
              rep.add(compare_claim(id, src, dst, false));
            }
  // Pinned instances for the regions the deterministic slotting or the
  // n <= 28 cap starves: subcase 1.3 needs n >= 29, and the 6.2/6.3 regions
  // mostly classify under other (equally valid) case labels.
  auto pinned = [&](const char* sub, int a, int b, int k, int l1, int l2, int l3) {
    int n = a + b + k + l1 + l2 + l3 - 5;
    FamilySpec src{FamilyKind::ThetaII, n, a, b, k, l1, l2, l3, 0};
    FamilySpec dst{FamilyKind::ThetaII, n, 6, 6, 6, a + l1 - 6, b + l2 - 6, k + l3 - 6, 0};
    rep.add(compare_claim(std::string("T3.4/") + sub + "(pinned)", src, dst, false));
  };
  pinned("case1/sub1.3", 8, 8, 8, 4, 3, 3);
  pinned("case1/sub1.3", 8, 8, 8, 5, 3, 3);
  pinned("case1/sub1.3", 8, 8, 8, 4, 3, 4);
  pinned("case6/sub6.2", 6, 4, 4, 2, 4, 6);
  pinned("case6/sub6.2", 6, 4, 4, 2, 4, 7);
  pinned("case6/sub6.2", 6, 4, 4, 2, 5, 6);
  pinned("case6/sub6.3", 4, 4, 4, 4, 4, 6);
  pinned("case6/sub6.3", 4, 4, 4, 4, 4, 7);
  pinned("case6/sub6.3", 4, 4, 4, 4, 5, 6);
  return rep;
}

VerifyReport verify_lemmas_3_5_3_6_3_9() {
  VerifyReport rep;
  rep.title = "L3.5+L3.6+L3.9";
  for (int n = 18; n <= 26; ++n) {
    // L3.5: Theta_II(n;6,6,6;l1,l2,l3) < Theta_II(n;6,6,6;l1,l2+l3-2,2)
    int sum = n - 13;  // l1+l2+l3
    for (int l1 = 2; l1 <= sum - 4; ++l1)
      for (int l2 = 2; l2 <= sum - l1 - 2; ++l2) {
        int l3 = sum - l1 - l2;
        if (l3 < l2) continue;
        if (std::min(l2, l3) == 2) continue;  // target isomorphic to source
        FamilySpec src{FamilyKind::ThetaII, n, 6, 6, 6, l1, l2, l3, 0};
        FamilySpec dst{FamilyKind::ThetaII, n, 6, 6, 6, l1, l2 + l3 - 2, 2, 0};
        rep.add(compare_claim("L3.5", src, dst, true));
      }
    // L3.6: Theta_II(n;6,6,6;l1,l2,2) < Theta_II(n;6,6,6;l1+l2-2,2,2)
    int sum2 = n - 15;  // l1+l2
    for (int l1 = 2; 2 * l1 <= sum2; ++l1) {
      int l2 = sum2 - l1;
      if (std::min(l1, l2) == 2) continue;
      FamilySpec src{FamilyKind::ThetaII, n, 6, 6, 6, l1, l2, 2, 0};
      FamilySpec dst{FamilyKind::ThetaII, n, 6, 6, 6, l1 + l2 - 2, 2, 2, 0};
      rep.add(compare_claim("L3.6", src, dst, true));
    }
    // L3.9: Theta_I(n;6,6,6;l1,l2;2) < Theta_I(n;6,6,6;l1+l2-2,2;2)
    int sum3 = n - 14;  // l1+l2
    for (int l2 = 2; 2 * l2 <= sum3; ++l2) {
      int l1 = sum3 - l2;
      if (std::min(l1, l2) == 2) continue;
      FamilySpec src{FamilyKind::ThetaI, n, 6, 6, 6, l1, l2, 0, 2};
      FamilySpec dst{FamilyKind::ThetaI, n, 6, 6, 6, l1 + l2 - 2, 2, 0, 2};
      rep.add(compare_claim("L3.9", src, dst, true));
    }
  }
  return rep;
}

VerifyReport verify_lemma_3_10() {
  VerifyReport rep;
  rep.title = "L3.10";
  for (int n = kMinTheoremN; n <= kMaxN; ++n) {
    int l1 = n - 16, l = n - 17;
    FamilySpec src{FamilyKind::ThetaI, n, 6, 6, 6, l1, 2, 0, 2};
    FamilySpec dst{FamilyKind::ThetaII, n, 6, 6, 6, l, 2, 2, 0};
    if (l != 5) {
      rep.add(compare_claim("L3.10/l" + std::to_string(l), src, dst, true));
    } else {
      // the computed special case: the quasi-order fails and energies decide
      Graph gl = build(src), gr = build(dst);
      QuasiOrd q = compare_bseq(bseq_cached(gl), bseq_cached(gr));
      ClaimInstance rec;
      rec.id = "L3.10/l5-quasiorder";
      rec.lhs = src.to_string();
      rec.rhs = dst.to_string();
      rec.expected = "report";
      rec.actual = relation_name(q.relation);
      rec.pass = true;
      rec.proved = false;
      rec.note = "quasi-order outcome recorded; the derivation resorts to energies here, but the "
                 "exact b-sequences settle it too (the printed expansion lost a nonnegative term)";
      rep.add(std::move(rec));

      ClaimInstance en;
      en.id = "L3.10/l5-energy";
      en.lhs = src.to_string();
      en.rhs = dst.to_string();
      en.expected = "energy<";
      EnergyOrder ord = energy_compare(gl, gr, 1e-6);
      en.actual = energy_order_name(ord);
      en.pass = ord == EnergyOrder::Less;
      EnergyEnclosure e0 = energy_certified(gl, 1e-9), e2 = energy_certified(gr, 1e-9);
      en.note = "certified: E(lhs) in [" + std::to_string(e0.lo.to_double()) + ", " +
                std::to_string(e0.hi.to_double()) + "], E(rhs) in [" +
                std::to_string(e2.lo.to_double()) + ", " + std::to_string(e2.hi.to_double()) + "]";
      rep.add(std::move(en));
    }
  }
  return rep;
}

namespace {

struct T38Target {
  std::string sub;
  int l1p = 0, l2p = 0;
  bool valid = false;
};

T38Target t38_map(int a, int b, int k, int l1, int l2) {
  T38Target t;
  bool d1 = l1 + a - 1 >= 9, d2 = l2 + k - 1 >= 8;
  if (d1 && d2) {
    if (l1 >= 4) {
      t = {"1.1", a + l1 - 6, b + k + l2 - 12, true};
    } else if (l1 == 3 && l2 == 3 && b >= 6) {
      t = {"1.2", a - 3, b + k - 9, true};
    } else if (l1 == 3 && l2 == 3 && b == 4 && k == 6) {
      t = {"1.3", a - 5, 3, true};
    }
  } else if (!d1 && d2) {
    if (a == 6) {
      if (l1 == 3 && l2 == 3) t = {"2.1", 3, b + k - 9, true};
      if (l1 == 3 && l2 == 2) t = {"2.1", 3, b + k - 10, true};
      if (l1 == 2 && l2 == 2) t = {"2.1", 2, b + k - 10, true};
    } else if (a == 4) {
      if (l1 == 5) t = {"2.2", 3, b + k + l2 - 12, true};
      if (l1 == 4) t = {"2.2", 2, b + k + l2 - 12, true};
    }
  } else if (d1 && !d2) {
    if (k == 6 && l2 == 2) t = {"3.1", a + b + l1 - 12, 2, true};
    if (k == 4 && l2 == 4) t = {"3.2", a + b + l1 - 12, 2, true};
  } else {
    if (a == 6) {
      if (l1 == 3) t = {"4.1", 3, b + k + l2 - 12, true};
      if (l1 == 2 && l2 == 2) t = {"4.1", 2, b + k - 10, true};
    } else if (a == 4) {
      if (l1 == 5) t = {"4.2", 3, b + k + l2 - 12, true};
      if (l1 == 4) t = {"4.2", 2, b + k + l2 - 12, true};
    }
  }
  if (t.valid && (t.l1p < 2 || t.l2p < 2)) t.valid = false;
  return t;
}

}  // namespace

VerifyReport verify_theorem_3_8() {
  VerifyReport rep;
  rep.title = "T3.8";
  std::set<std::string> seen;
  for (int a : kCycleGrid)
    for (int b : kCycleGrid)
      for (int k : kCycleGrid)
        for (int l1 = 2; l1 <= 8; ++l1)
          for (int l2 = 2; l2 <= 8; ++l2) {
            int n = a + b + k + l1 + l2 - 4;
            if (n < kMinTheoremN || n > kMaxN) continue;
            // WLOG l1 >= l2; ties put the larger cycle first
            int A = a, K = k, L1 = l1, L2 = l2;
            if (std::pair<int, int>{L1, A} < std::pair<int, int>{L2, K}) {
              std::swap(A, K);
              std::swap(L1, L2);
            }
            std::ostringstream key;
            key << A << "," << L1 << ";" << b << ";" << K << "," << L2;
            if (!seen.insert(key.str()).second) continue;
            FamilySpec src{FamilyKind::ThetaI, n, A, b, K, L1, L2, 0, 2};
            if (gamma_classify(src).in_gamma()) continue;
            if (A == 6 && b == 6 && K == 6) {
              // already in the target family; nothing to map
              rep.add(compare_claim("T3.8/target-family", src, src, false));
              continue;
            }
            T38Target t = t38_map(A, b, K, L1, L2);
            if (!t.valid) {
              // the printed substitution leaves the target family (l' < 2);
              // check the end-to-end Theorem 3.11 claim directly instead
              FamilySpec dst{FamilyKind::ThetaII, n, 6, 6, 6, n - 17, 2, 2, 0};
              ClaimInstance c = compare_claim("T3.8/printed-map-gap", src, dst, false, false);
              c.note = (t.sub.empty() ? std::string("no printed subcase covers this tuple; ")
                                      : "printed subcase " + t.sub + " substitution gives l' < 2; ") +
                       "compared against P_n^{6,6,6} directly. " + c.note;
              rep.add(std::move(c));
              continue;
            }
            FamilySpec dst{FamilyKind::ThetaI, n, 6, 6, 6, t.l1p, t.l2p, 0, 2};
            rep.add(compare_claim("T3.8/sub" + t.sub, src, dst, false));
          }
  return rep;
}

VerifyReport verify_background() {
  VerifyReport rep;
  rep.title = "background";
  const std::set<int> cycle_wins{7, 9, 10, 11, 13, 15};
  for (int n = 7; n <= 16; ++n) {
    ClaimInstance c;
    c.id = "T1.2/n" + std::to_string(n);
    c.lhs = "cycle:" + std::to_string(n);
    c.rhs = "pna:" + std::to_string(n) + ":6";
    bool cycle_greater = cycle_wins.count(n) > 0;
    c.expected = cycle_greater ? "E(C_n) > E(P_n^6)" : "E(C_n) < E(P_n^6)";
    EnergyOrder ord = energy_compare(cycle(n), p_n_a(n, 6), 1e-6);
    c.actual = energy_order_name(ord);
    c.pass = ord == (cycle_greater ? EnergyOrder::Greater : EnergyOrder::Less);
    rep.add(std::move(c));
  }
  {
    ClaimInstance c;
    c.id = "T1.4/R";
    c.lhs = "pnab:20:6,6";
    c.rhs = "rab:20:10,10";
    c.expected = "E(P^{6,6}_20) > E(R_{10,10})";
    EnergyOrder ord = energy_compare(p_n_ab(20, 6, 6), r_ab(10, 10), 1e-6);
    c.actual = energy_order_name(ord);
    c.pass = ord == EnergyOrder::Greater && is_r_ab_exceptional(10, 10);
    rep.add(std::move(c));
  }
  // full bipartite-unicyclic scans at desk scale: P_n^6 beats everything
  // except possibly C_n, whose side of the split is checked above
  for (int n : {10, 12}) {
    std::set<std::string> keys;
    std::vector<Graph> result;
    for (int c = 4; c <= n; c += 2) {
      Graph base = cycle(c);
      std::vector<Graph> cur{base};
      for (int m = c; m < n; ++m) cur = grow_pendant_layer(cur);
      for (Graph& g : cur)
        if (keys.insert(canonical_form(g)).second) result.push_back(std::move(g));
    }
    Graph best = p_n_a(n, 6);
    std::string best_key = canonical_form(best);
    BSeq best_b = bseq_cached(best);
    int checked = 0, energy_decided = 0;
    bool ok = true;
    std::string bad;
    for (const Graph& g : result) {
      if (canonical_form(g) == best_key) continue;
      if (g.n == n && g.edge_count() == n && canonical_form(g) == canonical_form(cycle(n))) continue;
      QuasiOrd q = compare_bseq(bseq_cached(g), best_b);
      ++checked;
      if (q.relation == Relation::StrictlyLess) continue;
      ++energy_decided;
      if (energy_compare(g, best, 1e-6) != EnergyOrder::Less) {
        ok = false;
        bad = to_graph6(g);
        break;
      }
    }
    ClaimInstance c;
    c.id = "T1.2/unicyclic-scan-n" + std::to_string(n);
    c.lhs = "all bipartite unicyclic on " + std::to_string(n) + " vertices (" + std::to_string(checked) + ")";
    c.rhs = "pna:" + std::to_string(n) + ":6";
    c.expected = "E(G) < E(P_n^6) for G != C_n";
    c.actual = ok ? "all below (" + std::to_string(energy_decided) + " via certified energies)" : "counterexample " + bad;
    c.pass = ok;
    rep.add(std::move(c));
  }
  // n = 16 spot check: C_16 plus pseudo-random unicyclic graphs
  {
    std::vector<Graph> samples{cycle(16)};
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto rnd = [&state](int mod) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<int>((state >> 33) % mod);
    };
    std::set<std::string> keys;
    while (samples.size() < 51) {
      int c = 4 + 2 * rnd(7);  // even cycle length 4..16
      if (c > 16) continue;
      Graph g = cycle(c);
      while (g.n < 16) {
        int at = rnd(g.n);
        g.n += 1;
        g.adj.emplace_back();
        g.add_edge(at, g.n - 1);
      }
      if (canonical_form(g) == canonical_form(p_n_a(16, 6))) continue;
      if (keys.insert(canonical_form(g)).second) samples.push_back(std::move(g));
    }
    Graph best = p_n_a(16, 6);
    BSeq best_b = bseq_cached(best);
    bool ok = true;
    std::string bad;
    for (const Graph& g : samples) {
      QuasiOrd q = compare_bseq(bseq_cached(g), best_b);
      if (q.relation == Relation::StrictlyLess) continue;
      if (energy_compare(g, best, 1e-6) != EnergyOrder::Less) {
        ok = false;
        bad = to_graph6(g);
        break;
      }
    }
    ClaimInstance c;
    c.id = "T1.2/spot-n16";
    c.lhs = "C_16 + 50 random unicyclic";
    c.rhs = "pna:16:6";
    c.expected = "E(G) < E(P_16^6)";
    c.actual = ok ? "all below" : "counterexample " + bad;
    c.pass = ok;
    rep.add(std::move(c));
  }
  return rep;
}

VerifyReport verify_tree_flattening(int n) {
  VerifyReport rep;
  rep.title = "L3.1+L3.2(n=" + std::to_string(n) + ")";
  std::vector<Graph> all = enumerate_full(n);
  // central structures of order n, grouped by (kind, sorted cycle lengths)
  std::map<std::string, std::vector<Graph>> central;
  for (const FamilySpec& s : enumerate_central(n)) {
    std::array<int, 3> cyc{s.a, s.b, s.k};
    std::sort(cyc.begin(), cyc.end());
    std::string key = std::string(family_kind_name(s.kind)) + ":" + std::to_string(cyc[0]) + "," +
                      std::to_string(cyc[1]) + "," + std::to_string(cyc[2]);
    central[key].push_back(build(s));
  }
  int planted = 0, matched = 0;
  std::string bad;
  for (const Graph& g : all) {
    Graph core = two_core(g);
    if (core.n == g.n) continue;  // central structure, nothing to flatten
    ++planted;
    FamilySpec cs = recognize_central(core);
    std::array<int, 3> cyc{cs.a, cs.b, cs.k};
    std::sort(cyc.begin(), cyc.end());
    std::string key = std::string(family_kind_name(cs.kind)) + ":" + std::to_string(cyc[0]) + "," +
                      std::to_string(cyc[1]) + "," + std::to_string(cyc[2]);
    bool found = false;
    BSeq gb = bseq_cached(g);
    for (const Graph& h : central[key]) {
      QuasiOrd q = compare_bseq(gb, bseq_cached(h));
      if (q.relation == Relation::StrictlyLess) {
        found = true;
        break;
      }
    }
    if (found) {
      ++matched;
    } else if (bad.empty()) {
      bad = to_graph6(g) + " (class " + key + ")";
    }
  }
  ClaimInstance c;
  c.id = "L3.1+L3.2/n" + std::to_string(n);
  c.lhs = std::to_string(planted) + " planted-tree members of order " + std::to_string(n);
  c.rhs = "central structures of the same class";
  c.expected = "prec (some central structure dominates strictly)";
  c.actual = std::to_string(matched) + "/" + std::to_string(planted) + " dominated";
  c.pass = matched == planted;
  if (!c.pass) c.note = "first unmatched: " + bad;
  rep.add(std::move(c));
  return rep;
}

VerifyReport conjecture_scan(int n, bool gamma_energies) {
  VerifyReport rep;
  rep.title = "scan(n=" + std::to_string(n) + ")";
  if (n < 20) {
    ClaimInstance c;
    c.id = "scan/n" + std::to_string(n);
    c.lhs = c.rhs = "-";
    c.expected = "report";
    c.actual = "conjecture range starts at n = 20; nothing to scan";
    c.pass = true;
    c.proved = false;
    rep.add(std::move(c));
    return rep;
  }
  Graph pmax = p_n_666(n);
  std::string pmax_key = canonical_form(pmax);
  BSeq pb = bseq_cached(pmax);
  int less = 0, equal = 0, incomparable = 0, greater = 0;
  std::vector<std::string> incomparable_gamma;
  for (const FamilySpec& s : enumerate_central(n)) {
    Graph g = build(s);
    QuasiOrd q = compare_bseq(bseq_cached(g), pb);
    GammaClass gamma = gamma_classify(s);
    bool is_pmax = canonical_form(g) == pmax_key;
    switch (q.relation) {
      case Relation::StrictlyLess: ++less; break;
      case Relation::Equal: ++equal; break;
      case Relation::Incomparable: ++incomparable; break;
      case Relation::StrictlyGreater: ++greater; break;
    }
    if (q.relation == Relation::Equal && !is_pmax) {
      ClaimInstance c;
      c.id = "scan/equal-but-not-iso";
      c.lhs = s.to_string();
      c.rhs = "p666:" + std::to_string(n);
      c.expected = "Equal only for P_n^{6,6,6} itself";
      c.actual = "Equal";
      c.pass = false;
      c.note = failure_artifacts(g, pmax, q);
      rep.add(std::move(c));
    }
    if (!gamma.in_gamma() && !is_pmax && q.relation != Relation::StrictlyLess) {
      ClaimInstance c;
      c.id = "scan/non-gamma-not-less";
      c.lhs = s.to_string();
      c.rhs = "p666:" + std::to_string(n);
      c.expected = "prec";
      c.actual = relation_name(q.relation);
      c.pass = false;
      c.note = failure_artifacts(g, pmax, q);
      rep.add(std::move(c));
    }
    if (q.relation == Relation::Incomparable) {
      if (!gamma.in_gamma()) {
        ClaimInstance c;
        c.id = "scan/incomparable-outside-gamma";
        c.lhs = s.to_string();
        c.rhs = "p666:" + std::to_string(n);
        c.expected = "incomparable set inside Gamma1 u Gamma2";
        c.actual = "Incomparable, " + gamma.to_string();
        c.pass = false;
        c.note = failure_artifacts(g, pmax, q);
        rep.add(std::move(c));
      } else {
        incomparable_gamma.push_back(s.to_string() + " [" + gamma.to_string() + "]");
        if (gamma_energies) {
          ClaimInstance c;
          c.id = "scan/gamma-energy";
          c.lhs = s.to_string();
          c.rhs = "p666:" + std::to_string(n);
          c.expected = "report";
          EnergyOrder ord = energy_compare(g, pmax, 1e-6);
          c.actual = "E comparison: " + std::string(energy_order_name(ord));
          c.pass = true;
          c.proved = false;
          rep.add(std::move(c));
        }
      }
    }
    if (q.relation == Relation::StrictlyGreater) {
      ClaimInstance c;
      c.id = "scan/greater";
      c.lhs = s.to_string();
      c.rhs = "p666:" + std::to_string(n);
      c.expected = gamma.in_gamma() ? "report" : "prec";
      c.actual = "StrictlyGreater (would refute the conjecture)";
      c.pass = false;
      c.proved = !gamma.in_gamma();
      c.note = failure_artifacts(g, pmax, q);
      rep.add(std::move(c));
    }
  }
  ClaimInstance sum;
  sum.id = "scan/summary-n" + std::to_string(n);
  sum.lhs = "all central structures on " + std::to_string(n) + " vertices";
  sum.rhs = "p666:" + std::to_string(n);
  sum.expected = "tabulation";
  sum.actual = "less=" + std::to_string(less) + " equal=" + std::to_string(equal) +
               " incomparable=" + std::to_string(incomparable) + " greater=" + std::to_string(greater);
  sum.pass = equal == 1 && greater == 0;
  if (!incomparable_gamma.empty()) {
    sum.note = "incomparable (all in Gamma): ";
    for (std::size_t i = 0; i < incomparable_gamma.size(); ++i)
      sum.note += (i ? "; " : "") + incomparable_gamma[i];
  }
  rep.add(std::move(sum));
  return rep;
}

VerifyReport run_verify(const std::vector<std::string>& ids, int jobs) {
  std::vector<std::function<VerifyReport()>> tasks;
  bool all = std::find(ids.begin(), ids.end(), "all") != ids.end();
  auto want = [&](const std::string& name) {
    return all || std::find(ids.begin(), ids.end(), name) != ids.end();
  };
  if (want("L3.3")) tasks.push_back(&verify_lemma_3_3);
  if (want("T3.4")) tasks.push_back(&verify_theorem_3_4);
  if (want("L3.5") || want("L3.6") || want("L3.9")) tasks.push_back(&verify_lemmas_3_5_3_6_3_9);
  if (want("L3.10")) tasks.push_back(&verify_lemma_3_10);
  if (want("T3.8")) tasks.push_back(&verify_theorem_3_8);
  if (want("background")) tasks.push_back(&verify_background);
  if (want("identities")) tasks.push_back(&verify_displayed_identities);
  bool scan_given = false, flatten_given = false;
  for (const auto& id : ids) {
    if (id.rfind("scan:", 0) == 0) {
      int n = std::stoi(id.substr(5));
      tasks.push_back([n] { return conjecture_scan(n); });
      scan_given = true;
    } else if (id.rfind("flatten:", 0) == 0) {
      int n = std::stoi(id.substr(8));
      tasks.push_back([n] { return verify_tree_flattening(n); });
      flatten_given = true;
    }
  }
  if (all && !scan_given) tasks.push_back([] { return conjecture_scan(20); });
  if (all && !flatten_given) tasks.push_back([] { return verify_tree_flattening(14); });
  if (tasks.empty()) fail(Errc::BadParam, "no recognized claim ids");
  std::vector<VerifyReport> results(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mu;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= tasks.size()) return;
            i = next++;
          }
          results[i] = tasks[i]();
        }
      });
    for (auto& th : pool) th.join();
  }
  VerifyReport out;
  for (auto& r : results) out.merge(std::move(r));
  return out;
}

}  // namespace genergy
