#include "genergy/quasiorder.hpp"

#include <algorithm>

namespace genergy {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::StrictlyLess: return "StrictlyLess";
    case Relation::StrictlyGreater: return "StrictlyGreater";
    case Relation::Incomparable: return "Incomparable";
  }
  return "?";
}

QuasiOrd compare_bseq(const BSeq& b1, const BSeq& b2) {
  if (b1.n != b2.n) fail(Errc::OrderMismatch, "b-sequence comparison requires equal graph orders");
  QuasiOrd q;
  std::size_t len = std::max(b1.b.size(), b2.b.size());
  bool some_less = false, some_greater = false;
  std::vector<int> less_idx, greater_idx;
  for (std::size_t i = 0; i < len; ++i) {
    const BigInt& x = b1.at(static_cast<int>(i));
    const BigInt& y = b2.at(static_cast<int>(i));
    if (x < y) {
      some_less = true;
      less_idx.push_back(static_cast<int>(i));
    } else if (x > y) {
      some_greater = true;
      greater_idx.push_back(static_cast<int>(i));
    }
  }
  if (!some_less && !some_greater) {
    q.relation = Relation::Equal;
  } else if (some_less && !some_greater) {
    q.relation = Relation::StrictlyLess;
    q.witness_indices = std::move(less_idx);
  } else if (!some_less && some_greater) {
    q.relation = Relation::StrictlyGreater;
    q.witness_indices = std::move(greater_idx);
  } else {
    q.relation = Relation::Incomparable;
    q.witness_indices = std::move(less_idx);
    q.witness_indices.insert(q.witness_indices.end(), greater_idx.begin(), greater_idx.end());
    std::sort(q.witness_indices.begin(), q.witness_indices.end());
  }
  return q;
}

QuasiOrd compare(const Graph& g1, const Graph& g2) {
  if (g1.n != g2.n) fail(Errc::OrderMismatch, "compare: graphs of different order");
  if (!is_bipartite(g1) || !is_bipartite(g2)) fail(Errc::NotBipartite, "compare: both graphs must be bipartite");
  return compare_bseq(b_sequence(g1), b_sequence(g2));
}

namespace {

// b-sequence of a disjoint union of paths, via matching counts.
BSeq path_union_bseq(const std::vector<int>& orders) {
  BSeq acc;
  acc.n = 0;
  acc.b = {BigInt(1)};
  for (int p : orders) {
    // matchings of P_p by size: m(P_p) entries C(p-k, k)
    BSeq pb;
    pb.n = p;
    pb.b.resize(p / 2 + 1);
    for (int k = 0; k <= p / 2; ++k) {
      BigInt c = 1;
      for (int t = 0; t < k; ++t) {
        c *= p - k - t;
        c /= t + 1;
      }
      pb.b[k] = c;
    }
    acc = bseq_convolve(acc, pb);
  }
  return acc;
}

}  // namespace

PathChainReport verify_path_chain(int n) {
  if (n < 4) fail(Errc::BadParam, "verify_path_chain requires n >= 4");
  PathChainReport rep;
  rep.n = n;
  int k = n / 4;
  std::vector<std::vector<int>> chain;
  chain.push_back({n});
  for (int j = 2; j <= 2 * k; j += 2) chain.push_back({j, n - j});
  for (int j = 2 * k + 1; j >= 1; j -= 2) chain.push_back({j, n - j});
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    PathChainStep step;
    step.left = chain[i];
    step.right = chain[i + 1];
    QuasiOrd q = compare_bseq(path_union_bseq(step.left), path_union_bseq(step.right));
    step.relation = q.relation;
    std::vector<int> lm = step.left, rm = step.right;
    std::sort(lm.begin(), lm.end());
    std::sort(rm.begin(), rm.end());
    step.ok = (lm == rm) ? (q.relation == Relation::Equal) : (q.relation == Relation::StrictlyGreater);
    rep.all_ok = rep.all_ok && step.ok;
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

bool union_monotonicity_check(const Graph& g0, const Graph& g1, const Graph& g2) {
  if (!is_bipartite(g0) || !is_bipartite(g1) || !is_bipartite(g2))
    fail(Errc::NotBipartite, "union_monotonicity_check: all graphs must be bipartite");
  QuasiOrd pre = compare(g1, g2);
  if (!preceq(pre)) fail(Errc::BadParam, "union_monotonicity_check: g1 must precede g2");
  QuasiOrd post = compare(disjoint_union(g0, g1), disjoint_union(g0, g2));
  return preceq(post);
}

}  // namespace genergy
