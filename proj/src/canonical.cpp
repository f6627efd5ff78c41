#include "permfact/canonical.hpp"

#include <algorithm>

namespace permfact {

DependenceDag dependence_dag(const CycleFactorization& f) {
  int r = f.length();
  if (r > 32) throw ResourceLimit("dependence dag limited to 32 factors");
  DependenceDag dag;
  dag.node_count = r;
  dag.preds.assign(r, 0);
  std::vector<uint32_t> sup(r);
  for (int i = 0; i < r; ++i) sup[i] = f.factors[i].support_mask();
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (sup[i] & sup[j]) {
        dag.edges.emplace_back(i, j);
        dag.preds[j] |= 1u << i;
      }
  return dag;
}

CycleFactorization canonical_form(const CycleFactorization& f) {
  validate(f);
  int r = f.length();
  DependenceDag dag = dependence_dag(f);
  CycleFactorization out;
  out.n = f.n;
  out.factors.reserve(r);
  uint32_t emitted = 0;
  for (int step = 0; step < r; ++step) {
    int best = -1, best_max = 0;
    for (int i = 0; i < r; ++i) {
      if (emitted & (1u << i)) continue;
      if ((dag.preds[i] & ~emitted) != 0) continue;
      int mx = f.factors[i].max_symbol();
      if (best >= 0)
        internal_check(mx != best_max, "two available factors share their maximum symbol");
      if (best < 0 || mx < best_max) {
        best = i;
        best_max = mx;
      }
    }
    internal_check(best >= 0, "dependence dag has no available factor");
    emitted |= 1u << best;
    out.factors.push_back(f.factors[best]);
  }
  return out;
}

bool is_canonical(const CycleFactorization& f) { return canonical_form(f) == f; }

bool equivalent(const CycleFactorization& f, const CycleFactorization& g) {
  if (f.n != g.n) throw AmbientMismatch("equivalent: mismatched ambient sizes");
  return canonical_form(f) == canonical_form(g);
}

long long class_size(const CycleFactorization& f) {
  int r = f.length();
  if (r > 20) throw ResourceLimit("class_size limited to 20 factors");
  DependenceDag dag = dependence_dag(f);
  // count linear extensions by dp over emitted subsets
  std::vector<long long> count(size_t(1) << r, 0);
  count[0] = 1;
  for (uint32_t s = 0; s < (1u << r); ++s) {
    if (!count[s]) continue;
    for (int i = 0; i < r; ++i) {
      if (s & (1u << i)) continue;
      if ((dag.preds[i] & ~s) != 0) continue;
      count[s | (1u << i)] += count[s];
    }
  }
  return count[(size_t(1) << r) - 1];
}

bool is_monotone(const CycleFactorization& f) {
  int prev_max = 0;
  for (const auto& c : f.factors) {
    if (c.length() != 2) return false;
    int mx = c.max_symbol();
    if (mx < prev_max) return false;
    prev_max = mx;
  }
  return true;
}

CycleFactorization monotone_involution(const CycleFactorization& f) {
  if (!is_canonical(f))
    throw PreconditionViolation("monotone_involution requires a trace-minimal representative");
  if (is_monotone(f)) return f;

  int r = f.length();
  int i = -1;
  for (int t = 0; t + 1 < r; ++t)
    if (f.factors[t].max_symbol() > f.factors[t + 1].max_symbol()) {
      i = t;
      break;
    }
  if (i < 0)
    for (int t = 0; t < r; ++t)
      if (f.factors[t].length() != 2) {
        i = t;
        break;
      }
  internal_check(i >= 0, "non-monotone canonical factorization without involution site");

  const Cycle& si = f.factors[i];
  int m = si.max_symbol();
  CycleFactorization out;
  out.n = f.n;
  out.factors.assign(f.factors.begin(), f.factors.begin() + i);

  if (si.length() == 2) {
    // case (1): merge (a m) with the following cycle (a b1..bk), bj < m
    internal_check(i + 1 < r, "transposition case requires a following factor");
    int a = si.min_symbol();
    const Cycle& next = f.factors[i + 1];
    internal_check(next.contains(a) && next.max_symbol() < m,
                   "involution case (1): following factor must contain a with smaller max");
    // rotate next to start at a, then append m
    std::vector<int> syms = next.symbols();
    auto at = std::find(syms.begin(), syms.end(), a);
    std::rotate(syms.begin(), at, syms.end());
    syms.push_back(m);
    out.factors.emplace_back(std::move(syms));
    out.factors.insert(out.factors.end(), f.factors.begin() + i + 2, f.factors.end());
  } else {
    // case (2): split (a b1..bk m) into (a m)(a b1..bk)
    std::vector<int> syms = si.symbols();
    auto at = std::find(syms.begin(), syms.end(), m);
    std::rotate(syms.begin(), at + 1, syms.end());  // (a b1..bk m) -> a first, m removed below
    syms.pop_back();
    int a = syms.front();
    out.factors.emplace_back(std::vector<int>{a, m});
    out.factors.emplace_back(std::move(syms));
    out.factors.insert(out.factors.end(), f.factors.begin() + i + 1, f.factors.end());
  }
  return canonical_form(out);
}

}  // namespace permfact
